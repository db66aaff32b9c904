#include "doctest.h"

#include "shufflekit/shufflekit.h"

#include <memory>
#include <string>
#include <vector>

namespace {

struct WordDel {
    void operator()(sk_word* w) const { sk_word_free(w); }
};
struct SetDel {
    void operator()(sk_wordset* s) const { sk_wordset_free(s); }
};
struct WitnessDel {
    void operator()(sk_witness* w) const { sk_witness_free(w); }
};
struct NfaDel {
    void operator()(sk_nfa* a) const { sk_nfa_free(a); }
};
using WordPtr = std::unique_ptr<sk_word, WordDel>;
using SetPtr = std::unique_ptr<sk_wordset, SetDel>;
using WitnessPtr = std::unique_ptr<sk_witness, WitnessDel>;
using NfaPtr = std::unique_ptr<sk_nfa, NfaDel>;

WordPtr word(const char* text, size_t k = 0) {
    sk_word* w = nullptr;
    REQUIRE(sk_word_parse(text, k, &w) == SK_OK);
    return WordPtr(w);
}

NfaPtr regex(const char* text, size_t k = 2) {
    sk_nfa* a = nullptr;
    REQUIRE(sk_nfa_from_regex(text, k, &a) == SK_OK);
    return NfaPtr(a);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    sk_string_free(s);
    return out;
}

std::string text(const sk_word* w) {
    char* s = nullptr;
    REQUIRE(sk_word_to_string(w, &s) == SK_OK);
    return take(s);
}

std::vector<std::string> items(const sk_wordset* set) {
    std::vector<std::string> out;
    for (size_t i = 0; i < sk_wordset_size(set); ++i) {
        char* s = nullptr;
        REQUIRE(sk_wordset_get(set, i, &s) == SK_OK);
        out.push_back(take(s));
    }
    return out;
}

} // namespace

TEST_CASE("version and error reporting") {
    CHECK(std::string(sk_version()).size() > 0);
    sk_word* w = nullptr;
    CHECK(sk_word_parse("0#1", 0, &w) == SK_ERR_PARSE);
    CHECK(w == nullptr);
    CHECK(std::string(sk_last_error()).size() > 0);
    CHECK(sk_word_parse("012", 2, &w) == SK_ERR_CONTRACT);
    CHECK(sk_word_parse(nullptr, 0, &w) == SK_ERR_INVALID_ARGUMENT);
    CHECK(sk_word_parse("01", 0, nullptr) == SK_ERR_INVALID_ARGUMENT);
    sk_word_free(nullptr);
    sk_string_free(nullptr);
}

TEST_CASE("word operations") {
    auto term = word("term", 36);
    auto hoes = word("hoes", 36);
    sk_word* out = nullptr;
    REQUIRE(sk_word_perfect_shuffle(term.get(), hoes.get(), &out) == SK_OK);
    WordPtr theorems(out);
    CHECK(text(theorems.get()) == "theorems");
    CHECK(sk_word_length(theorems.get()) == 8);

    auto maigre = word("maigre");
    REQUIRE(sk_word_unary("bd", maigre.get(), &out) == SK_OK);
    WordPtr mirage(out);
    CHECK(text(mirage.get()) == "mirage");
    CHECK(sk_word_unary("nope", maigre.get(), &out) == SK_ERR_INVALID_ARGUMENT);

    auto abc = word("abc");
    auto x = word("x");
    CHECK(sk_word_perfect_shuffle(abc.get(), x.get(), &out) == SK_ERR_CONTRACT);

    auto bin = word("01");
    CHECK(sk_word_alphabet(bin.get()) == 2);
    sk_wordset* set = nullptr;
    REQUIRE(sk_word_self_shuffles(bin.get(), 1, &set) == SK_OK);
    SetPtr ssr(set);
    CHECK(items(ssr.get()) == std::vector<std::string>{"0101", "0110", "1001", "1010"});
    CHECK(sk_wordset_get(ssr.get(), 9, nullptr) == SK_ERR_INVALID_ARGUMENT);

    auto zero = word("0", 2);
    auto one = word("1", 2);
    const sk_word* pair[] = {zero.get(), one.get()};
    REQUIRE(sk_word_shuffle_many(pair, 2, &set) == SK_OK);
    SetPtr many(set);
    CHECK(items(many.get()) == std::vector<std::string>{"01", "10"});
    CHECK(sk_word_shuffle_many(pair, 0, &set) == SK_ERR_CONTRACT);
}

TEST_CASE("membership oracles") {
    int found = -1;
    sk_witness* wit = nullptr;
    auto target = word("01001101");
    REQUIRE(sk_member_self(target.get(), &found, &wit) == SK_OK);
    CHECK(found == 1);
    WitnessPtr witness(wit);
    char* s = nullptr;
    REQUIRE(sk_witness_root(witness.get(), &s) == SK_OK);
    CHECK(take(s) == "0101");
    REQUIRE(sk_witness_assignment(witness.get(), &s) == SK_OK);
    CHECK(take(s).size() == 8);

    auto no = word("0110");
    REQUIRE(sk_member_self(no.get(), &found, &wit) == SK_OK);
    CHECK(found == 0);
    CHECK(wit == nullptr);

    auto tern = word("012012");
    REQUIRE(sk_member_self_reverse(tern.get(), &found, &wit) == SK_OK);
    CHECK(found == 0);
    int abelian = -1;
    REQUIRE(sk_is_abelian_square(tern.get(), &abelian) == SK_OK);
    CHECK(abelian == 1);

    auto longw = word("0000000000000000");
    CHECK(sk_member_triple(longw.get(), 0, &found, &wit) == SK_ERR_RESOURCE);
    REQUIRE(sk_member_triple(longw.get(), 30, &found, &wit) == SK_OK);
    CHECK(found == 0);

    auto thm = word("theorems");
    auto t = word("term", 30);
    auto h = word("hoes", 30);
    const sk_word* ops[] = {t.get(), h.get()};
    REQUIRE(sk_member_interleave(thm.get(), ops, 2, &found, &wit) == SK_OK);
    CHECK(found == 1);
    WitnessPtr plain(wit);
    CHECK(sk_witness_root(plain.get(), &s) == SK_ERR_INVALID_ARGUMENT);
    REQUIRE(sk_witness_assignment(plain.get(), &s) == SK_OK);
    CHECK(take(s) == "12121212");
}

TEST_CASE("automata through the C interface") {
    auto a = regex("0+10+");
    auto w = word("010", 2);
    int member = -1;
    REQUIRE(sk_nfa_member(a.get(), w.get(), &member) == SK_OK);
    CHECK(member == 1);
    CHECK(sk_nfa_alphabet(a.get()) == 2);

    sk_wordset* set = nullptr;
    REQUIRE(sk_nfa_enumerate(a.get(), 4, &set) == SK_OK);
    SetPtr lang(set);
    CHECK(items(lang.get()) == std::vector<std::string>{"0010", "010", "0100"});

    sk_nfa* out = nullptr;
    auto b = regex("1*");
    REQUIRE(sk_nfa_binary("shuffle-morphism", regex("0*").get(), b.get(), &out) == SK_OK);
    NfaPtr sh(out);
    REQUIRE(sk_nfa_enumerate(sh.get(), 2, &set) == SK_OK);
    SetPtr all(set);
    CHECK(items(all.get()) == std::vector<std::string>{"", "0", "00", "01", "1", "10", "11"});
    CHECK(sk_nfa_binary("bogus", a.get(), b.get(), &out) == SK_ERR_INVALID_ARGUMENT);
    CHECK(sk_nfa_binary("shuffle", a.get(), regex("2", 3).get(), &out) == SK_ERR_CONTRACT);

    REQUIRE(sk_nfa_unary("pss", regex("01").get(), &out) == SK_OK);
    NfaPtr doubled(out);
    REQUIRE(sk_nfa_enumerate(doubled.get(), 8, &set) == SK_OK);
    SetPtr d(set);
    CHECK(items(d.get()) == std::vector<std::string>{"0011"});

    const char* images[] = {"00", "11"};
    REQUIRE(sk_nfa_morphism(regex("00").get(), images, 2, 2, 1, &out) == SK_OK);
    NfaPtr inv(out);
    REQUIRE(sk_nfa_enumerate(inv.get(), 4, &set) == SK_OK);
    SetPtr i(set);
    CHECK(items(i.get()) == std::vector<std::string>{"0"});

    REQUIRE(sk_nfa_image("bd", regex("(00|11)+").get(), 4, &set) == SK_OK);
    SetPtr img(set);
    CHECK(items(img.get()) == std::vector<std::string>{"00", "0000", "0101", "1010", "11", "1111"});

    char* json = nullptr;
    REQUIRE(sk_nfa_to_json(a.get(), &json) == SK_OK);
    const std::string j = take(json);
    REQUIRE(sk_nfa_from_json(j.c_str(), &out) == SK_OK);
    NfaPtr back(out);
    CHECK(sk_nfa_state_count(back.get()) == sk_nfa_state_count(a.get()));
    CHECK(sk_nfa_from_json("{\"k\":2}", &out) == SK_ERR_PARSE);
    CHECK(std::string(sk_last_error()).find("states") != std::string::npos);
    CHECK(sk_nfa_from_regex("(0", 2, &out) == SK_ERR_PARSE);

    char* dot = nullptr;
    REQUIRE(sk_nfa_to_dot(a.get(), &dot) == SK_OK);
    CHECK(take(dot).find("digraph") != std::string::npos);

    CHECK(sk_nfa_enumerate(regex(".*").get(), 25, &set) == SK_ERR_RESOURCE);
}

TEST_CASE("sequences") {
    char* s = nullptr;
    REQUIRE(sk_sequence_value('a', 2, 5, &s) == SK_OK);
    CHECK(take(s) == "320");
    REQUIRE(sk_sequence_json_line('b', 2, 4, &s) == SK_OK);
    CHECK(take(s) == R"({"kind":"b","k":2,"n":4,"count":"70"})");
    CHECK(sk_sequence_value('z', 2, 5, &s) == SK_ERR_INVALID_ARGUMENT);
    CHECK(sk_sequence_value('a', 2, 60, &s) == SK_ERR_RESOURCE);
}

namespace {
void count_rows(const char*, const char*, int passed, int, const char*, void* user) {
    auto* counts = static_cast<std::pair<int, int>*>(user);
    (passed ? counts->first : counts->second)++;
}
} // namespace

TEST_CASE("verification suite") {
    std::pair<int, int> counts{0, 0};
    size_t failures = 99;
    REQUIRE(sk_verify("words", 6, count_rows, &counts, &failures) == SK_OK);
    CHECK(failures == 0);
    CHECK(counts.first > 0);
    CHECK(sk_verify("nonsense", 6, count_rows, &counts, &failures) == SK_ERR_CONTRACT);
}
