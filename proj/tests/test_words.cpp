#include "doctest.h"

#include "shufflekit/error.hpp"
#include "shufflekit/words.hpp"
#include "support/brute_force.hpp"

#include <random>

using namespace shufflekit;
using namespace shufflekit::words;

namespace {

Word w(const char* text, std::size_t k = 36) { return Word::parse(text, k); }

std::set<std::string> as_strings(const WordSet& s) {
    auto v = s.strings();
    return {v.begin(), v.end()};
}

Word random_word(std::mt19937& rng, std::size_t k, std::size_t len) {
    std::uniform_int_distribution<int> sym(0, static_cast<int>(k) - 1);
    std::vector<Symbol> out(len);
    for (auto& s : out) s = static_cast<Symbol>(sym(rng));
    return Word(out, k);
}

} // namespace

TEST_CASE("word parsing and text form") {
    CHECK(Word::parse("0110").k() == 2);
    CHECK(Word::parse("theorems").k() == 30);
    CHECK(Word::parse("").size() == 0);
    CHECK(Word::parse("az").str() == "az");
    CHECK_THROWS_AS(Word::parse("0A1"), ParseError);
    CHECK_THROWS_AS(Word::parse("012", 2), ContractError);
    CHECK_THROWS_AS(Word({0, 5}, 3), ContractError);
}

TEST_CASE("word sets keep one alphabet and lexicographic order") {
    WordSet s(2);
    CHECK(s.insert(Word::parse("10", 2)));
    CHECK(s.insert(Word::parse("0", 2)));
    CHECK_FALSE(s.insert(Word::parse("10", 2)));
    CHECK(s.strings() == std::vector<std::string>{"0", "10"});
    CHECK_THROWS_AS(s.insert(Word::parse("0", 3)), ContractError);
}

TEST_CASE("reverse") {
    CHECK(reverse(w("01")) == w("10"));
    CHECK(reverse(w("")) == w(""));
    CHECK(reverse(w("hoes")) == w("seoh"));
}

TEST_CASE("perfect shuffle") {
    CHECK(perfect_shuffle(w("term"), w("hoes")) == w("theorems"));
    CHECK(perfect_shuffle(w(""), w("")) == w(""));
    CHECK(perfect_shuffle(w("ab"), w("xyz")) == w("axbyz"));
    CHECK_THROWS_AS(perfect_shuffle(w("abc"), w("x")), ContractError);
    CHECK_THROWS_AS(perfect_shuffle(w("a"), w("xyz")), ContractError);
    CHECK_THROWS_AS(perfect_shuffle(Word::parse("0", 2), Word::parse("1", 3)), ContractError);
}

TEST_CASE("shuffle_set examples") {
    CHECK(as_strings(shuffle_set(w("01", 2), w("01", 2))) == std::set<std::string>{"0011", "0101"});
    CHECK(as_strings(shuffle_set(w("a"), w(""))) == std::set<std::string>{"a"});
    CHECK(as_strings(shuffle_set(w("01", 2), w("10", 2))) ==
          std::set<std::string>{"0101", "0110", "1001", "1010"});
}

TEST_CASE("shuffle_set agrees with position-subset enumeration") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = 1 + trial % 3;
        std::uniform_int_distribution<std::size_t> len(0, 6);
        const Word x = random_word(rng, k, len(rng));
        const Word y = random_word(rng, k, len(rng));
        CHECK(as_strings(shuffle_set(x, y)) == brute::interleavings(x.str(), y.str()));
    }
}

TEST_CASE("shuffle_many") {
    const Word zero_one[] = {w("0", 2), w("1", 2)};
    CHECK(as_strings(shuffle_many(zero_one)) == std::set<std::string>{"01", "10"});
    const Word single[] = {w("01", 2)};
    CHECK(as_strings(shuffle_many(single)) == std::set<std::string>{"01"});
    const Word three[] = {w("01", 2), w("01", 2), w("01", 2)};
    const WordSet s = shuffle_many(three);
    CHECK(s.contains(w("000111", 2)));
    CHECK(as_strings(s) == brute::interleavings3("01", "01", "01"));
    CHECK_THROWS_AS(shuffle_many(std::span<const Word>{}), ContractError);
}

TEST_CASE("decimations and halves") {
    CHECK(odd(w("maigre")) == w("mir"));
    CHECK(even(w("maigre")) == w("age"));
    CHECK(fh(w("abcd")) == w("ab"));
    CHECK(lh(w("abcd")) == w("cd"));
    CHECK(fh(w("abcde")) == w("ab"));
    CHECK(lh(w("abcde")) == w("cde"));
    CHECK(odd(w("")) == w(""));
    CHECK(lh(w("a")) == w("a"));

    std::mt19937 rng(11);
    for (std::size_t len = 0; len <= 15; ++len) {
        const Word x = random_word(rng, 3, len);
        CHECK(fh(x).concat(lh(x)) == x);
        CHECK(odd(x).size() - even(x).size() <= 1);
        CHECK(lh(x).size() - fh(x).size() <= 1);
    }
}

TEST_CASE("bd, bdr, bdi, bdir examples") {
    CHECK(bd(w("maigre")) == w("mirage"));
    CHECK(bd(w("0011", 2)) == w("0101", 2));
    CHECK(bd(w("1100", 2)) == w("1010", 2));

    CHECK(bdr(w("friend")) == w("finder"));
    CHECK(bdr(w("perverse")) == w("preserve"));
    CHECK(bdr(w("0011", 2)) == w("0110", 2));

    CHECK(bdi(w("mirage")) == w("maigre"));
    CHECK(bdi(w("0101", 2)) == w("0011", 2));
    CHECK(bdi(w("01223333", 4)) == w("03132323", 4));

    CHECK(bdir(w("abcd")) == w("adbc"));
    CHECK(bdir(w("abcde")) == w("aebdc"));
    CHECK(bdir(w("0011", 2)) == w("0101", 2));

    for (auto op : {bd, bdr, bdi, bdir}) CHECK(op(w("")) == w(""));
}

TEST_CASE("unshuffles match their position formulas on all lengths") {
    std::mt19937 rng(3);
    for (std::size_t len = 0; len <= 13; ++len) {
        for (int t = 0; t < 20; ++t) {
            const Word x = random_word(rng, 4, len);
            CHECK(bd(x).str() == brute::bd(x.str()));
            CHECK(bdi(x).str() == brute::bdi(x.str()));
            CHECK(bdir(x).str() == brute::bdir(x.str()));
            CHECK(bdi(x).size() == x.size());
        }
    }
}

TEST_CASE("pss and pssr") {
    CHECK(pss(w("01", 2)) == w("0011", 2));
    CHECK(pss(w("")) == w(""));
    CHECK(pss(w("abc")) == w("aabbcc"));
    CHECK(pssr(w("01", 2)) == w("0110", 2));
    CHECK(pssr(w("010", 2)) == w("001100", 2));
    CHECK(pssr(w("")) == w(""));
}

TEST_CASE("self-shuffle sets") {
    CHECK(as_strings(ss_set(w("01", 2))) == std::set<std::string>{"0011", "0101"});
    CHECK(as_strings(ssr_set(w("01", 2))) == std::set<std::string>{"0101", "0110", "1001", "1010"});
    CHECK(as_strings(ss_set(w(""))) == std::set<std::string>{""});
}

TEST_CASE("identities over every short word") {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& text : brute::words_upto(k, 7)) {
            const Word x = Word::parse(text, k);
            const Word b = bdir(x);
            CHECK(pssr(x) == b.concat(reverse(b)));
            CHECK(pss(x) == perfect_shuffle(x, x));
            CHECK(reverse(reverse(x)) == x);
            if (x.size() % 2 == 0) {
                CHECK(bdi(bd(x)) == x);
                CHECK(bd(bdi(x)) == x);
            }
        }
    }
}

TEST_CASE("reversal of a perfect shuffle, random pairs") {
    std::mt19937 rng(5);
    for (int t = 0; t < 500; ++t) {
        std::uniform_int_distribution<std::size_t> len(0, 8);
        const std::size_t n = len(rng);
        const Word x = random_word(rng, 3, n);
        const Word y = random_word(rng, 3, n);
        CHECK(reverse(perfect_shuffle(x, y)) == perfect_shuffle(reverse(y), reverse(x)));
    }
}
