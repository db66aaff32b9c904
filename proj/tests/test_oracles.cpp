#include "doctest.h"

#include "shufflekit/error.hpp"
#include "shufflekit/oracles.hpp"
#include "shufflekit/words.hpp"
#include "support/brute_force.hpp"

#include <random>

using namespace shufflekit;
using namespace shufflekit::oracles;

namespace {

Word w(const char* text, std::size_t k = 2) { return Word::parse(text, k); }

bool witness_replays(const Word& target, const SelfShuffleWitness& wit, bool reversed, int copies = 2) {
    std::vector<std::string> ops;
    for (int i = 0; i < copies; ++i) ops.push_back(wit.root.str());
    if (reversed) ops[1] = brute::rev(ops[1]);
    return brute::replays(target.str(), ops, wit.certificate.assignment);
}

} // namespace

TEST_CASE("is_interleaving examples") {
    const auto cert = is_interleaving(w("theorems", 36), w("term", 36), w("hoes", 36));
    REQUIRE(cert);
    CHECK(cert->str() == "12121212");
    CHECK_FALSE(is_interleaving(w("0110"), w("01"), w("01")));
    CHECK(is_interleaving(w(""), w(""), w("")));
    CHECK_FALSE(is_interleaving(w("01"), w("0"), w("")));
}

TEST_CASE("is_interleaving agrees with brute force and prefers the first operand") {
    for (const auto& x : brute::words_upto(2, 3)) {
        for (const auto& y : brute::words_upto(2, 3)) {
            const auto members = brute::interleavings(x, y);
            for (const auto& z : brute::words(2, x.size() + y.size())) {
                const auto cert = is_interleaving(w(z.c_str()), w(x.c_str()), w(y.c_str()));
                CHECK(cert.has_value() == members.contains(z));
                if (cert) CHECK(brute::replays(z, {x, y}, cert->assignment));
            }
        }
    }
    const auto cert = is_interleaving(w("00"), w("0"), w("0"));
    REQUIRE(cert);
    CHECK(cert->str() == "12");
}

TEST_CASE("is_interleaving_many") {
    const Word three[] = {w("01"), w("01"), w("01")};
    const auto c = is_interleaving_many(w("000111"), three);
    REQUIRE(c);
    CHECK(replay(w("000111"), three, *c));
    const Word singles[] = {w("0"), w("1")};
    CHECK(is_interleaving_many(w("01"), singles));
    const Word two[] = {w("01"), w("01")};
    CHECK_FALSE(is_interleaving_many(w("011"), two));
    CHECK(is_interleaving_many(w(""), std::span<const Word>{}));
    CHECK_FALSE(is_interleaving_many(w("0"), std::span<const Word>{}));
    const Word big[] = {w("0101010101"), w("0101010101"), w("0101010101")};
    CHECK_THROWS_AS(is_interleaving_many(w("000000000000000111111111111111"), big, 100), ResourceLimitError);
}

TEST_CASE("replay rejects malformed certificates") {
    const Word ops[] = {w("01"), w("10")};
    CHECK(replay(w("0110"), ops, ShuffleCertificate{{1, 1, 2, 2}}));
    CHECK_FALSE(replay(w("0110"), ops, ShuffleCertificate{{1, 2, 2, 1}}));
    CHECK_FALSE(replay(w("0110"), ops, ShuffleCertificate{{1, 1, 2}}));
    CHECK_FALSE(replay(w("0110"), ops, ShuffleCertificate{{1, 1, 3, 2}}));
    CHECK_FALSE(replay(w("0110"), ops, ShuffleCertificate{{0, 1, 2, 2}}));
}

TEST_CASE("exists_self_shuffle examples") {
    auto a = exists_self_shuffle(w("0101"));
    REQUIRE(a);
    CHECK(a->root == w("01"));
    CHECK(witness_replays(w("0101"), *a, false));
    CHECK_FALSE(exists_self_shuffle(w("0110")));
    auto b = exists_self_shuffle(w("01001101"));
    REQUIRE(b);
    CHECK(b->root == w("0101"));
    CHECK(witness_replays(w("01001101"), *b, false));
    CHECK(exists_self_shuffle(w("")));
    CHECK_FALSE(exists_self_shuffle(w("010")));
}

TEST_CASE("exists_self_shuffle_reverse examples") {
    auto a = exists_self_shuffle_reverse(w("0110"));
    REQUIRE(a);
    CHECK(a->root == w("01"));
    CHECK(witness_replays(w("0110"), *a, true));
    CHECK_FALSE(exists_self_shuffle_reverse(w("012012", 3)));
    CHECK_FALSE(search_self_shuffle_reverse(w("012012", 3)));
    auto e = exists_self_shuffle_reverse(w(""));
    REQUIRE(e);
    CHECK(e->root.empty());
}

TEST_CASE("exists_triple_self_shuffle examples and bound") {
    auto a = exists_triple_self_shuffle(w("001001001"));
    REQUIRE(a);
    CHECK(a->root == w("001"));
    CHECK(witness_replays(w("001001001"), *a, false, 3));
    CHECK_FALSE(exists_triple_self_shuffle(w("0100101")));
    CHECK_FALSE(exists_triple_self_shuffle(w("010010101")));
    CHECK_THROWS_AS(exists_triple_self_shuffle(w("0000000000000000")), ResourceLimitError);
    CHECK(exists_triple_self_shuffle(w("000000000000000000"), 18));
}

TEST_CASE("is_abelian_square") {
    CHECK(is_abelian_square(w("012012", 3)));
    CHECK(is_abelian_square(w("0110")));
    CHECK_FALSE(is_abelian_square(w("010")));
    CHECK(is_abelian_square(w("")));
    CHECK_FALSE(is_abelian_square(w("0011")));
}

TEST_CASE("self-shuffle oracles agree with the exhaustive unions, binary up to 10") {
    for (std::size_t len = 0; len <= 10; len += 2) {
        const auto ss = brute::self_union(2, len / 2, false);
        const auto ssr = brute::self_union(2, len / 2, true);
        for (const auto& z : brute::words(2, len)) {
            const Word target = w(z.c_str());
            const auto a = exists_self_shuffle(target);
            CHECK(a.has_value() == ss.contains(z));
            if (a) CHECK(witness_replays(target, *a, false));
            const auto b = exists_self_shuffle_reverse(target);
            CHECK(b.has_value() == ssr.contains(z));
            if (b) CHECK(witness_replays(target, *b, true));
            const auto c = search_self_shuffle_reverse(target);
            CHECK(c.has_value() == b.has_value());
            if (c) CHECK(witness_replays(target, *c, true));
        }
    }
}

TEST_CASE("ternary reverse search agrees with the exhaustive union up to 8") {
    for (std::size_t len = 0; len <= 8; len += 2) {
        const auto ss = brute::self_union(3, len / 2, false);
        const auto ssr = brute::self_union(3, len / 2, true);
        for (const auto& z : brute::words(3, len)) {
            const Word target = w(z.c_str(), 3);
            const auto a = exists_self_shuffle(target);
            CHECK(a.has_value() == ss.contains(z));
            const auto b = exists_self_shuffle_reverse(target);
            CHECK(b.has_value() == ssr.contains(z));
            if (b) CHECK(witness_replays(target, *b, true));
        }
    }
}

TEST_CASE("triple oracle agrees with the exhaustive union up to 9") {
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto un = brute::triple_union(2, n);
        for (const auto& z : brute::words(2, 3 * n)) {
            const auto t = exists_triple_self_shuffle(w(z.c_str()));
            CHECK(t.has_value() == un.contains(z));
            if (t) CHECK(witness_replays(w(z.c_str()), *t, false, 3));
        }
    }
}

TEST_CASE("odd lengths are never self-shuffles") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> bit(0, 2);
    for (int t = 0; t < 200; ++t) {
        std::string s;
        const std::size_t len = 1 + 2 * (t % 6);
        for (std::size_t i = 0; i < len; ++i) s += static_cast<char>('0' + bit(rng));
        const Word x = w(s.c_str(), 3);
        CHECK_FALSE(exists_self_shuffle(x));
        CHECK_FALSE(exists_self_shuffle_reverse(x));
        CHECK_FALSE(is_abelian_square(x));
    }
}
