#pragma once

#include "shufflekit/word.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Membership decision procedures. Every positive answer carries a replayable
// certificate; negative answers are definitive unless a ResourceLimitError is thrown.
namespace shufflekit::oracles {

/// For each position of the tested word, the 1-based index of the operand that
/// supplied it.
struct ShuffleCertificate {
    std::vector<std::uint8_t> assignment;

    /// Digits, e.g. "1212".
    std::string str() const;
    friend bool operator==(const ShuffleCertificate&, const ShuffleCertificate&) = default;
};

/// A root word x together with the certificate placing w among its self-shuffles.
struct SelfShuffleWitness {
    Word root;
    ShuffleCertificate certificate;
};

/// Replays cert against operands; true iff it rebuilds w and consumes every operand exactly.
bool replay(const Word& w, std::span<const Word> operands, const ShuffleCertificate& cert);

/// w in x SH y, by dynamic programming over prefix pairs. Prefers operand 1 at every
/// position, so the certificate is the lexicographically least one.
std::optional<ShuffleCertificate> is_interleaving(const Word& w, const Word& x, const Word& y);

/// w in x1 SH ... SH xm, by a memoised search over the product of prefix lengths.
/// Throws ResourceLimitError when that product exceeds max_cells.
std::optional<ShuffleCertificate> is_interleaving_many(const Word& w, std::span<const Word> ws,
                                                       std::size_t max_cells = std::size_t{1} << 26);

/// Some x with w in x SH x.
std::optional<SelfShuffleWitness> exists_self_shuffle(const Word& w);

/// Some x with w in x SH x^R. Binary inputs take the constructive 0^j 1^(n-j) route,
/// which is replayed before being reported.
std::optional<SelfShuffleWitness> exists_self_shuffle_reverse(const Word& w);

/// Reverse variant without the binary shortcut (memoised search for every alphabet).
std::optional<SelfShuffleWitness> search_self_shuffle_reverse(const Word& w);

inline constexpr std::size_t kDefaultTripleBound = 15;

/// Some x with w in x SH x SH x. Throws ResourceLimitError when |w| > max_len.
std::optional<SelfShuffleWitness> exists_triple_self_shuffle(const Word& w,
                                                             std::size_t max_len = kDefaultTripleBound);

/// Even length and both halves carry the same letter multiset.
bool is_abelian_square(const Word& w);

} // namespace shufflekit::oracles
