#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Exact counts of self-shuffle languages restricted to one source length:
//   a_k(n) = |∪_{x ∈ Σ_k^n} x SH x|,   b_k(n) = |∪_{x ∈ Σ_k^n} x SH x^R|.
namespace shufflekit::enumeration {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class SequenceKind { SelfShuffle, SelfShuffleReverse };

/// 'a' or 'b'.
char kind_letter(SequenceKind kind);
/// Inverse of kind_letter; nullopt for anything else.
std::optional<SequenceKind> kind_from_letter(char c);

struct EnumerationOptions {
    /// Upper bound on k^n, the number of source words visited.
    std::uint64_t work_budget = 50'000'000;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct SequenceTable {
    SequenceKind kind = SequenceKind::SelfShuffle;
    std::size_t k = 1;
    std::map<std::size_t, BigInt> counts;
};

/// Throws ResourceLimitError when k^n exceeds the budget or 2n base-k digits overflow 64 bits.
BigInt sequence_value(SequenceKind kind, std::size_t k, std::size_t n, const EnumerationOptions& opts = {});
inline BigInt a_value(std::size_t k, std::size_t n, const EnumerationOptions& opts = {}) {
    return sequence_value(SequenceKind::SelfShuffle, k, n, opts);
}
inline BigInt b_value(std::size_t k, std::size_t n, const EnumerationOptions& opts = {}) {
    return sequence_value(SequenceKind::SelfShuffleReverse, k, n, opts);
}

SequenceTable sequence_row(SequenceKind kind, std::size_t k, std::size_t n_max,
                           const EnumerationOptions& opts = {});
inline SequenceTable a_row(std::size_t k, std::size_t n_max, const EnumerationOptions& opts = {}) {
    return sequence_row(SequenceKind::SelfShuffle, k, n_max, opts);
}
inline SequenceTable b_row(std::size_t k, std::size_t n_max, const EnumerationOptions& opts = {}) {
    return sequence_row(SequenceKind::SelfShuffleReverse, k, n_max, opts);
}

/// One JSON object per line: {"kind":"a","k":2,"n":5,"count":"320"}.
std::string to_json_line(SequenceKind kind, std::size_t k, std::size_t n, const BigInt& count);

/// Integer polynomial in the alphabet size i; coefficient j multiplies i^j.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
    BigInt operator()(const BigInt& i) const;
    std::string str() const;

private:
    std::vector<BigInt> coefficients_;
};

/// The closed forms observed for n <= 5 (nullopt beyond).
std::optional<Polynomial> stated_polynomial(SequenceKind kind, std::size_t n);

struct PolynomialCheck {
    std::size_t n = 0;
    std::size_t i = 0;
    BigInt predicted;
    BigInt computed;
    bool agrees() const { return predicted == computed; }
};

/// Degree-n interpolation of the computed values against the conjectured leading
/// terms C(2n,n)/(n+1) i^n + c i^(n-1). Informational only.
struct ConjectureRow {
    std::size_t n = 0;
    std::vector<Rational> fitted;
    Rational conjectured_leading;
    Rational conjectured_second;
    bool leading_matches = false;
    bool second_matches = false;
};

struct EmpiricalReport {
    SequenceKind kind = SequenceKind::SelfShuffle;
    std::vector<PolynomialCheck> checks;
    std::vector<ConjectureRow> conjecture;
    bool all_agree() const;
};

EmpiricalReport check_empirical_polynomials(SequenceKind kind, std::size_t k_max = 6,
                                            std::size_t n_max = 5, const EnumerationOptions& opts = {});

/// C(n, r); zero outside 0 <= r <= n.
BigInt binomial(long n, long r);
/// Σ_i C(n, i)^2.
BigInt sum_of_squared_binomials(std::size_t n);
/// Binary abelian squares of length 2n, counted by enumerating all 2^(2n) words.
BigInt binary_abelian_square_count(std::size_t n);

} // namespace shufflekit::enumeration
