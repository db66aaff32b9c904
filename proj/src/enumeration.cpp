#include "shufflekit/enumeration.hpp"

#include "shufflekit/error.hpp"
#include "shufflekit/oracles.hpp"

#include "json.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <thread>

namespace shufflekit::enumeration {

namespace {

using Code = std::uint64_t;

// Distinct interleavings of two equal-length words, each packed as 2n base-k digits
// (first letter most significant). Same suffix-pair merge as words::shuffle_set.
class PackedShuffler {
public:
    PackedShuffler(std::size_t k, std::size_t n) : n_(n), power_(2 * n + 1, 1), below_(n + 1), row_(n + 1) {
        for (std::size_t i = 1; i < power_.size(); ++i) power_[i] = power_[i - 1] * k;
    }

    const std::vector<Code>& run(const std::vector<Symbol>& x, const std::vector<Symbol>& y) {
        for (std::size_t i = n_ + 1; i-- > 0;) {
            for (std::size_t j = n_ + 1; j-- > 0;) {
                auto& cell = row_[j];
                cell.clear();
                if (i == n_ && j == n_) {
                    cell.push_back(0);
                    continue;
                }
                const Code shift = power_[(n_ - i) + (n_ - j) - 1];
                if (i < n_ && j < n_) {
                    const Code ox = x[i] * shift;
                    const Code oy = y[j] * shift;
                    const auto& from_x = below_[j];
                    const auto& from_y = row_[j + 1];
                    auto a = from_x.begin();
                    auto b = from_y.begin();
                    while (a != from_x.end() && b != from_y.end()) {
                        const Code va = *a + ox;
                        const Code vb = *b + oy;
                        if (va < vb) {
                            cell.push_back(va);
                            ++a;
                        } else if (vb < va) {
                            cell.push_back(vb);
                            ++b;
                        } else {
                            cell.push_back(va);
                            ++a;
                            ++b;
                        }
                    }
                    for (; a != from_x.end(); ++a) cell.push_back(*a + ox);
                    for (; b != from_y.end(); ++b) cell.push_back(*b + oy);
                } else if (i < n_) {
                    for (Code c : below_[j]) cell.push_back(c + x[i] * shift);
                } else {
                    for (Code c : row_[j + 1]) cell.push_back(c + y[j] * shift);
                }
            }
            std::swap(below_, row_);
        }
        return below_[0];
    }

private:
    std::size_t n_;
    std::vector<Code> power_;
    std::vector<std::vector<Code>> below_;
    std::vector<std::vector<Code>> row_;
};

void compact(std::vector<Code>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Code> union_slice(SequenceKind kind, std::size_t k, std::size_t n, std::uint64_t first,
                              std::uint64_t last) {
    PackedShuffler shuffler(k, n);
    std::vector<Code> acc;
    std::size_t compacted = 0;
    std::vector<Symbol> x(n);
    std::vector<Symbol> y(n);
    for (std::uint64_t index = first; index < last; ++index) {
        std::uint64_t rest = index;
        for (std::size_t p = n; p-- > 0;) {
            x[p] = static_cast<Symbol>(rest % k);
            rest /= k;
        }
        if (kind == SequenceKind::SelfShuffle) {
            y = x;
        } else {
            y.assign(x.rbegin(), x.rend());
        }
        const auto& codes = shuffler.run(x, y);
        acc.insert(acc.end(), codes.begin(), codes.end());
        if (acc.size() > 2 * compacted + (1u << 20)) {
            compact(acc);
            compacted = acc.size();
        }
    }
    compact(acc);
    return acc;
}

BigInt catalan(std::size_t n) { return binomial(static_cast<long>(2 * n), static_cast<long>(n)) / (n + 1); }

// Solves the Vandermonde system through (i, values[i]) for i = 0..degree.
std::vector<Rational> interpolate(const std::vector<BigInt>& values, std::size_t degree) {
    const std::size_t m = degree + 1;
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        Rational p = 1;
        for (std::size_t j = 0; j < m; ++j) {
            rows[i][j] = p;
            p *= static_cast<long>(i);
        }
        rows[i][m] = Rational(values[i]);
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t pivot = c;
        while (rows[pivot][c] == 0) ++pivot;
        std::swap(rows[c], rows[pivot]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[c][c];
            for (std::size_t j = c; j <= m; ++j) rows[r][j] -= f * rows[c][j];
        }
    }
    std::vector<Rational> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = rows[i][m] / rows[i][i];
    return out;
}

} // namespace

char kind_letter(SequenceKind kind) { return kind == SequenceKind::SelfShuffle ? 'a' : 'b'; }

std::optional<SequenceKind> kind_from_letter(char c) {
    if (c == 'a') return SequenceKind::SelfShuffle;
    if (c == 'b') return SequenceKind::SelfShuffleReverse;
    return std::nullopt;
}

BigInt sequence_value(SequenceKind kind, std::size_t k, std::size_t n, const EnumerationOptions& opts) {
    if (k == 0 || k > kMaxAlphabetSize) throw ContractError("alphabet size must be in [1, 256]");
    if (n == 0) return 1;

    // k^n source words, k^(2n) codes; both must stay in range.
    std::uint64_t sources = 1;
    unsigned __int128 space = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        space *= k;
        if (space > std::numeric_limits<Code>::max()) {
            throw ResourceLimitError("words of length " + std::to_string(2 * n) + " over " + std::to_string(k) +
                                     " letters do not fit the packed encoding");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        sources *= k;
        if (sources > opts.work_budget) {
            throw ResourceLimitError(std::to_string(k) + "^" + std::to_string(n) + " source words exceed budget " +
                                     std::to_string(opts.work_budget));
        }
    }

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, sources));
    std::vector<std::vector<Code>> parts(threads);
    if (threads == 1) {
        parts[0] = union_slice(kind, k, n, 0, sources);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t first = sources * t / threads;
            const std::uint64_t last = sources * (t + 1) / threads;
            pool.emplace_back([&, t, first, last] { parts[t] = union_slice(kind, k, n, first, last); });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Code> all = std::move(parts[0]);
    for (unsigned t = 1; t < threads; ++t) {
        std::vector<Code> merged;
        merged.reserve(all.size() + parts[t].size());
        std::set_union(all.begin(), all.end(), parts[t].begin(), parts[t].end(), std::back_inserter(merged));
        all = std::move(merged);
    }
    return BigInt(all.size());
}

SequenceTable sequence_row(SequenceKind kind, std::size_t k, std::size_t n_max, const EnumerationOptions& opts) {
    SequenceTable table{kind, k, {}};
    for (std::size_t n = 0; n <= n_max; ++n) table.counts[n] = sequence_value(kind, k, n, opts);
    return table;
}

std::string to_json_line(SequenceKind kind, std::size_t k, std::size_t n, const BigInt& count) {
    nlohmann::ordered_json j = {
        {"kind", std::string(1, kind_letter(kind))},
        {"k", k},
        {"n", n},
        {"count", count.str()},
    };
    return j.dump();
}

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {}

BigInt Polynomial::operator()(const BigInt& i) const {
    BigInt acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * i + *it;
    return acc;
}

std::string Polynomial::str() const {
    std::string out;
    for (std::size_t j = coefficients_.size(); j-- > 0;) {
        const BigInt& c = coefficients_[j];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || j == 0) out += mag.str();
        if (j >= 1) out += "i";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

std::optional<Polynomial> stated_polynomial(SequenceKind kind, std::size_t n) {
    using V = std::vector<BigInt>;
    // Coefficients listed from i^0 upwards.
    static const std::vector<V> self = {
        {1},
        {0, 1},
        {0, -1, 2},
        {0, 1, -5, 5},
        {0, 3, 5, -21, 14},
        {0, -10, 21, 32, -84, 42},
    };
    static const std::vector<V> reversed = {
        {1},
        {0, 1},
        {0, -1, 2},
        {0, 2, -6, 5},
        {0, -3, 17, -27, 14},
        {0, -8, -17, 94, -110, 42},
    };
    const auto& table = kind == SequenceKind::SelfShuffle ? self : reversed;
    if (n >= table.size()) return std::nullopt;
    return Polynomial(table[n]);
}

bool EmpiricalReport::all_agree() const {
    return std::all_of(checks.begin(), checks.end(), [](const PolynomialCheck& c) { return c.agrees(); });
}

EmpiricalReport check_empirical_polynomials(SequenceKind kind, std::size_t k_max, std::size_t n_max,
                                            const EnumerationOptions& opts) {
    EmpiricalReport report;
    report.kind = kind;
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto poly = stated_polynomial(kind, n);
        if (!poly) break;
        // values[i] for i = 0..k_max; the empty alphabet admits only the empty word.
        std::vector<BigInt> values{BigInt(n == 0 ? 1 : 0)};
        for (std::size_t i = 1; i <= k_max; ++i) {
            values.push_back(sequence_value(kind, i, n, opts));
            report.checks.push_back({n, i, (*poly)(BigInt(i)), values.back()});
        }
        if (n == 0 || values.size() < n + 1) continue;

        ConjectureRow row;
        row.n = n;
        row.fitted = interpolate(values, n);
        row.conjectured_leading = Rational(catalan(n));
        const long nn = static_cast<long>(n);
        if (kind == SequenceKind::SelfShuffle) {
            row.conjectured_second = Rational(-binomial(2 * nn - 1, nn + 1));
        } else {
            row.conjectured_second = Rational(-(binomial(2 * nn - 1, nn - 1) - (BigInt(1) << (n - 1))));
        }
        row.leading_matches = row.fitted[n] == row.conjectured_leading;
        row.second_matches = row.fitted[n - 1] == row.conjectured_second;
        report.conjecture.push_back(std::move(row));
    }
    return report;
}

BigInt binomial(long n, long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    BigInt out = 1;
    for (long j = 1; j <= r; ++j) out = out * (n - r + j) / j;
    return out;
}

BigInt sum_of_squared_binomials(std::size_t n) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        BigInt c = binomial(static_cast<long>(n), static_cast<long>(i));
        sum += c * c;
    }
    return sum;
}

BigInt binary_abelian_square_count(std::size_t n) {
    if (2 * n >= 63) throw ResourceLimitError("binary abelian square enumeration limited to n <= 31");
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::uint64_t count = 0;
    std::vector<Symbol> letters(2 * n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (std::size_t p = 0; p < 2 * n; ++p) letters[p] = static_cast<Symbol>((bits >> p) & 1u);
        if (oracles::is_abelian_square(Word(letters, 2))) ++count;
    }
    return BigInt(count);
}

} // namespace shufflekit::enumeration
