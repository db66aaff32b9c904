#include "shufflekit/oracles.hpp"

#include "shufflekit/error.hpp"
#include "shufflekit/words.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace shufflekit::oracles {

namespace {

// Depth-first assignment of w's letters to `copies` identical copies of an unknown
// root. Every partial copy is a prefix of the root, so the state is the copy lengths
// plus the known root letters past the shortest copy.
class SelfShuffleSearch {
public:
    SelfShuffleSearch(const Word& w, std::size_t copies)
        : w_(w), copies_(copies), target_(w.size() / copies), lens_(copies, 0) {}

    std::optional<SelfShuffleWitness> run() {
        if (w_.size() % copies_ != 0) return std::nullopt;
        if (!descend(0)) return std::nullopt;
        SelfShuffleWitness out{Word(known_, w_.k()), ShuffleCertificate{assignment_}};
        return out;
    }

private:
    std::string key() const {
        std::size_t low = *std::min_element(lens_.begin(), lens_.end());
        std::string k;
        for (auto l : lens_) k.push_back(static_cast<char>(l));
        k.append(known_.begin() + static_cast<std::ptrdiff_t>(low), known_.end());
        return k;
    }

    bool descend(std::size_t pos) {
        if (pos == w_.size()) return true;
        std::string state = key();
        if (dead_.contains(state)) return false;
        const Symbol s = w_[pos];
        for (std::size_t c = 0; c < copies_; ++c) {
            // Copies with equal length are interchangeable; only the first is tried.
            bool twin = false;
            for (std::size_t d = 0; d < c; ++d) twin = twin || lens_[d] == lens_[c];
            if (twin || lens_[c] == target_) continue;

            bool extended = false;
            if (lens_[c] < known_.size()) {
                if (known_[lens_[c]] != s) continue;
            } else {
                known_.push_back(s);
                extended = true;
            }
            ++lens_[c];
            assignment_.push_back(static_cast<std::uint8_t>(c + 1));
            if (descend(pos + 1)) return true;
            assignment_.pop_back();
            --lens_[c];
            if (extended) known_.pop_back();
        }
        dead_.insert(std::move(state));
        return false;
    }

    const Word& w_;
    std::size_t copies_;
    std::size_t target_;
    std::vector<std::size_t> lens_;
    std::vector<Symbol> known_;
    std::vector<std::uint8_t> assignment_;
    std::unordered_set<std::string> dead_;
};

// Search for x with w in x SH x^R. Up to the midpoint copy 1 has spelled x[0..a)
// and copy 2 has spelled x[a..n) backwards, so x is fixed there and the second
// half reduces to a two-word interleaving test.
class ReverseSearch {
public:
    explicit ReverseSearch(const Word& w) : w_(w), half_(w.size() / 2) {}

    std::optional<SelfShuffleWitness> run() {
        if (w_.size() % 2 != 0) return std::nullopt;
        if (!descend(0)) return std::nullopt;
        return result_;
    }

private:
    bool descend(std::size_t pos) {
        if (pos == half_) return finish();
        std::string state(first_.begin(), first_.end());
        state.push_back('\xff');
        state.append(second_.begin(), second_.end());
        if (dead_.contains(state)) return false;
        const Symbol s = w_[pos];
        for (int copy = 1; copy <= 2; ++copy) {
            auto& part = copy == 1 ? first_ : second_;
            part.push_back(s);
            assignment_.push_back(static_cast<std::uint8_t>(copy));
            if (descend(pos + 1)) return true;
            assignment_.pop_back();
            part.pop_back();
        }
        dead_.insert(std::move(state));
        return false;
    }

    bool finish() {
        std::vector<Symbol> root = first_;
        root.insert(root.end(), second_.rbegin(), second_.rend());
        Word x(std::move(root), w_.k());
        const std::size_t a = first_.size();
        Word rest1 = x.factor(a, half_);
        Word rest2 = words::reverse(x.factor(0, a));
        auto tail = is_interleaving(w_.factor(half_, w_.size()), rest1, rest2);
        if (!tail) return false;
        ShuffleCertificate cert{assignment_};
        cert.assignment.insert(cert.assignment.end(), tail->assignment.begin(),
                               tail->assignment.end());
        result_ = SelfShuffleWitness{std::move(x), std::move(cert)};
        return true;
    }

    const Word& w_;
    std::size_t half_;
    std::vector<Symbol> first_;
    std::vector<Symbol> second_;
    std::vector<std::uint8_t> assignment_;
    std::unordered_set<std::string> dead_;
    std::optional<SelfShuffleWitness> result_;
};

} // namespace

std::string ShuffleCertificate::str() const {
    std::string out;
    for (auto a : assignment) out += std::to_string(a);
    return out;
}

bool replay(const Word& w, std::span<const Word> operands, const ShuffleCertificate& cert) {
    if (cert.assignment.size() != w.size()) return false;
    std::vector<std::size_t> next(operands.size(), 0);
    for (std::size_t p = 0; p < w.size(); ++p) {
        const std::size_t op = cert.assignment[p];
        if (op == 0 || op > operands.size()) return false;
        const Word& src = operands[op - 1];
        if (next[op - 1] >= src.size() || src[next[op - 1]] != w[p]) return false;
        ++next[op - 1];
    }
    for (std::size_t i = 0; i < operands.size(); ++i) {
        if (next[i] != operands[i].size()) return false;
    }
    return true;
}

std::optional<ShuffleCertificate> is_interleaving(const Word& w, const Word& x, const Word& y) {
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    if (w.size() != m + n) return std::nullopt;

    // done[i][j]: w[i+j..] is an interleaving of x[i..] and y[j..].
    std::vector<std::vector<char>> done(m + 1, std::vector<char>(n + 1, 0));
    done[m][n] = 1;
    for (std::size_t i = m + 1; i-- > 0;) {
        for (std::size_t j = n + 1; j-- > 0;) {
            if (i == m && j == n) continue;
            const Symbol s = w[i + j];
            done[i][j] = (i < m && x[i] == s && done[i + 1][j]) ||
                         (j < n && y[j] == s && done[i][j + 1]);
        }
    }
    if (!done[0][0]) return std::nullopt;

    ShuffleCertificate cert;
    cert.assignment.reserve(m + n);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i + j < m + n) {
        const Symbol s = w[i + j];
        if (i < m && x[i] == s && done[i + 1][j]) {
            cert.assignment.push_back(1);
            ++i;
        } else {
            cert.assignment.push_back(2);
            ++j;
        }
    }
    return cert;
}

std::optional<ShuffleCertificate> is_interleaving_many(const Word& w, std::span<const Word> ws,
                                                       std::size_t max_cells) {
    std::size_t total = 0;
    std::size_t cells = 1;
    for (const auto& x : ws) {
        total += x.size();
        if (cells > max_cells / (x.size() + 1)) {
            throw ResourceLimitError("interleaving state space exceeds " + std::to_string(max_cells) +
                                     " cells");
        }
        cells *= x.size() + 1;
    }
    if (total != w.size()) return std::nullopt;

    // Mixed-radix index of the prefix-length vector; marks states known to fail.
    std::vector<char> dead(cells, 0);
    std::vector<std::size_t> stride(ws.size(), 1);
    for (std::size_t i = 1; i < ws.size(); ++i) stride[i] = stride[i - 1] * (ws[i - 1].size() + 1);
    std::vector<std::size_t> lens(ws.size(), 0);
    ShuffleCertificate cert;

    auto descend = [&](auto&& self, std::size_t pos, std::size_t index) -> bool {
        if (pos == w.size()) return true;
        if (dead[index]) return false;
        for (std::size_t c = 0; c < ws.size(); ++c) {
            if (lens[c] < ws[c].size() && ws[c][lens[c]] == w[pos]) {
                ++lens[c];
                cert.assignment.push_back(static_cast<std::uint8_t>(c + 1));
                if (self(self, pos + 1, index + stride[c])) return true;
                cert.assignment.pop_back();
                --lens[c];
            }
        }
        dead[index] = 1;
        return false;
    };
    if (!descend(descend, 0, 0)) return std::nullopt;
    return cert;
}

std::optional<SelfShuffleWitness> exists_self_shuffle(const Word& w) {
    return SelfShuffleSearch(w, 2).run();
}

std::optional<SelfShuffleWitness> search_self_shuffle_reverse(const Word& w) {
    return ReverseSearch(w).run();
}

std::optional<SelfShuffleWitness> exists_self_shuffle_reverse(const Word& w) {
    const bool binary = std::all_of(w.begin(), w.end(), [](Symbol s) { return s < 2; });
    if (!binary) return search_self_shuffle_reverse(w);
    if (!is_abelian_square(w)) return std::nullopt;

    const std::size_t n = w.size() / 2;
    const auto zeros = static_cast<std::size_t>(
        std::count(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n), Symbol{0}));
    std::vector<Symbol> root(n, 1);
    std::fill_n(root.begin(), zeros, Symbol{0});
    Word x(std::move(root), w.k());
    Word xr = words::reverse(x);
    if (auto cert = is_interleaving(w, x, xr)) {
        const Word ops[] = {x, xr};
        if (replay(w, ops, *cert)) return SelfShuffleWitness{std::move(x), std::move(*cert)};
    }
    return search_self_shuffle_reverse(w);
}

std::optional<SelfShuffleWitness> exists_triple_self_shuffle(const Word& w, std::size_t max_len) {
    if (w.size() > max_len) {
        throw ResourceLimitError("triple self-shuffle search limited to length " +
                                 std::to_string(max_len) + ", got " + std::to_string(w.size()));
    }
    return SelfShuffleSearch(w, 3).run();
}

bool is_abelian_square(const Word& w) {
    if (w.size() % 2 != 0) return false;
    std::vector<long> balance(w.k(), 0);
    const std::size_t n = w.size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        ++balance[w[i]];
        --balance[w[n + i]];
    }
    return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
}

} // namespace shufflekit::oracles
