#include "shufflekit/words.hpp"

#include "shufflekit/error.hpp"

#include <algorithm>
#include <iterator>

namespace shufflekit::words {

namespace {

void require_same_alphabet(const Word& x, const Word& y) {
    if (x.k() != y.k()) {
        throw ContractError("operands over different alphabets (" + std::to_string(x.k()) + " vs " +
                            std::to_string(y.k()) + ")");
    }
}

Word pick(const Word& w, std::size_t first, std::size_t step) {
    std::vector<Symbol> out;
    for (std::size_t i = first; i < w.size(); i += step) out.push_back(w[i]);
    return Word(std::move(out), w.k());
}

using Suffixes = std::vector<std::vector<Symbol>>;

Suffixes prepend(Symbol s, const Suffixes& tails) {
    Suffixes out;
    out.reserve(tails.size());
    for (const auto& t : tails) {
        std::vector<Symbol> v;
        v.reserve(t.size() + 1);
        v.push_back(s);
        v.insert(v.end(), t.begin(), t.end());
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

Word reverse(const Word& w) {
    std::vector<Symbol> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    return Word(std::move(out), w.k());
}

Word perfect_shuffle(const Word& x, const Word& y) {
    require_same_alphabet(x, y);
    if (y.size() != x.size() && y.size() != x.size() + 1) {
        throw ContractError("perfect shuffle needs |y| = |x| or |x|+1, got |x|=" +
                            std::to_string(x.size()) + " |y|=" + std::to_string(y.size()));
    }
    std::vector<Symbol> out;
    out.reserve(x.size() + y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i]);
        out.push_back(y[i]);
    }
    if (y.size() > x.size()) out.push_back(y[y.size() - 1]);
    return Word(std::move(out), x.k());
}

WordSet shuffle_set(const Word& x, const Word& y) {
    require_same_alphabet(x, y);
    const std::size_t m = x.size();
    const std::size_t n = y.size();

    // cell(i, j) holds the sorted distinct interleavings of x[i..] and y[j..];
    // rows are filled from i = m upwards and only two are kept.
    std::vector<Suffixes> below(n + 1);
    std::vector<Suffixes> row(n + 1);
    for (std::size_t ii = m + 1; ii-- > 0;) {
        for (std::size_t jj = n + 1; jj-- > 0;) {
            Suffixes& cell = row[jj];
            cell.clear();
            if (ii == m && jj == n) {
                cell.emplace_back();
                continue;
            }
            Suffixes from_x = ii < m ? prepend(x[ii], below[jj]) : Suffixes{};
            Suffixes from_y = jj < n ? prepend(y[jj], row[jj + 1]) : Suffixes{};
            cell.reserve(from_x.size() + from_y.size());
            std::set_union(std::make_move_iterator(from_x.begin()),
                           std::make_move_iterator(from_x.end()),
                           std::make_move_iterator(from_y.begin()),
                           std::make_move_iterator(from_y.end()), std::back_inserter(cell));
        }
        std::swap(below, row);
    }

    WordSet out(x.k());
    for (auto& s : below[0]) out.insert(Word(std::move(s), x.k()));
    return out;
}

WordSet shuffle_many(std::span<const Word> ws) {
    if (ws.empty()) throw ContractError("shuffle_many needs at least one word");
    WordSet acc(ws[0].k());
    acc.insert(ws[0]);
    for (std::size_t i = 1; i < ws.size(); ++i) {
        WordSet next(ws[0].k());
        for (const auto& partial : acc) next.merge(shuffle_set(partial, ws[i]));
        acc = std::move(next);
    }
    return acc;
}

Word odd(const Word& w) { return pick(w, 0, 2); }
Word even(const Word& w) { return pick(w, 1, 2); }
Word fh(const Word& w) { return w.factor(0, w.size() / 2); }
Word lh(const Word& w) { return w.factor(w.size() / 2, w.size()); }

Word bd(const Word& w) { return odd(w).concat(even(w)); }
Word bdr(const Word& w) { return odd(w).concat(reverse(even(w))); }
Word bdi(const Word& w) { return perfect_shuffle(fh(w), lh(w)); }
Word bdir(const Word& w) { return perfect_shuffle(fh(w), reverse(lh(w))); }

Word pss(const Word& w) {
    std::vector<Symbol> out;
    out.reserve(2 * w.size());
    for (Symbol s : w) {
        out.push_back(s);
        out.push_back(s);
    }
    return Word(std::move(out), w.k());
}

Word pssr(const Word& w) { return perfect_shuffle(w, reverse(w)); }

WordSet ss_set(const Word& w) { return shuffle_set(w, w); }
WordSet ssr_set(const Word& w) { return shuffle_set(w, reverse(w)); }

} // namespace shufflekit::words
