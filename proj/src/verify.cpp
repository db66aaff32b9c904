#include "shufflekit/verify.hpp"

#include "shufflekit/enumeration.hpp"
#include "shufflekit/error.hpp"
#include "shufflekit/nfa.hpp"
#include "shufflekit/oracles.hpp"
#include "shufflekit/regex.hpp"
#include "shufflekit/words.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace shufflekit::verify {

namespace {

using namespace shufflekit::words;
namespace en = shufflekit::enumeration;
namespace au = shufflekit::automata;
namespace orc = shufflekit::oracles;

std::vector<Word> all_words(std::size_t k, std::size_t len) {
    std::vector<Word> out;
    std::vector<Symbol> digits(len, 0);
    while (true) {
        out.emplace_back(digits, k);
        std::size_t p = len;
        while (p > 0 && digits[p - 1] == k - 1) digits[--p] = 0;
        if (p == 0) break;
        ++digits[p - 1];
    }
    return out;
}

Word blocks(std::initializer_list<std::pair<Symbol, std::size_t>> parts, std::size_t k) {
    std::vector<Symbol> out;
    for (auto [s, n] : parts) out.insert(out.end(), n, s);
    return Word(std::move(out), k);
}

class Runner {
public:
    Runner(std::string suite, const Reporter& report) : suite_(std::move(suite)), report_(report) {}

    // Records one property; `first_failure` is empty on success.
    void record(const std::string& name, const std::string& first_failure, std::size_t cases) {
        PropertyResult r{suite_, name, first_failure.empty(), false,
                         first_failure.empty() ? std::to_string(cases) + " cases" : first_failure};
        if (!r.passed) ++failures_;
        report_(r);
    }
    void info(const std::string& name, const std::string& detail) {
        report_(PropertyResult{suite_, name, true, true, detail});
    }
    std::size_t failures() const { return failures_; }

private:
    std::string suite_;
    const Reporter& report_;
    std::size_t failures_ = 0;
};

// Runs `check` over every case; stops at the first failure message.
template <class Cases, class Check>
void property(Runner& run, const std::string& name, const Cases& cases, Check check) {
    std::size_t count = 0;
    for (const auto& c : cases) {
        ++count;
        std::string why = check(c);
        if (!why.empty()) {
            run.record(name, why, count);
            return;
        }
    }
    run.record(name, "", count);
}

std::vector<Word> words_upto(std::size_t k, std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        auto layer = all_words(k, len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::size_t run_words(const Reporter& report) {
    Runner run("words", report);

    {
        std::size_t count = 0;
        std::string why;
        for (std::size_t k = 1; k <= 3 && why.empty(); ++k) {
            for (std::size_t len = 0; len <= 8 && why.empty(); ++len) {
                const auto layer = all_words(k, len);
                std::vector<Word> reversed;
                for (const auto& w : layer) reversed.push_back(reverse(w));
                for (std::size_t a = 0; a < layer.size() && why.empty(); ++a) {
                    for (std::size_t b = 0; b < layer.size(); ++b) {
                        ++count;
                        if (reverse(perfect_shuffle(layer[a], layer[b])) !=
                            perfect_shuffle(reversed[b], reversed[a])) {
                            why = "fails for x=" + layer[a].str() + " y=" + layer[b].str();
                            break;
                        }
                    }
                }
            }
        }
        run.record("perfect shuffle reversal (x sh y)^R = y^R sh x^R, |x|=|y|<=8, k<=3", why, count);
    }

    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t total = 0; total <= 10; ++total) {
        for (std::size_t m = 0; m <= total; ++m) {
            for (const auto& x : all_words(2, m)) {
                for (const auto& y : all_words(2, total - m)) pairs.emplace_back(x, y);
            }
        }
    }
    property(run, "shuffle_set symmetric and contains xy, yx and x sh y, |x|+|y|<=10", pairs,
             [](const auto& p) -> std::string {
                 const auto& [x, y] = p;
                 WordSet s = shuffle_set(x, y);
                 if (s != shuffle_set(y, x)) return "asymmetric for " + x.str() + "," + y.str();
                 if (!s.contains(x.concat(y)) || !s.contains(y.concat(x))) return "missing concatenation";
                 if ((y.size() == x.size() || y.size() == x.size() + 1) && !s.contains(perfect_shuffle(x, y))) {
                     return "missing perfect shuffle of " + x.str() + "," + y.str();
                 }
                 return {};
             });

    std::vector<std::pair<Word, Word>> ternary_pairs;
    for (std::size_t m = 0; m <= 4; ++m) {
        for (std::size_t n = 0; n + m <= 7; ++n) {
            for (const auto& x : all_words(3, m)) {
                for (const auto& y : all_words(3, n)) ternary_pairs.emplace_back(x, y);
            }
        }
    }
    property(run, "|x SH y| <= C(|x|+|y|, |x|), equality for disjoint letters", ternary_pairs,
             [](const auto& p) -> std::string {
                 const auto& [x, y] = p;
                 const auto size = en::BigInt(shuffle_set(x, y).size());
                 const auto bound = en::binomial(static_cast<long>(x.size() + y.size()), static_cast<long>(x.size()));
                 bool disjoint = std::none_of(x.begin(), x.end(), [&](Symbol s) {
                     return std::find(y.begin(), y.end(), s) != y.end();
                 });
                 if (size > bound || (disjoint && size != bound)) return "count mismatch for " + x.str() + "," + y.str();
                 return {};
             });

    std::vector<Word> even_words;
    for (std::size_t len = 0; len <= 12; len += 2) {
        auto layer = all_words(2, len);
        even_words.insert(even_words.end(), layer.begin(), layer.end());
    }
    property(run, "bdi(bd(w)) = bd(bdi(w)) = w, even |w|<=12, k=2", even_words, [](const Word& w) -> std::string {
        if (bdi(bd(w)) != w || bd(bdi(w)) != w) return "fails for " + w.str();
        return {};
    });

    std::vector<Word> small;
    for (std::size_t k = 1; k <= 3; ++k) {
        auto layer = words_upto(k, 9);
        small.insert(small.end(), layer.begin(), layer.end());
    }
    property(run, "w sh w^R = bdir(w) bdir(w)^R, |w|<=9, k<=3", small, [](const Word& w) -> std::string {
        const Word b = bdir(w);
        if (pssr(w) != b.concat(reverse(b))) return "fails for " + w.str();
        return {};
    });
    property(run, "pss(w) = w sh w = image under a -> aa, |w|<=9, k<=3", small, [](const Word& w) -> std::string {
        const Word p = pss(w);
        if (p != perfect_shuffle(w, w) || p != au::Morphism::doubling(w.k()).apply(w)) return "fails for " + w.str();
        return {};
    });
    return run.failures();
}

// Union of the root-shuffles of every root of the given length.
template <class Shuffles>
std::map<std::size_t, WordSet> unions_by_length(std::size_t k, std::size_t max_root, Shuffles shuffles) {
    std::map<std::size_t, WordSet> out;
    for (std::size_t n = 0; n <= max_root; ++n) {
        WordSet u(k);
        for (const auto& x : all_words(k, n)) u.merge(shuffles(x));
        out.emplace(n, std::move(u));
    }
    return out;
}

std::string check_witness(const Word& w, const std::optional<orc::SelfShuffleWitness>& found, bool expected,
                          std::size_t copies, bool reversed) {
    if (found.has_value() != expected) {
        return std::string("oracle says ") + (found ? "yes" : "no") + " for " + w.str();
    }
    if (!found) return {};
    std::vector<Word> ops(copies, found->root);
    if (reversed) ops[1] = reverse(found->root);
    if (!orc::replay(w, ops, found->certificate)) return "certificate does not replay for " + w.str();
    return {};
}

std::size_t run_oracles(const Reporter& report) {
    Runner run("oracles", report);

    for (std::size_t k = 2; k <= 3; ++k) {
        const std::string tag = "k=" + std::to_string(k) + ", |w|<=10";
        auto ss = unions_by_length(k, 5, [](const Word& x) { return ss_set(x); });
        auto ssr = unions_by_length(k, 5, [](const Word& x) { return ssr_set(x); });
        const auto cases = words_upto(k, 10);
        property(run, "exists_self_shuffle matches brute-force union, " + tag, cases, [&](const Word& w) {
            const bool expected = w.size() % 2 == 0 && ss.at(w.size() / 2).contains(w);
            return check_witness(w, orc::exists_self_shuffle(w), expected, 2, false);
        });
        property(run, "exists_self_shuffle_reverse matches brute-force union, " + tag, cases, [&](const Word& w) {
            const bool expected = w.size() % 2 == 0 && ssr.at(w.size() / 2).contains(w);
            auto why = check_witness(w, orc::exists_self_shuffle_reverse(w), expected, 2, true);
            if (why.empty()) why = check_witness(w, orc::search_self_shuffle_reverse(w), expected, 2, true);
            return why;
        });
        property(run, "reverse self-shuffle implies abelian square, " + tag, cases, [](const Word& w) -> std::string {
            if (orc::exists_self_shuffle_reverse(w) && !orc::is_abelian_square(w)) return "fails for " + w.str();
            return {};
        });
    }

    {
        auto triple = unions_by_length(2, 4, [](const Word& x) {
            const Word three[] = {x, x, x};
            return shuffle_many(three);
        });
        property(run, "exists_triple_self_shuffle matches brute-force union, k=2, |w|<=12", words_upto(2, 12),
                 [&](const Word& w) {
                     const bool expected = w.size() % 3 == 0 && triple.at(w.size() / 3).contains(w);
                     return check_witness(w, orc::exists_triple_self_shuffle(w), expected, 3, false);
                 });
    }

    property(run, "binary abelian square implies reverse self-shuffle, |w|<=14", words_upto(2, 14),
             [](const Word& w) -> std::string {
                 if (orc::is_abelian_square(w) && !orc::exists_self_shuffle_reverse(w)) return "fails for " + w.str();
                 return {};
             });

    {
        std::vector<std::array<std::size_t, 4>> family;
        for (std::size_t a = 1; a <= 3; ++a)
            for (std::size_t b = 1; b <= 3; ++b)
                for (std::size_t c = 1; c <= 3; ++c)
                    for (std::size_t d = 1; d <= 3; ++d) family.push_back({a, b, c, d});
        property(run, "01^a 0^(b+1) 1^(c+1) 0^d 1 is a self-shuffle iff a=c and b=d", family,
                 [](const auto& p) -> std::string {
                     const auto [a, b, c, d] = p;
                     const Word w = blocks({{0, 1}, {1, a}, {0, b + 1}, {1, c + 1}, {0, d}, {1, 1}}, 2);
                     const bool expected = a == c && b == d;
                     return check_witness(w, orc::exists_self_shuffle(w), expected, 2, false);
                 });
    }

    {
        std::vector<std::array<std::size_t, 4>> family;
        for (std::size_t a = 1; a <= 11; ++a)
            for (std::size_t b = 1; a + b <= 12; ++b)
                for (std::size_t c = 1; a + b + c <= 13; ++c)
                    for (std::size_t d = 1; a + b + c + d <= 14; ++d) family.push_back({a, b, c, d});
        property(run, "0^a 1^b 0^c 1^d in ssr iff in the two-family description, |w|<=14", family,
                 [](const auto& p) -> std::string {
                     const auto [a, b, c, d] = p;
                     const Word w = blocks({{0, a}, {1, b}, {0, c}, {1, d}}, 2);
                     const bool expected = (b == d && c >= a && (c - a) % 2 == 0) ||
                                           (a == c && b >= d && (b - d) % 2 == 0);
                     return check_witness(w, orc::exists_self_shuffle_reverse(w), expected, 2, true);
                 });
    }

    {
        const Word w = Word::parse("012012");
        std::string why;
        if (!orc::is_abelian_square(w)) why = "012012 is not reported as an abelian square";
        if (orc::exists_self_shuffle_reverse(w)) why = "012012 reported as a reverse self-shuffle";
        run.record("012012 is an abelian square outside ssr", why, 1);
    }

    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t m = 0; m <= 5; ++m) {
        for (std::size_t n = 0; n + m <= 10 && n <= 5; ++n) {
            for (const auto& x : all_words(2, m))
                for (const auto& y : all_words(2, n)) pairs.emplace_back(x, y);
        }
    }
    property(run, "is_interleaving agrees with shuffle_set membership, |x|+|y|<=10", pairs,
             [](const auto& p) -> std::string {
                 const auto& [x, y] = p;
                 const WordSet s = shuffle_set(x, y);
                 const Word ops[] = {x, y};
                 for (const auto& w : all_words(2, x.size() + y.size())) {
                     auto cert = orc::is_interleaving(w, x, y);
                     if (cert.has_value() != s.contains(w)) return "disagrees on " + w.str() + " in " + x.str() + " SH " + y.str();
                     if (cert && !orc::replay(w, ops, *cert)) return "bad certificate for " + w.str();
                 }
                 return {};
             });
    return run.failures();
}

struct CorpusEntry {
    std::string regex;
    std::size_t k;
};

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"0+10+", 2},  {"(00|11)+", 2}, {"(00)+11", 2}, {"0*", 2},     {".*", 2},
        {"01", 2},     {"1*0", 2},      {"(01)*", 2},   {"0?1+0?", 2}, {"(0|11)*", 2},
        {"0(12)*2?", 3}, {"2*10*", 3},
    };
    return entries;
}

std::string diff(const WordSet& got, const WordSet& want) {
    for (const auto& w : got) {
        if (!want.contains(w)) return "extra word '" + w.str() + "'";
    }
    for (const auto& w : want) {
        if (!got.contains(w)) return "missing word '" + w.str() + "'";
    }
    return {};
}

std::size_t run_automata(const VerifyOptions& opts, const Reporter& report) {
    Runner run("automata", report);
    const std::size_t len = opts.max_len;
    const std::string bound = ", l=" + std::to_string(len);

    struct Built {
        std::string regex;
        au::Nfa nfa;
        WordSet words;
    };
    std::vector<Built> langs;
    for (const auto& e : corpus()) {
        au::Nfa a = au::nfa_from_regex(e.regex, e.k);
        WordSet ws = au::enumerate_language(a, len);
        langs.push_back({e.regex, std::move(a), std::move(ws)});
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < langs.size(); ++i) {
        for (std::size_t j = 0; j < langs.size(); ++j) {
            if (langs[i].nfa.k() == langs[j].nfa.k()) pairs.emplace_back(i, j);
        }
    }

    property(run, "shuffle_nfa: morphism route = product route = brute force" + bound, pairs, [&](const auto& p) {
        const Built& A = langs[p.first];
        const Built& B = langs[p.second];
        WordSet want(A.nfa.k());
        for (const auto& x : A.words)
            for (const auto& y : B.words)
                if (x.size() + y.size() <= len) want.merge(shuffle_set(x, y));
        std::string why = diff(au::enumerate_language(au::shuffle_nfa_product(A.nfa, B.nfa), len), want);
        if (why.empty()) why = diff(au::enumerate_language(au::shuffle_nfa_morphism(A.nfa, B.nfa), len), want);
        return why.empty() ? why : A.regex + " SH " + B.regex + ": " + why;
    });

    property(run, "perfect_shuffle_nfa (both routes) = brute force" + bound, pairs, [&](const auto& p) {
        const Built& A = langs[p.first];
        const Built& B = langs[p.second];
        WordSet want(A.nfa.k());
        for (const auto& x : A.words)
            for (const auto& y : B.words)
                if (x.size() == y.size() && 2 * x.size() <= len) want.insert(perfect_shuffle(x, y));
        std::string why = diff(au::enumerate_language(au::perfect_shuffle_nfa(A.nfa, B.nfa), len), want);
        if (why.empty()) why = diff(au::enumerate_language(au::perfect_shuffle_nfa_morphism(A.nfa, B.nfa), len), want);
        return why.empty() ? why : A.regex + " sh " + B.regex + ": " + why;
    });

    struct Unary {
        std::string name;
        std::function<au::Nfa(const au::Nfa&)> build;
        au::WordOperation op;
    };
    const std::vector<Unary> unary = {
        {"pss_nfa", au::pss_nfa, pss},
        {"bdi_nfa", au::bdi_nfa, bdi},
        {"bdir_nfa", au::bdir_nfa, bdir},
        {"reverse_nfa", au::reverse_nfa, reverse},
    };
    for (const auto& u : unary) {
        property(run, u.name + " = word-level image" + bound, langs, [&](const Built& A) {
            // pss doubles lengths, so its sources stop at half the bound.
            const std::size_t src_len = u.name == "pss_nfa" ? len / 2 : len;
            WordSet want = au::image_under(u.op, A.nfa, src_len);
            std::string why = diff(au::enumerate_language(u.build(A.nfa), len), want);
            return why.empty() ? why : A.regex + ": " + why;
        });
    }

    {
        WordSet got = au::image_under(bd, au::nfa_from_regex("(00|11)+", 2), len);
        WordSet want(2);
        for (std::size_t n = 1; 2 * n <= len; ++n)
            for (const auto& w : all_words(2, n)) want.insert(w.concat(w));
        run.record("bd((00|11)+) = {ww : w nonempty}" + bound, diff(got, want), want.size());
    }
    {
        au::Nfa window = au::nfa_from_regex("0+110+", 2);
        WordSet got(2);
        for (const auto& w : au::image_under(pssr, au::nfa_from_regex("0+10+", 2), len)) {
            if (au::nfa_member(window, w)) got.insert(w);
        }
        // pssr(0^a 1 0^b) lands in 0+110+ exactly when a = b or a = b + 1.
        WordSet want(2);
        for (std::size_t n = 2; n + 1 <= len; ++n) want.insert(blocks({{0, n}, {1, 2}, {0, n}}, 2));
        run.record("pssr(0+10+) ∩ 0+110+ = {0^n 11 0^n : n >= 2}" + bound, diff(got, want), want.size());
    }
    {
        std::vector<std::pair<std::size_t, std::size_t>> mn;
        for (std::size_t m = 1; m <= 4; ++m)
            for (std::size_t n = 1; n <= 4; ++n) mn.emplace_back(m, n);
        property(run, "bdi(0^m 1^m 2^2n 3^4n) case formula, m,n<=4", mn, [](const auto& p) -> std::string {
            const auto [m, n] = p;
            const Word w = blocks({{0, m}, {1, m}, {2, 2 * n}, {3, 4 * n}}, 4);
            std::vector<std::pair<Word, std::size_t>> parts;
            auto pair = [](Symbol a, Symbol b) { return Word({a, b}, 4); };
            if (m >= 3 * n) {
                parts = {{pair(0, 1), m - 3 * n}, {pair(0, 2), 2 * n}, {pair(0, 3), n}, {pair(1, 3), 3 * n}};
            } else if (n <= m) {
                parts = {{pair(0, 2), m - n}, {pair(0, 3), n}, {pair(1, 3), m}, {pair(2, 3), 3 * n - m}};
            } else {
                parts = {{pair(0, 3), m}, {pair(1, 3), m}, {pair(2, 3), 2 * n}, {pair(3, 3), n - m}};
            }
            Word want(4);
            for (const auto& [unit, times] : parts)
                for (std::size_t t = 0; t < times; ++t) want = want.concat(unit);
            if (bdi(w) != want) return "m=" + std::to_string(m) + " n=" + std::to_string(n);
            return {};
        });
        property(run, "bdir(0^2m 1^4m 2^n 3^n) case formula, m,n<=4", mn, [](const auto& p) -> std::string {
            const auto [m, n] = p;
            const Word w = blocks({{0, 2 * m}, {1, 4 * m}, {2, n}, {3, n}}, 4);
            std::vector<std::pair<Word, std::size_t>> parts;
            auto pair = [](Symbol a, Symbol b) { return Word({a, b}, 4); };
            if (m >= n) {
                parts = {{pair(0, 3), n}, {pair(0, 2), n}, {pair(0, 1), 2 * m - 2 * n}, {pair(1, 1), m + n}};
            } else if (n <= 2 * m) {
                parts = {{pair(0, 3), n}, {pair(0, 2), 2 * m - n}, {pair(1, 2), 2 * n - 2 * m}, {pair(1, 1), 3 * m - n}};
            } else if (n <= 3 * m) {
                parts = {{pair(0, 3), 2 * m}, {pair(1, 3), n - 2 * m}, {pair(1, 2), n}, {pair(1, 1), 3 * m - n}};
            } else if (n <= 6 * m) {
                parts = {{pair(0, 3), 2 * m}, {pair(1, 3), n - 2 * m}, {pair(1, 2), 6 * m - n}, {pair(2, 2), n - 3 * m}};
            } else {
                parts = {{pair(0, 3), 2 * m}, {pair(1, 3), 4 * m}, {pair(2, 3), n - 6 * m}, {pair(2, 2), 3 * m}};
            }
            Word want(4);
            for (const auto& [unit, times] : parts)
                for (std::size_t t = 0; t < times; ++t) want = want.concat(unit);
            if (bdir(w) != want) return "m=" + std::to_string(m) + " n=" + std::to_string(n);
            return {};
        });
    }
    return run.failures();
}

struct PublishedRow {
    en::SequenceKind kind;
    std::size_t k;
    std::vector<std::uint64_t> values;
};

const std::vector<PublishedRow>& published_rows() {
    using K = en::SequenceKind;
    static const std::vector<PublishedRow> rows = {
        {K::SelfShuffle, 2, {1, 2, 6, 22, 82, 320, 1268, 5102, 20632, 83972}},
        {K::SelfShuffle, 3, {1, 3, 15, 93, 621, 4425, 32703, 248901}},
        {K::SelfShuffle, 4, {1, 4, 28, 244, 2332, 23848, 254416}},
        {K::SelfShuffle, 5, {1, 5, 45, 505, 6265, 83225}},
        {K::SelfShuffle, 6, {1, 6, 66, 906, 13806, 225336}},
        {K::SelfShuffleReverse, 2, {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620}},
        {K::SelfShuffleReverse, 3, {1, 3, 15, 87, 549, 3657, 25317, 180459}},
        {K::SelfShuffleReverse, 4, {1, 4, 28, 232, 2116, 20560, 208912}},
        {K::SelfShuffleReverse, 5, {1, 5, 45, 485, 5785, 73785}},
        {K::SelfShuffleReverse, 6, {1, 6, 66, 876, 12906, 203676}},
    };
    return rows;
}

std::size_t run_enumeration(const Reporter& report) {
    Runner run("enumeration", report);

    std::map<std::pair<en::SequenceKind, std::size_t>, en::SequenceTable> computed;
    for (const auto& row : published_rows()) {
        auto table = en::sequence_row(row.kind, row.k, row.values.size() - 1);
        std::string why;
        for (std::size_t n = 0; n < row.values.size() && why.empty(); ++n) {
            if (table.counts.at(n) != row.values[n]) {
                why = "n=" + std::to_string(n) + ": computed " + table.counts.at(n).str() + ", published " +
                      std::to_string(row.values[n]);
            }
        }
        run.record(std::string(1, en::kind_letter(row.kind)) + "_" + std::to_string(row.k) + "(0.." +
                       std::to_string(row.values.size() - 1) + ") matches the published row",
                   why, row.values.size());
        computed.emplace(std::pair{row.kind, row.k}, std::move(table));
    }

    {
        std::string why;
        const auto& b2 = computed.at({en::SequenceKind::SelfShuffleReverse, 2});
        for (std::size_t n = 0; n <= 9 && why.empty(); ++n) {
            const auto binom = en::binomial(static_cast<long>(2 * n), static_cast<long>(n));
            if (b2.counts.at(n) != binom || en::sum_of_squared_binomials(n) != binom ||
                en::binary_abelian_square_count(n) != binom) {
                why = "n=" + std::to_string(n);
            }
        }
        run.record("b_2(n) = C(2n,n) = sum C(n,i)^2 = #binary abelian squares, n<=9", why, 10);
    }

    for (auto kind : {en::SequenceKind::SelfShuffle, en::SequenceKind::SelfShuffleReverse}) {
        const auto rep = en::check_empirical_polynomials(kind, 6, 5);
        std::string why;
        for (const auto& c : rep.checks) {
            if (!c.agrees()) {
                why = "n=" + std::to_string(c.n) + " i=" + std::to_string(c.i) + ": formula " + c.predicted.str() +
                      ", computed " + c.computed.str();
                break;
            }
        }
        const std::string letter(1, en::kind_letter(kind));
        run.record(letter + "_i(n) closed forms for n<=5, i<=6", why, rep.checks.size());
        for (const auto& row : rep.conjecture) {
            std::ostringstream detail;
            detail << "fitted i^" << row.n << " coefficient " << row.fitted[row.n] << " vs " << row.conjectured_leading
                   << ", i^" << row.n - 1 << " coefficient " << row.fitted[row.n - 1] << " vs "
                   << row.conjectured_second;
            run.info(letter + "_i(" + std::to_string(row.n) + ") leading terms (conjecture, not asserted)",
                     detail.str());
        }
    }

    {
        std::string why;
        std::size_t cases = 0;
        for (const auto& [key, table] : computed) {
            auto next = computed.find({key.first, key.second + 1});
            if (next == computed.end()) continue;
            for (const auto& [n, count] : table.counts) {
                auto it = next->second.counts.find(n);
                if (it == next->second.counts.end()) continue;
                ++cases;
                if (count > it->second && why.empty()) why = "decreases at k=" + std::to_string(key.second);
            }
        }
        run.record("counts are monotone in the alphabet size", why, cases);
    }

    {
        std::string why;
        for (const auto& [key, table] : computed) {
            const en::BigInt k(key.second);
            if (table.counts.at(1) != k || table.counts.at(2) != 2 * k * k - k) {
                why = std::string(1, en::kind_letter(key.first)) + "_" + std::to_string(key.second) + " fails";
            }
        }
        run.record("x_k(1) = k and x_k(2) = 2k^2 - k, k<=6", why, computed.size());
    }
    return run.failures();
}

} // namespace

std::vector<std::string> suite_names() { return {"words", "oracles", "automata", "enumeration", "all"}; }

std::size_t run_suite(std::string_view suite, const VerifyOptions& opts, const Reporter& report) {
    if (suite == "words") return run_words(report);
    if (suite == "oracles") return run_oracles(report);
    if (suite == "automata") return run_automata(opts, report);
    if (suite == "enumeration") return run_enumeration(report);
    if (suite == "all") {
        return run_words(report) + run_oracles(report) + run_automata(opts, report) + run_enumeration(report);
    }
    throw ContractError("unknown verify suite '" + std::string(suite) + "'");
}

} // namespace shufflekit::verify
