#include "shufflekit/nfa.hpp"

#include "shufflekit/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace shufflekit::automata {

namespace {

struct Adjacency {
    std::vector<std::vector<std::pair<Symbol, State>>> moves;
    std::vector<std::vector<State>> eps;

    explicit Adjacency(const Nfa& a, bool reversed = false)
        : moves(a.state_count()), eps(a.state_count()) {
        for (const auto& t : a.transitions()) {
            const State from = reversed ? t.target : t.source;
            const State to = reversed ? t.source : t.target;
            if (t.label) {
                moves[from].emplace_back(*t.label, to);
            } else {
                eps[from].push_back(to);
            }
        }
    }
};

using StateSet = std::vector<State>;

StateSet closure(const Adjacency& adj, StateSet seeds) {
    std::vector<char> seen(adj.eps.size(), 0);
    StateSet out;
    while (!seeds.empty()) {
        State s = seeds.back();
        seeds.pop_back();
        if (seen[s]) continue;
        seen[s] = 1;
        out.push_back(s);
        for (State t : adj.eps[s]) seeds.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

StateSet step(const Adjacency& adj, const StateSet& from, Symbol a) {
    StateSet next;
    for (State s : from) {
        for (const auto& [label, t] : adj.moves[s]) {
            if (label == a) next.push_back(t);
        }
    }
    return closure(adj, std::move(next));
}

bool any_final(const Nfa& a, const StateSet& s) {
    return std::any_of(s.begin(), s.end(), [&](State q) { return a.final().contains(q); });
}

void require_same_alphabet(const Nfa& a, const Nfa& b) {
    if (a.k() != b.k()) {
        throw ContractError("automata over different alphabets (" + std::to_string(a.k()) + " vs " +
                            std::to_string(b.k()) + ")");
    }
}

// Builds an automaton over tuple-valued states discovered breadth-first.
template <class Key>
class ProductBuilder {
public:
    explicit ProductBuilder(std::size_t k) : out_(k) {}

    State get(const Key& key) {
        auto [it, fresh] = ids_.try_emplace(key, 0);
        if (fresh) {
            it->second = out_.add_state();
            pending_.push_back(key);
        }
        return it->second;
    }
    bool has_pending() const { return !pending_.empty(); }
    Key next() {
        Key k = pending_.front();
        pending_.pop_front();
        return k;
    }
    Nfa& nfa() { return out_; }

private:
    Nfa out_;
    std::map<Key, State> ids_;
    std::deque<Key> pending_;
};

// Alphabet {0..k-1} ∪ {k..2k-1}; symbol a + k plays the role of a'.
struct PrimedMorphisms {
    Morphism keep_unprimed; // h1
    Morphism keep_primed;   // h2
    Morphism erase_primes;  // h

    explicit PrimedMorphisms(std::size_t k)
        : keep_unprimed(build(k, true)), keep_primed(build(k, false)), erase_primes(build_h(k)) {}

    static Morphism build(std::size_t k, bool unprimed) {
        std::vector<Word> images;
        for (std::size_t a = 0; a < 2 * k; ++a) {
            const bool primed = a >= k;
            if (primed != unprimed) {
                images.push_back(Word({static_cast<Symbol>(a % k)}, k));
            } else {
                images.emplace_back(k);
            }
        }
        return Morphism(2 * k, k, std::move(images));
    }
    static Morphism build_h(std::size_t k) {
        std::vector<Word> images;
        for (std::size_t a = 0; a < 2 * k; ++a) images.push_back(Word({static_cast<Symbol>(a % k)}, k));
        return Morphism(2 * k, k, std::move(images));
    }
};

} // namespace

Nfa::Nfa(std::size_t k, std::size_t states) : k_(k), state_count_(states) {
    if (k == 0 || k > kMaxAlphabetSize) throw ContractError("alphabet size must be in [1, 256]");
}

Nfa Nfa::empty_language(std::size_t k) { return Nfa(k); }

Nfa Nfa::single_word(const Word& w) {
    Nfa out(w.k(), w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        out.add_transition(static_cast<State>(i), w[i], static_cast<State>(i + 1));
    }
    out.add_initial(0);
    out.add_final(static_cast<State>(w.size()));
    return out;
}

State Nfa::add_state() { return static_cast<State>(state_count_++); }

void Nfa::check_state(State s) const {
    if (s >= state_count_) {
        throw ContractError("state " + std::to_string(s) + " out of range (" +
                            std::to_string(state_count_) + " states)");
    }
}

void Nfa::add_transition(State source, Label label, State target) {
    check_state(source);
    check_state(target);
    if (label && *label >= k_) {
        throw ContractError("transition label " + std::to_string(*label) + " outside alphabet of size " +
                            std::to_string(k_));
    }
    transitions_.insert(Transition{source, label, target});
}

void Nfa::add_initial(State s) {
    check_state(s);
    initial_.insert(s);
}

void Nfa::add_final(State s) {
    check_state(s);
    final_.insert(s);
}

Morphism::Morphism(std::size_t k_source, std::size_t k_target, std::vector<Word> images)
    : k_source_(k_source), k_target_(k_target), images_(std::move(images)) {
    if (images_.size() != k_source_) {
        throw ContractError("morphism needs one image per source symbol");
    }
    for (const auto& img : images_) {
        if (img.k() != k_target_) throw ContractError("morphism image over the wrong alphabet");
    }
}

Morphism Morphism::doubling(std::size_t k) {
    std::vector<Word> images;
    for (std::size_t a = 0; a < k; ++a) {
        images.push_back(Word({static_cast<Symbol>(a), static_cast<Symbol>(a)}, k));
    }
    return Morphism(k, k, std::move(images));
}

Word Morphism::apply(const Word& w) const {
    if (w.k() != k_source_) throw ContractError("morphism applied to a word over the wrong alphabet");
    Word out(k_target_);
    for (Symbol s : w) {
        for (Symbol t : images_[s]) out.push_back(t);
    }
    return out;
}

bool nfa_member(const Nfa& a, const Word& w) {
    if (w.k() != a.k()) throw ContractError("word and automaton over different alphabets");
    Adjacency adj(a);
    StateSet current = closure(adj, StateSet(a.initial().begin(), a.initial().end()));
    for (Symbol s : w) {
        if (current.empty()) return false;
        current = step(adj, current, s);
    }
    return any_final(a, current);
}

Nfa trim(const Nfa& a) {
    const std::size_t n = a.state_count();
    auto reach = [n](const Adjacency& adj, const std::set<State>& seeds) {
        std::vector<char> seen(n, 0);
        std::vector<State> stack(seeds.begin(), seeds.end());
        while (!stack.empty()) {
            State s = stack.back();
            stack.pop_back();
            if (seen[s]) continue;
            seen[s] = 1;
            for (const auto& m : adj.moves[s]) stack.push_back(m.second);
            for (State t : adj.eps[s]) stack.push_back(t);
        }
        return seen;
    };
    auto forward = reach(Adjacency(a), a.initial());
    auto backward = reach(Adjacency(a, true), a.final());

    std::vector<State> renumber(n, 0);
    Nfa out(a.k());
    for (std::size_t s = 0; s < n; ++s) {
        if (forward[s] && backward[s]) renumber[s] = out.add_state();
    }
    auto kept = [&](State s) { return forward[s] && backward[s]; };
    for (const auto& t : a.transitions()) {
        if (kept(t.source) && kept(t.target)) {
            out.add_transition(renumber[t.source], t.label, renumber[t.target]);
        }
    }
    for (State s : a.initial()) {
        if (kept(s)) out.add_initial(renumber[s]);
    }
    for (State s : a.final()) {
        if (kept(s)) out.add_final(renumber[s]);
    }
    return out;
}

Nfa remove_epsilons(const Nfa& a) {
    Adjacency adj(a);
    Nfa out(a.k(), a.state_count());
    for (State p = 0; p < a.state_count(); ++p) {
        StateSet reach = closure(adj, {p});
        for (State q : reach) {
            for (const auto& [label, r] : adj.moves[q]) out.add_transition(p, label, r);
        }
        if (any_final(a, reach)) out.add_final(p);
    }
    for (State s : a.initial()) out.add_initial(s);
    return trim(out);
}

Nfa intersect(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    Adjacency adj_a(a);
    Adjacency adj_b(b);
    using Key = std::pair<State, State>;
    ProductBuilder<Key> build(a.k());
    for (State p : a.initial()) {
        for (State q : b.initial()) build.nfa().add_initial(build.get({p, q}));
    }
    while (build.has_pending()) {
        const auto [p, q] = build.next();
        const State from = build.get({p, q});
        if (a.final().contains(p) && b.final().contains(q)) build.nfa().add_final(from);
        for (State p2 : adj_a.eps[p]) build.nfa().add_transition(from, std::nullopt, build.get({p2, q}));
        for (State q2 : adj_b.eps[q]) build.nfa().add_transition(from, std::nullopt, build.get({p, q2}));
        for (const auto& [la, p2] : adj_a.moves[p]) {
            for (const auto& [lb, q2] : adj_b.moves[q]) {
                if (la == lb) build.nfa().add_transition(from, la, build.get({p2, q2}));
            }
        }
    }
    return build.nfa();
}

Nfa reverse_nfa(const Nfa& a) {
    Nfa out(a.k(), a.state_count());
    for (const auto& t : a.transitions()) out.add_transition(t.target, t.label, t.source);
    for (State s : a.final()) out.add_initial(s);
    for (State s : a.initial()) out.add_final(s);
    return out;
}

Nfa apply_morphism(const Nfa& a, const Morphism& h) {
    if (a.k() != h.k_source()) throw ContractError("automaton alphabet does not match morphism source");
    Nfa out(h.k_target(), a.state_count());
    for (const auto& t : a.transitions()) {
        if (!t.label) {
            out.add_transition(t.source, std::nullopt, t.target);
            continue;
        }
        const Word& img = h.image(*t.label);
        if (img.empty()) {
            out.add_transition(t.source, std::nullopt, t.target);
            continue;
        }
        State at = t.source;
        for (std::size_t i = 0; i < img.size(); ++i) {
            const State to = i + 1 == img.size() ? t.target : out.add_state();
            out.add_transition(at, img[i], to);
            at = to;
        }
    }
    for (State s : a.initial()) out.add_initial(s);
    for (State s : a.final()) out.add_final(s);
    return out;
}

Nfa inverse_morphism(const Nfa& a, const Morphism& h) {
    if (a.k() != h.k_target()) throw ContractError("automaton alphabet does not match morphism target");
    Adjacency adj(a);
    Nfa out(h.k_source(), a.state_count());
    for (State p = 0; p < a.state_count(); ++p) {
        const StateSet start = closure(adj, {p});
        for (std::size_t sym = 0; sym < h.k_source(); ++sym) {
            StateSet at = start;
            for (Symbol s : h.image(static_cast<Symbol>(sym))) {
                if (at.empty()) break;
                at = step(adj, at, s);
            }
            for (State q : at) out.add_transition(p, static_cast<Symbol>(sym), q);
        }
    }
    for (const auto& t : a.transitions()) {
        if (!t.label) out.add_transition(t.source, std::nullopt, t.target);
    }
    for (State s : a.initial()) out.add_initial(s);
    for (State s : a.final()) out.add_final(s);
    return out;
}

Nfa shuffle_nfa_morphism(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    PrimedMorphisms hs(a.k());
    Nfa both = intersect(inverse_morphism(a, hs.keep_unprimed), inverse_morphism(b, hs.keep_primed));
    return apply_morphism(trim(both), hs.erase_primes);
}

Nfa shuffle_nfa_product(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    Adjacency adj_a(a);
    Adjacency adj_b(b);
    using Key = std::pair<State, State>;
    ProductBuilder<Key> build(a.k());
    for (State p : a.initial()) {
        for (State q : b.initial()) build.nfa().add_initial(build.get({p, q}));
    }
    while (build.has_pending()) {
        const auto [p, q] = build.next();
        const State from = build.get({p, q});
        if (a.final().contains(p) && b.final().contains(q)) build.nfa().add_final(from);
        for (State p2 : adj_a.eps[p]) build.nfa().add_transition(from, std::nullopt, build.get({p2, q}));
        for (State q2 : adj_b.eps[q]) build.nfa().add_transition(from, std::nullopt, build.get({p, q2}));
        for (const auto& [la, p2] : adj_a.moves[p]) build.nfa().add_transition(from, la, build.get({p2, q}));
        for (const auto& [lb, q2] : adj_b.moves[q]) build.nfa().add_transition(from, lb, build.get({p, q2}));
    }
    return trim(build.nfa());
}

Nfa perfect_shuffle_nfa(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    Adjacency adj_a(a);
    Adjacency adj_b(b);
    // turn 0: next letter comes from a; turn 1: from b.
    using Key = std::tuple<State, State, int>;
    ProductBuilder<Key> build(a.k());
    for (State p : a.initial()) {
        for (State q : b.initial()) build.nfa().add_initial(build.get({p, q, 0}));
    }
    while (build.has_pending()) {
        const auto [p, q, turn] = build.next();
        const State from = build.get({p, q, turn});
        if (turn == 0 && a.final().contains(p) && b.final().contains(q)) build.nfa().add_final(from);
        for (State p2 : adj_a.eps[p]) build.nfa().add_transition(from, std::nullopt, build.get({p2, q, turn}));
        for (State q2 : adj_b.eps[q]) build.nfa().add_transition(from, std::nullopt, build.get({p, q2, turn}));
        if (turn == 0) {
            for (const auto& [la, p2] : adj_a.moves[p]) build.nfa().add_transition(from, la, build.get({p2, q, 1}));
        } else {
            for (const auto& [lb, q2] : adj_b.moves[q]) build.nfa().add_transition(from, lb, build.get({p, q2, 0}));
        }
    }
    return trim(build.nfa());
}

Nfa perfect_shuffle_nfa_morphism(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a, b);
    const std::size_t k = a.k();
    PrimedMorphisms hs(k);
    Nfa alternating(2 * k, 2);
    for (std::size_t s = 0; s < k; ++s) {
        alternating.add_transition(0, static_cast<Symbol>(s), 1);
        alternating.add_transition(1, static_cast<Symbol>(s + k), 0);
    }
    alternating.add_initial(0);
    alternating.add_final(0);
    Nfa both = intersect(intersect(inverse_morphism(a, hs.keep_unprimed),
                                   inverse_morphism(b, hs.keep_primed)),
                         alternating);
    return apply_morphism(trim(both), hs.erase_primes);
}

Nfa pss_nfa(const Nfa& a) { return apply_morphism(a, Morphism::doubling(a.k())); }

Nfa bdi_nfa(const Nfa& a) {
    const Nfa m = remove_epsilons(a);
    Adjacency adj(m);
    // (first-half state, last-half state, guessed splice state, phase).
    // phase 0: next letter belongs to the first half, 1: to the last half,
    // 2: the trailing letter of an odd-length source has been read.
    using Key = std::tuple<State, State, State, int>;
    ProductBuilder<Key> build(m.k());
    for (State i : m.initial()) {
        for (State q = 0; q < m.state_count(); ++q) build.nfa().add_initial(build.get({i, q, q, 0}));
    }
    while (build.has_pending()) {
        const auto [p1, p2, q, phase] = build.next();
        const State from = build.get({p1, p2, q, phase});
        if (phase != 1 && p1 == q && m.final().contains(p2)) build.nfa().add_final(from);
        if (phase == 0) {
            for (const auto& [l, t] : adj.moves[p1]) build.nfa().add_transition(from, l, build.get({t, p2, q, 1}));
            for (const auto& [l, t] : adj.moves[p2]) build.nfa().add_transition(from, l, build.get({p1, t, q, 2}));
        } else if (phase == 1) {
            for (const auto& [l, t] : adj.moves[p2]) build.nfa().add_transition(from, l, build.get({p1, t, q, 0}));
        }
    }
    return trim(build.nfa());
}

Nfa bdir_nfa(const Nfa& a) {
    const Nfa m = remove_epsilons(a);
    Adjacency forward(m);
    Adjacency backward(m, true);
    // (forward state over the first half, backward state over the reversed last half, phase);
    // phases as in bdi_nfa. The tracks must meet in one state at the end.
    using Key = std::tuple<State, State, int>;
    ProductBuilder<Key> build(m.k());
    for (State i : m.initial()) {
        for (State f : m.final()) build.nfa().add_initial(build.get({i, f, 0}));
    }
    while (build.has_pending()) {
        const auto [p1, p2, phase] = build.next();
        const State from = build.get({p1, p2, phase});
        if (phase != 1 && p1 == p2) build.nfa().add_final(from);
        if (phase == 0) {
            for (const auto& [l, t] : forward.moves[p1]) build.nfa().add_transition(from, l, build.get({t, p2, 1}));
            for (const auto& [l, t] : backward.moves[p2]) build.nfa().add_transition(from, l, build.get({p1, t, 2}));
        } else if (phase == 1) {
            for (const auto& [l, t] : backward.moves[p2]) build.nfa().add_transition(from, l, build.get({p1, t, 0}));
        }
    }
    return trim(build.nfa());
}

WordSet enumerate_language(const Nfa& a, std::size_t max_len, std::size_t cap) {
    const Nfa m = remove_epsilons(a);
    WordSet out(a.k());
    if (m.state_count() == 0) return out;
    Adjacency adj(m);

    using Entry = std::pair<std::vector<Symbol>, StateSet>;
    std::vector<Entry> frontier;
    frontier.emplace_back(std::vector<Symbol>{}, StateSet(m.initial().begin(), m.initial().end()));
    for (std::size_t len = 0;; ++len) {
        for (const auto& [word, states] : frontier) {
            if (any_final(m, states)) {
                out.insert(Word(word, a.k()));
                if (out.size() > cap) {
                    throw ResourceLimitError("bounded language exceeds " + std::to_string(cap) + " words");
                }
            }
        }
        if (len == max_len) break;
        std::vector<Entry> next;
        for (const auto& [word, states] : frontier) {
            for (std::size_t s = 0; s < m.k(); ++s) {
                StateSet to = step(adj, states, static_cast<Symbol>(s));
                if (to.empty()) continue;
                auto w = word;
                w.push_back(static_cast<Symbol>(s));
                next.emplace_back(std::move(w), std::move(to));
            }
            if (next.size() > cap) {
                throw ResourceLimitError("enumeration frontier exceeds " + std::to_string(cap) + " words");
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return out;
}

WordSet image_under(const WordOperation& f, const Nfa& a, std::size_t max_len, std::size_t cap) {
    WordSet out(a.k());
    bool first = true;
    for (const auto& w : enumerate_language(a, max_len, cap)) {
        Word img = f(w);
        if (first) {
            out = WordSet(img.k());
            first = false;
        }
        out.insert(std::move(img));
    }
    return out;
}

} // namespace shufflekit::automata
