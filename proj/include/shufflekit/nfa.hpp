#pragma once

#include "shufflekit/word.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace shufflekit::automata {

using State = std::uint32_t;

/// Symbol label, or nullopt for an epsilon move.
using Label = std::optional<Symbol>;

struct Transition {
    State source = 0;
    Label label;
    State target = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic finite automaton with epsilon moves over {0, ..., k-1}.
class Nfa {
public:
    Nfa() = default;
    explicit Nfa(std::size_t k, std::size_t states = 0);

    /// NFA accepting nothing.
    static Nfa empty_language(std::size_t k);
    /// NFA accepting exactly one word.
    static Nfa single_word(const Word& w);

    std::size_t k() const noexcept { return k_; }
    std::size_t state_count() const noexcept { return state_count_; }
    const std::set<Transition>& transitions() const noexcept { return transitions_; }
    const std::set<State>& initial() const noexcept { return initial_; }
    const std::set<State>& final() const noexcept { return final_; }

    State add_state();
    void add_transition(State source, Label label, State target);
    void add_initial(State s);
    void add_final(State s);

private:
    void check_state(State s) const;

    std::size_t k_ = 1;
    std::size_t state_count_ = 0;
    std::set<Transition> transitions_;
    std::set<State> initial_;
    std::set<State> final_;
};

/// Per-symbol substitution from {0..k_source-1}* to {0..k_target-1}*. Images may be empty.
class Morphism {
public:
    Morphism(std::size_t k_source, std::size_t k_target, std::vector<Word> images);

    /// a -> aa over an alphabet of size k.
    static Morphism doubling(std::size_t k);

    std::size_t k_source() const noexcept { return k_source_; }
    std::size_t k_target() const noexcept { return k_target_; }
    const Word& image(Symbol a) const { return images_.at(a); }
    Word apply(const Word& w) const;

private:
    std::size_t k_source_;
    std::size_t k_target_;
    std::vector<Word> images_;
};

bool nfa_member(const Nfa& a, const Word& w);

/// Drops states that are unreachable or cannot reach a final state.
Nfa trim(const Nfa& a);
/// Equivalent automaton without epsilon moves, trimmed.
Nfa remove_epsilons(const Nfa& a);

Nfa intersect(const Nfa& a, const Nfa& b);
Nfa reverse_nfa(const Nfa& a);

/// h(L(a)); a must be over h's source alphabet.
Nfa apply_morphism(const Nfa& a, const Morphism& h);
/// h^{-1}(L(a)); a must be over h's target alphabet.
Nfa inverse_morphism(const Nfa& a, const Morphism& h);

/// L(a) SH L(b) as h(h1^{-1}(L(a)) ∩ h2^{-1}(L(b))) over the primed alphabet
/// {0..k-1} ∪ {k..2k-1}, where a' is encoded as a + k.
Nfa shuffle_nfa_morphism(const Nfa& a, const Nfa& b);
/// L(a) SH L(b) as a product where every letter advances exactly one component.
Nfa shuffle_nfa_product(const Nfa& a, const Nfa& b);
inline Nfa shuffle_nfa(const Nfa& a, const Nfa& b) { return shuffle_nfa_product(a, b); }

/// {x sh y : x in L(a), y in L(b), |x| = |y|} via a product with a turn bit.
Nfa perfect_shuffle_nfa(const Nfa& a, const Nfa& b);
/// Same language via h(h1^{-1}(L(a)) ∩ h2^{-1}(L(b)) ∩ (ΣΣ')*).
Nfa perfect_shuffle_nfa_morphism(const Nfa& a, const Nfa& b);

/// {pss(w) : w in L(a)}, the image under a -> aa.
Nfa pss_nfa(const Nfa& a);
/// {bdi(w) : w in L(a)}.
Nfa bdi_nfa(const Nfa& a);
/// {bdir(w) : w in L(a)}.
Nfa bdir_nfa(const Nfa& a);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// L(a) restricted to words of length <= max_len. Throws ResourceLimitError past `cap` words.
WordSet enumerate_language(const Nfa& a, std::size_t max_len,
                           std::size_t cap = kDefaultEnumerationCap);

using WordOperation = std::function<Word(const Word&)>;

/// {f(w) : w in L(a), |w| <= max_len}.
WordSet image_under(const WordOperation& f, const Nfa& a, std::size_t max_len,
                    std::size_t cap = kDefaultEnumerationCap);

} // namespace shufflekit::automata
