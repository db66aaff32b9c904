#pragma once

#include "shufflekit/nfa.hpp"

#include <string>
#include <string_view>

namespace shufflekit::automata {

/// JSON object {"k", "states", "initial", "final", "transitions"}; each transition is
/// [source, label, target] with label a symbol character or "" for epsilon.
/// Throws ParseError naming the offending field.
Nfa nfa_from_json(std::string_view text);
std::string nfa_to_json(const Nfa& a);

/// Graphviz rendering: circles, doubled finals, epsilon edges labelled "ε".
std::string nfa_to_dot(const Nfa& a);

} // namespace shufflekit::automata
