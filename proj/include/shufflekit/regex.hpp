#pragma once

#include "shufflekit/nfa.hpp"

#include <memory>
#include <string_view>
#include <vector>

namespace shufflekit::automata {

/// Regular expression syntax tree.
///
/// Text syntax: symbol characters '0'-'9', 'a'-'z'; '.' for any symbol; "()" for
/// the empty word; '|' union; postfix '*', '+', '?'; parentheses for grouping.
struct Regex {
    enum class Kind { Epsilon, Literal, AnySymbol, Concat, Union, Star, Plus, Optional };

    Kind kind = Kind::Epsilon;
    Symbol symbol = 0;
    std::vector<Regex> children;
};

/// Parses text; k == 0 infers the alphabet from the largest literal.
/// Throws ParseError on malformed input.
Regex parse_regex(std::string_view text, std::size_t& k);
Regex parse_regex(std::string_view text);

/// Thompson construction.
Nfa regex_to_nfa(const Regex& r, std::size_t k);

/// Shorthand for regex_to_nfa(parse_regex(text, k), k).
Nfa nfa_from_regex(std::string_view text, std::size_t k = 0);

} // namespace shufflekit::automata
