#include "shufflekit/regex.hpp"

#include "shufflekit/error.hpp"

#include <algorithm>
#include <string>

namespace shufflekit::automata {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Regex parse() {
        Regex r = parse_union();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

    std::size_t max_symbol_plus_one() const { return alphabet_; }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("regex: " + what + " at offset " + std::to_string(pos_));
    }

    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    Regex parse_union() {
        std::vector<Regex> alts{parse_concat()};
        while (at('|')) {
            ++pos_;
            alts.push_back(parse_concat());
        }
        if (alts.size() == 1) return std::move(alts.front());
        return Regex{Regex::Kind::Union, 0, std::move(alts)};
    }

    Regex parse_concat() {
        std::vector<Regex> parts;
        while (pos_ < text_.size() && !at('|') && !at(')')) parts.push_back(parse_postfix());
        if (parts.empty()) return Regex{};
        if (parts.size() == 1) return std::move(parts.front());
        return Regex{Regex::Kind::Concat, 0, std::move(parts)};
    }

    Regex parse_postfix() {
        Regex r = parse_atom();
        while (at('*') || at('+') || at('?')) {
            const char op = text_[pos_++];
            const auto kind = op == '*' ? Regex::Kind::Star
                            : op == '+' ? Regex::Kind::Plus
                                        : Regex::Kind::Optional;
            r = Regex{kind, 0, {std::move(r)}};
        }
        return r;
    }

    Regex parse_atom() {
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Regex inner = parse_union();
            if (!at(')')) fail("missing ')'");
            ++pos_;
            return inner;
        }
        if (c == '.') {
            ++pos_;
            return Regex{Regex::Kind::AnySymbol, 0, {}};
        }
        if (auto s = char_symbol(c)) {
            ++pos_;
            alphabet_ = std::max<std::size_t>(alphabet_, std::size_t{*s} + 1);
            return Regex{Regex::Kind::Literal, *s, {}};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t alphabet_ = 1;
};

struct Fragment {
    State start;
    State accept;
};

Fragment build(const Regex& r, Nfa& out) {
    const State start = out.add_state();
    const State accept = out.add_state();
    switch (r.kind) {
    case Regex::Kind::Epsilon:
        out.add_transition(start, std::nullopt, accept);
        break;
    case Regex::Kind::Literal:
        if (r.symbol >= out.k()) {
            throw ContractError("regex literal " + std::to_string(r.symbol) + " outside alphabet");
        }
        out.add_transition(start, r.symbol, accept);
        break;
    case Regex::Kind::AnySymbol:
        for (std::size_t s = 0; s < out.k(); ++s) out.add_transition(start, static_cast<Symbol>(s), accept);
        break;
    case Regex::Kind::Concat: {
        State at = start;
        for (const auto& c : r.children) {
            Fragment f = build(c, out);
            out.add_transition(at, std::nullopt, f.start);
            at = f.accept;
        }
        out.add_transition(at, std::nullopt, accept);
        break;
    }
    case Regex::Kind::Union:
        for (const auto& c : r.children) {
            Fragment f = build(c, out);
            out.add_transition(start, std::nullopt, f.start);
            out.add_transition(f.accept, std::nullopt, accept);
        }
        break;
    case Regex::Kind::Star:
    case Regex::Kind::Plus:
    case Regex::Kind::Optional: {
        Fragment f = build(r.children.at(0), out);
        out.add_transition(start, std::nullopt, f.start);
        out.add_transition(f.accept, std::nullopt, accept);
        if (r.kind != Regex::Kind::Plus) out.add_transition(start, std::nullopt, accept);
        if (r.kind != Regex::Kind::Optional) out.add_transition(f.accept, std::nullopt, f.start);
        break;
    }
    }
    return {start, accept};
}

} // namespace

Regex parse_regex(std::string_view text, std::size_t& k) {
    Parser p(text);
    Regex r = p.parse();
    if (k == 0) k = p.max_symbol_plus_one();
    return r;
}

Regex parse_regex(std::string_view text) {
    std::size_t k = 0;
    return parse_regex(text, k);
}

Nfa regex_to_nfa(const Regex& r, std::size_t k) {
    Nfa out(k);
    Fragment f = build(r, out);
    out.add_initial(f.start);
    out.add_final(f.accept);
    return out;
}

Nfa nfa_from_regex(std::string_view text, std::size_t k) {
    Regex r = parse_regex(text, k);
    return regex_to_nfa(r, k);
}

} // namespace shufflekit::automata
