#include "shufflekit/nfa_io.hpp"

#include "shufflekit/error.hpp"

#include "json.hpp"

#include <sstream>

namespace shufflekit::automata {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
    throw ParseError("NFA JSON field '" + field + "': " + what);
}

std::uint64_t unsigned_field(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) bad_field(field, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

const json& member(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) bad_field(name, "missing");
    return *it;
}

} // namespace

Nfa nfa_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("NFA JSON is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("NFA JSON must be an object");

    const auto k = unsigned_field(member(doc, "k"), "k");
    if (k == 0 || k > kTextAlphabetSize) bad_field("k", "must be in [1, 36]");
    const auto states = unsigned_field(member(doc, "states"), "states");

    Nfa out(k, states);
    auto state_ref = [&](const json& j, const std::string& field) {
        const auto s = unsigned_field(j, field);
        if (s >= states) bad_field(field, "state " + std::to_string(s) + " out of range");
        return static_cast<State>(s);
    };

    for (const char* name : {"initial", "final"}) {
        const json& list = member(doc, name);
        if (!list.is_array()) bad_field(name, "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const State s = state_ref(list[i], std::string(name) + "[" + std::to_string(i) + "]");
            if (std::string_view(name) == "initial") {
                out.add_initial(s);
            } else {
                out.add_final(s);
            }
        }
    }

    const json& trans = member(doc, "transitions");
    if (!trans.is_array()) bad_field("transitions", "expected an array");
    for (std::size_t i = 0; i < trans.size(); ++i) {
        const std::string field = "transitions[" + std::to_string(i) + "]";
        const json& t = trans[i];
        if (!t.is_array() || t.size() != 3) bad_field(field, "expected [source, label, target]");
        const State src = state_ref(t[0], field + "[0]");
        const State dst = state_ref(t[2], field + "[2]");
        if (!t[1].is_string()) bad_field(field + "[1]", "expected a symbol string");
        const auto label = t[1].get<std::string>();
        Label l;
        if (!label.empty()) {
            auto s = label.size() == 1 ? char_symbol(label[0]) : std::nullopt;
            if (!s || *s >= k) bad_field(field + "[1]", "'" + label + "' is not a symbol of the alphabet");
            l = *s;
        }
        out.add_transition(src, l, dst);
    }
    return out;
}

std::string nfa_to_json(const Nfa& a) {
    if (a.k() > kTextAlphabetSize) throw ContractError("alphabet too large for the JSON symbol table");
    json trans = json::array();
    for (const auto& t : a.transitions()) {
        trans.push_back({t.source, t.label ? std::string(1, symbol_char(*t.label)) : std::string(),
                         t.target});
    }
    json doc = {
        {"k", a.k()},
        {"states", a.state_count()},
        {"initial", a.initial()},
        {"final", a.final()},
        {"transitions", trans},
    };
    return doc.dump(2) + "\n";
}

std::string nfa_to_dot(const Nfa& a) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n";
    for (State s = 0; s < a.state_count(); ++s) {
        out << "  q" << s << " [shape=" << (a.final().contains(s) ? "doublecircle" : "circle")
            << ", label=\"" << s << "\"];\n";
    }
    for (State s : a.initial()) {
        out << "  start" << s << " [shape=point];\n  start" << s << " -> q" << s << ";\n";
    }
    for (const auto& t : a.transitions()) {
        std::string label = "ε";
        if (t.label) label = *t.label < kTextAlphabetSize ? std::string(1, symbol_char(*t.label))
                                                          : std::to_string(*t.label);
        out << "  q" << t.source << " -> q" << t.target << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace shufflekit::automata
