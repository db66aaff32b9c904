// shufflekit command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success / yes, 1 no (or failed verification), 2 usage or input
// error, 3 resource limit.

#include "shufflekit/shufflekit.h"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kResource = 3 };

struct CliFailure {
    int code;
    std::string message;
};

struct WordFree {
    void operator()(sk_word* w) const { sk_word_free(w); }
};
struct SetFree {
    void operator()(sk_wordset* s) const { sk_wordset_free(s); }
};
struct WitnessFree {
    void operator()(sk_witness* w) const { sk_witness_free(w); }
};
struct NfaFree {
    void operator()(sk_nfa* a) const { sk_nfa_free(a); }
};
using WordPtr = std::unique_ptr<sk_word, WordFree>;
using SetPtr = std::unique_ptr<sk_wordset, SetFree>;
using WitnessPtr = std::unique_ptr<sk_witness, WitnessFree>;
using NfaPtr = std::unique_ptr<sk_nfa, NfaFree>;

void check(sk_status status) {
    if (status == SK_OK) return;
    throw CliFailure{status == SK_ERR_RESOURCE ? kResource : kUsage, sk_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    sk_string_free(s);
    return out;
}

std::size_t infer_k(const std::vector<std::string>& texts) {
    std::size_t k = 1;
    for (const auto& t : texts) {
        for (char c : t) {
            if (c >= '0' && c <= '9') k = std::max<std::size_t>(k, static_cast<std::size_t>(c - '0') + 1);
            if (c >= 'a' && c <= 'z') k = std::max<std::size_t>(k, static_cast<std::size_t>(c - 'a') + 11);
        }
    }
    return k;
}

std::vector<WordPtr> parse_words(const std::vector<std::string>& texts, std::size_t k) {
    if (k == 0) k = infer_k(texts);
    std::vector<WordPtr> out;
    for (const auto& t : texts) {
        sk_word* w = nullptr;
        check(sk_word_parse(t.c_str(), k, &w));
        out.emplace_back(w);
    }
    return out;
}

void print_set(const sk_wordset* s, std::ostream& out) {
    for (std::size_t i = 0; i < sk_wordset_size(s); ++i) {
        char* w = nullptr;
        check(sk_wordset_get(s, i, &w));
        out << take(w) << '\n';
    }
}

void need_args(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
    if (args.size() != count) throw CliFailure{kUsage, "usage: " + usage};
}

int run_word(const std::string& op, const std::vector<std::string>& args, std::size_t k) {
    auto ws = parse_words(args, k);
    SetPtr set;
    sk_wordset* raw = nullptr;
    if (op == "pshuffle") {
        need_args(args, 2, "word pshuffle X Y");
        sk_word* out = nullptr;
        check(sk_word_perfect_shuffle(ws[0].get(), ws[1].get(), &out));
        WordPtr r(out);
        char* text = nullptr;
        check(sk_word_to_string(r.get(), &text));
        std::cout << take(text) << '\n';
        return kYes;
    }
    if (op == "shuffle") {
        need_args(args, 2, "word shuffle X Y");
        check(sk_word_shuffle(ws[0].get(), ws[1].get(), &raw));
    } else if (op == "shuffle-many") {
        std::vector<const sk_word*> list;
        for (const auto& w : ws) list.push_back(w.get());
        check(sk_word_shuffle_many(list.data(), list.size(), &raw));
    } else if (op == "ss" || op == "ssr") {
        need_args(args, 1, "word " + op + " W");
        check(sk_word_self_shuffles(ws[0].get(), op == "ssr", &raw));
    } else {
        need_args(args, 1, "word " + op + " W");
        sk_word* out = nullptr;
        check(sk_word_unary(op.c_str(), ws[0].get(), &out));
        WordPtr r(out);
        char* text = nullptr;
        check(sk_word_to_string(r.get(), &text));
        std::cout << take(text) << '\n';
        return kYes;
    }
    set.reset(raw);
    print_set(set.get(), std::cout);
    return kYes;
}

int report_membership(int found, sk_witness* raw, bool has_root) {
    WitnessPtr witness(raw);
    if (!found) {
        std::cout << "no\n";
        return kNo;
    }
    std::cout << "yes\n";
    if (has_root) {
        char* root = nullptr;
        check(sk_witness_root(witness.get(), &root));
        std::cout << "root " << take(root) << '\n';
    }
    char* assignment = nullptr;
    check(sk_witness_assignment(witness.get(), &assignment));
    std::cout << "assignment " << take(assignment) << '\n';
    return kYes;
}

int run_member(const std::string& kind, const std::vector<std::string>& args, std::size_t k, std::size_t max_len) {
    auto ws = parse_words(args, k);
    int found = 0;
    sk_witness* witness = nullptr;
    if (kind == "interleave") {
        if (args.size() < 2) throw CliFailure{kUsage, "usage: member interleave W X1 [X2 ...]"};
        std::vector<const sk_word*> ops;
        for (std::size_t i = 1; i < ws.size(); ++i) ops.push_back(ws[i].get());
        check(sk_member_interleave(ws[0].get(), ops.data(), ops.size(), &found, &witness));
        return report_membership(found, witness, false);
    }
    need_args(args, 1, "member " + kind + " W");
    if (kind == "self") {
        check(sk_member_self(ws[0].get(), &found, &witness));
    } else if (kind == "self-rev") {
        check(sk_member_self_reverse(ws[0].get(), &found, &witness));
    } else if (kind == "triple") {
        check(sk_member_triple(ws[0].get(), max_len, &found, &witness));
    } else if (kind == "abelian") {
        check(sk_is_abelian_square(ws[0].get(), &found));
        std::cout << (found ? "yes" : "no") << '\n';
        return found ? kYes : kNo;
    } else {
        throw CliFailure{kUsage, "unknown membership test '" + kind + "'"};
    }
    return report_membership(found, witness, true);
}

int run_enum(const std::string& kind, std::size_t k, std::size_t n, bool json, bool row) {
    if (kind.size() != 1) throw CliFailure{kUsage, "sequence kind must be 'a' or 'b'"};
    for (std::size_t m = row ? 0 : n; m <= n; ++m) {
        char* text = nullptr;
        if (json) {
            check(sk_sequence_json_line(kind[0], k, m, &text));
        } else {
            check(sk_sequence_value(kind[0], k, m, &text));
        }
        std::cout << take(text) << '\n';
    }
    return kYes;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliFailure{kUsage, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw CliFailure{kUsage, "cannot write " + path};
    out << text;
}

NfaPtr load_nfa(const std::string& file, const std::string& regex, std::size_t k, const std::string& flag) {
    sk_nfa* raw = nullptr;
    if (!file.empty()) {
        const std::string text = read_file(file);
        if (sk_nfa_from_json(text.c_str(), &raw) != SK_OK) {
            throw CliFailure{kUsage, file + ": " + sk_last_error()};
        }
    } else if (!regex.empty()) {
        check(sk_nfa_from_regex(regex.c_str(), k, &raw));
    } else {
        throw CliFailure{kUsage, "missing " + flag};
    }
    return NfaPtr(raw);
}

struct NfaArgs {
    std::string op;
    std::string in;
    std::string in2;
    std::string regex;
    std::string regex2;
    std::string out;
    std::string dot;
    std::string word_op;
    std::size_t k = 0;
    std::size_t max_len = 8;
};

int run_nfa(const NfaArgs& a) {
    NfaPtr first = load_nfa(a.in, a.regex, a.k, "--in or --regex");
    if (a.op == "enum" || a.op == "image") {
        sk_wordset* raw = nullptr;
        if (a.op == "enum") {
            check(sk_nfa_enumerate(first.get(), a.max_len, &raw));
        } else {
            if (a.word_op.empty()) throw CliFailure{kUsage, "image needs --op"};
            check(sk_nfa_image(a.word_op.c_str(), first.get(), a.max_len, &raw));
        }
        SetPtr set(raw);
        if (a.out.empty()) {
            print_set(set.get(), std::cout);
        } else {
            std::ostringstream text;
            print_set(set.get(), text);
            write_file(a.out, text.str());
        }
        return kYes;
    }

    sk_nfa* raw = nullptr;
    if (a.op == "shuffle" || a.op == "shuffle-morphism" || a.op == "pshuffle" || a.op == "pshuffle-morphism" ||
        a.op == "intersect") {
        NfaPtr second = load_nfa(a.in2, a.regex2, a.k == 0 ? sk_nfa_alphabet(first.get()) : a.k,
                                 "--in2 or --regex2");
        check(sk_nfa_binary(a.op.c_str(), first.get(), second.get(), &raw));
    } else {
        check(sk_nfa_unary(a.op.c_str(), first.get(), &raw));
    }
    NfaPtr result(raw);
    char* json = nullptr;
    check(sk_nfa_to_json(result.get(), &json));
    if (a.out.empty()) {
        std::cout << take(json);
    } else {
        write_file(a.out, take(json));
    }
    if (!a.dot.empty()) {
        char* dot = nullptr;
        check(sk_nfa_to_dot(result.get(), &dot));
        write_file(a.dot, take(dot));
    }
    return kYes;
}

void print_property(const char* suite, const char* property, int passed, int informational, const char* detail,
                    void*) {
    const char* tag = informational ? "INFO" : passed ? "PASS" : "FAIL";
    std::cout << tag << "  [" << suite << "] " << property << "  (" << detail << ")\n" << std::flush;
}

int run_verify(const std::string& suite, std::size_t max_len) {
    std::size_t failures = 0;
    check(sk_verify(suite.c_str(), max_len, print_property, nullptr, &failures));
    std::cout << (failures == 0 ? "all properties hold" : std::to_string(failures) + " properties failed") << '\n';
    return failures == 0 ? kYes : kNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shuffle and unshuffle operations on words and regular languages"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sk_version()));

    std::size_t k = 0;

    auto* word = app.add_subcommand("word", "Word operations (reverse, pshuffle, shuffle, shuffle-many, odd, even, "
                                            "fh, lh, bd, bdr, bdi, bdir, pss, pssr, ss, ssr)");
    std::string word_op;
    std::vector<std::string> word_args;
    word->add_option("op", word_op, "Operation")->required();
    word->add_option("args", word_args, "Words");
    word->add_option("--k", k, "Alphabet size (default: inferred)");

    auto* member = app.add_subcommand("member", "Membership oracles (interleave, self, self-rev, triple, abelian)");
    std::string member_kind;
    std::vector<std::string> member_args;
    std::size_t member_max = 0;
    member->add_option("kind", member_kind, "Oracle")->required();
    member->add_option("args", member_args, "Tested word, then operands for interleave");
    member->add_option("--k", k, "Alphabet size (default: inferred)");
    member->add_option("--max-len", member_max, "Length bound for the triple search");

    auto* enumerate = app.add_subcommand("enum", "Self-shuffle counts a_k(n) and b_k(n)");
    std::string enum_kind;
    std::size_t enum_k = 2;
    std::size_t enum_n = 0;
    bool enum_json = false;
    bool enum_row = false;
    enumerate->add_option("kind", enum_kind, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
    enumerate->add_option("--k", enum_k, "Alphabet size")->required();
    enumerate->add_option("--n", enum_n, "Source word length")->required();
    enumerate->add_flag("--json", enum_json, "JSON-lines output");
    enumerate->add_flag("--row", enum_row, "Every n from 0 to N");

    auto* nfa = app.add_subcommand("nfa", "Automata constructions (shuffle, shuffle-morphism, pshuffle, "
                                          "pshuffle-morphism, pss, bdi, bdir, reverse, intersect, trim, enum, image)");
    NfaArgs nfa_args;
    nfa->add_option("construction", nfa_args.op, "Construction")->required();
    nfa->add_option("--in", nfa_args.in, "Input NFA JSON");
    nfa->add_option("--in2", nfa_args.in2, "Second input NFA JSON");
    nfa->add_option("--regex", nfa_args.regex, "Input given as a regex instead of --in");
    nfa->add_option("--regex2", nfa_args.regex2, "Second input given as a regex instead of --in2");
    nfa->add_option("--k", nfa_args.k, "Alphabet size for --regex inputs");
    nfa->add_option("--out", nfa_args.out, "Output file (default: stdout)");
    nfa->add_option("--dot", nfa_args.dot, "Also write a Graphviz rendering");
    nfa->add_option("--max-len", nfa_args.max_len, "Length bound for enum and image");
    nfa->add_option("--op", nfa_args.word_op, "Word operation for image");

    auto* verify = app.add_subcommand("verify", "Run an invariant suite (words, oracles, automata, enumeration, all)");
    std::string suite;
    std::size_t verify_len = 8;
    verify->add_option("suite", suite, "Suite name")->required();
    verify->add_option("--max-len", verify_len, "Length bound for the automata checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*word) return run_word(word_op, word_args, k);
        if (*member) return run_member(member_kind, member_args, k, member_max);
        if (*enumerate) return run_enum(enum_kind, enum_k, enum_n, enum_json, enum_row);
        if (*nfa) return run_nfa(nfa_args);
        if (*verify) return run_verify(suite, verify_len);
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kUsage;
}
