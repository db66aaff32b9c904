#include "shufflekit/shufflekit.h"

#include "shufflekit/enumeration.hpp"
#include "shufflekit/error.hpp"
#include "shufflekit/nfa.hpp"
#include "shufflekit/nfa_io.hpp"
#include "shufflekit/oracles.hpp"
#include "shufflekit/regex.hpp"
#include "shufflekit/verify.hpp"
#include "shufflekit/words.hpp"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

using namespace shufflekit;

struct sk_word {
    Word value;
};
struct sk_wordset {
    std::vector<std::string> sorted;
};
struct sk_witness {
    std::optional<Word> root;
    oracles::ShuffleCertificate certificate;
};
struct sk_nfa {
    automata::Nfa value;
};

namespace {

thread_local std::string last_error;

class InvalidArgument : public Error {
public:
    using Error::Error;
};

template <class F>
sk_status guard(F&& body) {
    try {
        body();
        last_error.clear();
        return SK_OK;
    } catch (const InvalidArgument& e) {
        last_error = e.what();
        return SK_ERR_INVALID_ARGUMENT;
    } catch (const ContractError& e) {
        last_error = e.what();
        return SK_ERR_CONTRACT;
    } catch (const ParseError& e) {
        last_error = e.what();
        return SK_ERR_PARSE;
    } catch (const ResourceLimitError& e) {
        last_error = e.what();
        return SK_ERR_RESOURCE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SK_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SK_ERR_INTERNAL;
    }
}

template <class T>
const T& deref(const T* p, const char* what) {
    if (p == nullptr) throw InvalidArgument(std::string("null ") + what);
    return *p;
}

const char* text_arg(const char* p, const char* what) {
    if (p == nullptr) throw InvalidArgument(std::string("null ") + what);
    return p;
}

template <class T>
void require_out(T** out) {
    if (out == nullptr) throw InvalidArgument("null output pointer");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Word (*word_operation(const char* op))(const Word&) {
    static const std::map<std::string, Word (*)(const Word&)> table = {
        {"reverse", words::reverse}, {"odd", words::odd}, {"even", words::even}, {"fh", words::fh},
        {"lh", words::lh},           {"bd", words::bd},   {"bdr", words::bdr},   {"bdi", words::bdi},
        {"bdir", words::bdir},       {"pss", words::pss}, {"pssr", words::pssr},
    };
    if (op == nullptr) throw InvalidArgument("null operation name");
    auto it = table.find(op);
    if (it == table.end()) throw InvalidArgument(std::string("unknown word operation '") + op + "'");
    return it->second;
}

sk_wordset* make_set(const WordSet& s) { return new sk_wordset{s.strings()}; }

void report_witness(const std::optional<oracles::SelfShuffleWitness>& found, int* flag, sk_witness** witness) {
    if (flag == nullptr || witness == nullptr) throw InvalidArgument("null output pointer");
    *flag = found.has_value() ? 1 : 0;
    *witness = found ? new sk_witness{found->root, found->certificate} : nullptr;
}

enumeration::SequenceKind sequence_kind(char kind) {
    auto k = enumeration::kind_from_letter(kind);
    if (!k) throw InvalidArgument(std::string("unknown sequence kind '") + kind + "'");
    return *k;
}

} // namespace

extern "C" {

const char* sk_version(void) { return "0.1.0"; }
const char* sk_last_error(void) { return last_error.c_str(); }
void sk_string_free(char* s) { std::free(s); }

sk_status sk_word_parse(const char* text, size_t k, sk_word** out) {
    return guard([&] {
        require_out(out);
        *out = new sk_word{Word::parse(text_arg(text, "text"), k)};
    });
}

void sk_word_free(sk_word* w) { delete w; }
size_t sk_word_length(const sk_word* w) { return w ? w->value.size() : 0; }
size_t sk_word_alphabet(const sk_word* w) { return w ? w->value.k() : 0; }

sk_status sk_word_to_string(const sk_word* w, char** out) {
    return guard([&] {
        require_out(out);
        *out = dup(deref(w, "word").value.str());
    });
}

sk_status sk_word_unary(const char* op, const sk_word* w, sk_word** out) {
    return guard([&] {
        require_out(out);
        auto f = word_operation(op);
        *out = new sk_word{f(deref(w, "word").value)};
    });
}

sk_status sk_word_perfect_shuffle(const sk_word* x, const sk_word* y, sk_word** out) {
    return guard([&] {
        require_out(out);
        *out = new sk_word{words::perfect_shuffle(deref(x, "word").value, deref(y, "word").value)};
    });
}

sk_status sk_word_shuffle(const sk_word* x, const sk_word* y, sk_wordset** out) {
    return guard([&] {
        require_out(out);
        *out = make_set(words::shuffle_set(deref(x, "word").value, deref(y, "word").value));
    });
}

sk_status sk_word_shuffle_many(const sk_word* const* ws, size_t count, sk_wordset** out) {
    return guard([&] {
        require_out(out);
        if (count > 0 && ws == nullptr) throw InvalidArgument("null word list");
        std::vector<Word> list;
        for (size_t i = 0; i < count; ++i) list.push_back(deref(ws[i], "word").value);
        *out = make_set(words::shuffle_many(list));
    });
}

sk_status sk_word_self_shuffles(const sk_word* w, int with_reverse, sk_wordset** out) {
    return guard([&] {
        require_out(out);
        const Word& x = deref(w, "word").value;
        *out = make_set(with_reverse ? words::ssr_set(x) : words::ss_set(x));
    });
}

void sk_wordset_free(sk_wordset* s) { delete s; }
size_t sk_wordset_size(const sk_wordset* s) { return s ? s->sorted.size() : 0; }

sk_status sk_wordset_get(const sk_wordset* s, size_t index, char** out) {
    return guard([&] {
        require_out(out);
        const auto& set = deref(s, "word set");
        if (index >= set.sorted.size()) throw InvalidArgument("word set index out of range");
        *out = dup(set.sorted[index]);
    });
}

sk_status sk_member_interleave(const sk_word* w, const sk_word* const* operands, size_t count, int* found,
                               sk_witness** witness) {
    return guard([&] {
        if (found == nullptr || witness == nullptr) throw InvalidArgument("null output pointer");
        if (count > 0 && operands == nullptr) throw InvalidArgument("null operand list");
        std::vector<Word> ops;
        for (size_t i = 0; i < count; ++i) ops.push_back(deref(operands[i], "word").value);
        const Word& target = deref(w, "word").value;
        auto cert = ops.size() == 2 ? oracles::is_interleaving(target, ops[0], ops[1])
                                    : oracles::is_interleaving_many(target, ops);
        *found = cert ? 1 : 0;
        *witness = cert ? new sk_witness{std::nullopt, *cert} : nullptr;
    });
}

sk_status sk_member_self(const sk_word* w, int* found, sk_witness** witness) {
    return guard([&] { report_witness(oracles::exists_self_shuffle(deref(w, "word").value), found, witness); });
}

sk_status sk_member_self_reverse(const sk_word* w, int* found, sk_witness** witness) {
    return guard(
        [&] { report_witness(oracles::exists_self_shuffle_reverse(deref(w, "word").value), found, witness); });
}

sk_status sk_member_triple(const sk_word* w, size_t max_len, int* found, sk_witness** witness) {
    return guard([&] {
        const size_t bound = max_len == 0 ? oracles::kDefaultTripleBound : max_len;
        report_witness(oracles::exists_triple_self_shuffle(deref(w, "word").value, bound), found, witness);
    });
}

sk_status sk_is_abelian_square(const sk_word* w, int* result) {
    return guard([&] {
        if (result == nullptr) throw InvalidArgument("null output pointer");
        *result = oracles::is_abelian_square(deref(w, "word").value) ? 1 : 0;
    });
}

void sk_witness_free(sk_witness* w) { delete w; }

sk_status sk_witness_root(const sk_witness* w, char** out) {
    return guard([&] {
        require_out(out);
        const auto& wit = deref(w, "witness");
        if (!wit.root) throw InvalidArgument("witness has no root word");
        *out = dup(wit.root->str());
    });
}

sk_status sk_witness_assignment(const sk_witness* w, char** out) {
    return guard([&] {
        require_out(out);
        *out = dup(deref(w, "witness").certificate.str());
    });
}

sk_status sk_nfa_from_json(const char* text, sk_nfa** out) {
    return guard([&] {
        require_out(out);
        *out = new sk_nfa{automata::nfa_from_json(text_arg(text, "text"))};
    });
}

sk_status sk_nfa_from_regex(const char* regex, size_t k, sk_nfa** out) {
    return guard([&] {
        require_out(out);
        *out = new sk_nfa{automata::nfa_from_regex(text_arg(regex, "regex"), k)};
    });
}

void sk_nfa_free(sk_nfa* a) { delete a; }
size_t sk_nfa_state_count(const sk_nfa* a) { return a ? a->value.state_count() : 0; }
size_t sk_nfa_alphabet(const sk_nfa* a) { return a ? a->value.k() : 0; }

sk_status sk_nfa_to_json(const sk_nfa* a, char** out) {
    return guard([&] {
        require_out(out);
        *out = dup(automata::nfa_to_json(deref(a, "nfa").value));
    });
}

sk_status sk_nfa_to_dot(const sk_nfa* a, char** out) {
    return guard([&] {
        require_out(out);
        *out = dup(automata::nfa_to_dot(deref(a, "nfa").value));
    });
}

sk_status sk_nfa_member(const sk_nfa* a, const sk_word* w, int* result) {
    return guard([&] {
        if (result == nullptr) throw InvalidArgument("null output pointer");
        *result = automata::nfa_member(deref(a, "nfa").value, deref(w, "word").value) ? 1 : 0;
    });
}

sk_status sk_nfa_unary(const char* op, const sk_nfa* a, sk_nfa** out) {
    return guard([&] {
        require_out(out);
        static const std::map<std::string, automata::Nfa (*)(const automata::Nfa&)> table = {
            {"pss", automata::pss_nfa},
            {"bdi", automata::bdi_nfa},
            {"bdir", automata::bdir_nfa},
            {"reverse", automata::reverse_nfa},
            {"trim", automata::trim},
        };
        if (op == nullptr) throw InvalidArgument("null operation name");
        auto it = table.find(op);
        if (it == table.end()) throw InvalidArgument(std::string("unknown automaton operation '") + op + "'");
        *out = new sk_nfa{it->second(deref(a, "nfa").value)};
    });
}

sk_status sk_nfa_binary(const char* op, const sk_nfa* a, const sk_nfa* b, sk_nfa** out) {
    return guard([&] {
        require_out(out);
        static const std::map<std::string, automata::Nfa (*)(const automata::Nfa&, const automata::Nfa&)> table = {
            {"shuffle", automata::shuffle_nfa_product},
            {"shuffle-morphism", automata::shuffle_nfa_morphism},
            {"pshuffle", automata::perfect_shuffle_nfa},
            {"pshuffle-morphism", automata::perfect_shuffle_nfa_morphism},
            {"intersect", automata::intersect},
        };
        if (op == nullptr) throw InvalidArgument("null operation name");
        auto it = table.find(op);
        if (it == table.end()) throw InvalidArgument(std::string("unknown automaton operation '") + op + "'");
        *out = new sk_nfa{it->second(deref(a, "nfa").value, deref(b, "nfa").value)};
    });
}

sk_status sk_nfa_morphism(const sk_nfa* a, const char* const* images, size_t k_source, size_t k_target,
                          int inverse, sk_nfa** out) {
    return guard([&] {
        require_out(out);
        if (k_source > 0 && images == nullptr) throw InvalidArgument("null image list");
        std::vector<Word> imgs;
        for (size_t i = 0; i < k_source; ++i) imgs.push_back(Word::parse(text_arg(images[i], "image"), k_target));
        automata::Morphism h(k_source, k_target, std::move(imgs));
        const auto& nfa = deref(a, "nfa").value;
        *out = new sk_nfa{inverse ? automata::inverse_morphism(nfa, h) : automata::apply_morphism(nfa, h)};
    });
}

sk_status sk_nfa_enumerate(const sk_nfa* a, size_t max_len, sk_wordset** out) {
    return guard([&] {
        require_out(out);
        *out = make_set(automata::enumerate_language(deref(a, "nfa").value, max_len));
    });
}

sk_status sk_nfa_image(const char* op, const sk_nfa* a, size_t max_len, sk_wordset** out) {
    return guard([&] {
        require_out(out);
        auto f = word_operation(op);
        *out = make_set(automata::image_under(f, deref(a, "nfa").value, max_len));
    });
}

sk_status sk_sequence_value(char kind, size_t k, size_t n, char** decimal) {
    return guard([&] {
        require_out(decimal);
        *decimal = dup(enumeration::sequence_value(sequence_kind(kind), k, n).str());
    });
}

sk_status sk_sequence_json_line(char kind, size_t k, size_t n, char** out) {
    return guard([&] {
        require_out(out);
        const auto kd = sequence_kind(kind);
        *out = dup(enumeration::to_json_line(kd, k, n, enumeration::sequence_value(kd, k, n)));
    });
}

sk_status sk_verify(const char* suite, size_t max_len, sk_verify_callback callback, void* user, size_t* failures) {
    return guard([&] {
        if (suite == nullptr) throw InvalidArgument("null suite name");
        verify::VerifyOptions opts;
        if (max_len != 0) opts.max_len = max_len;
        const std::size_t failed = verify::run_suite(suite, opts, [&](const verify::PropertyResult& r) {
            if (callback != nullptr) {
                callback(r.suite.c_str(), r.name.c_str(), r.passed ? 1 : 0, r.informational ? 1 : 0,
                         r.detail.c_str(), user);
            }
        });
        if (failures != nullptr) *failures = failed;
    });
}

} // extern "C"
