/* shufflekit.h -- C interface to the shufflekit library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Strings returned through `char**` are heap
 * allocated and released with sk_string_free. Functions report failures through
 * sk_status; sk_last_error() then describes the failure for the calling thread.
 */
#ifndef SHUFFLEKIT_H
#define SHUFFLEKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  define SK_API __declspec(dllexport)
#else
#  define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
    SK_OK = 0,
    SK_ERR_CONTRACT = 1,         /* precondition violated (lengths, alphabets) */
    SK_ERR_PARSE = 2,            /* malformed word, regex or NFA JSON */
    SK_ERR_RESOURCE = 3,         /* configured work bound exceeded */
    SK_ERR_INVALID_ARGUMENT = 4, /* null handle or unknown operation name */
    SK_ERR_INTERNAL = 5
} sk_status;

typedef struct sk_word sk_word;
typedef struct sk_wordset sk_wordset;
typedef struct sk_witness sk_witness;
typedef struct sk_nfa sk_nfa;

SK_API const char* sk_version(void);
SK_API const char* sk_last_error(void);
SK_API void sk_string_free(char* s);

/* ---- words ------------------------------------------------------------- */

/* Parses '0'-'9','a'-'z'. k == 0 infers the alphabet from the largest symbol. */
SK_API sk_status sk_word_parse(const char* text, size_t k, sk_word** out);
SK_API void sk_word_free(sk_word* w);
SK_API size_t sk_word_length(const sk_word* w);
SK_API size_t sk_word_alphabet(const sk_word* w);
SK_API sk_status sk_word_to_string(const sk_word* w, char** out);

/* op: reverse, odd, even, fh, lh, bd, bdr, bdi, bdir, pss, pssr. */
SK_API sk_status sk_word_unary(const char* op, const sk_word* w, sk_word** out);
SK_API sk_status sk_word_perfect_shuffle(const sk_word* x, const sk_word* y, sk_word** out);
SK_API sk_status sk_word_shuffle(const sk_word* x, const sk_word* y, sk_wordset** out);
SK_API sk_status sk_word_shuffle_many(const sk_word* const* ws, size_t count, sk_wordset** out);
/* with_reverse == 0: w SH w; otherwise w SH w^R. */
SK_API sk_status sk_word_self_shuffles(const sk_word* w, int with_reverse, sk_wordset** out);

SK_API void sk_wordset_free(sk_wordset* s);
SK_API size_t sk_wordset_size(const sk_wordset* s);
/* index-th word in lexicographic order. */
SK_API sk_status sk_wordset_get(const sk_wordset* s, size_t index, char** out);

/* ---- membership oracles ------------------------------------------------ */
/* On SK_OK, *found is 1 with *witness set, or 0 with *witness set to NULL. */

SK_API sk_status sk_member_interleave(const sk_word* w, const sk_word* const* operands, size_t count,
                                      int* found, sk_witness** witness);
SK_API sk_status sk_member_self(const sk_word* w, int* found, sk_witness** witness);
SK_API sk_status sk_member_self_reverse(const sk_word* w, int* found, sk_witness** witness);
/* max_len == 0 selects the default bound; longer inputs yield SK_ERR_RESOURCE. */
SK_API sk_status sk_member_triple(const sk_word* w, size_t max_len, int* found, sk_witness** witness);
SK_API sk_status sk_is_abelian_square(const sk_word* w, int* result);

SK_API void sk_witness_free(sk_witness* w);
/* Root word x of a self-shuffle witness; SK_ERR_INVALID_ARGUMENT for plain interleavings. */
SK_API sk_status sk_witness_root(const sk_witness* w, char** out);
/* Operand index (1-based digit) per position of the tested word. */
SK_API sk_status sk_witness_assignment(const sk_witness* w, char** out);

/* ---- automata ---------------------------------------------------------- */

SK_API sk_status sk_nfa_from_json(const char* text, sk_nfa** out);
SK_API sk_status sk_nfa_from_regex(const char* regex, size_t k, sk_nfa** out);
SK_API void sk_nfa_free(sk_nfa* a);
SK_API size_t sk_nfa_state_count(const sk_nfa* a);
SK_API size_t sk_nfa_alphabet(const sk_nfa* a);
SK_API sk_status sk_nfa_to_json(const sk_nfa* a, char** out);
SK_API sk_status sk_nfa_to_dot(const sk_nfa* a, char** out);
SK_API sk_status sk_nfa_member(const sk_nfa* a, const sk_word* w, int* result);

/* op: pss, bdi, bdir, reverse, trim. */
SK_API sk_status sk_nfa_unary(const char* op, const sk_nfa* a, sk_nfa** out);
/* op: shuffle, shuffle-morphism, pshuffle, pshuffle-morphism, intersect. */
SK_API sk_status sk_nfa_binary(const char* op, const sk_nfa* a, const sk_nfa* b, sk_nfa** out);
/* images[i] is the image of symbol i (k_source entries, "" erases); inverse != 0
 * builds the inverse image instead. */
SK_API sk_status sk_nfa_morphism(const sk_nfa* a, const char* const* images, size_t k_source, size_t k_target,
                                 int inverse, sk_nfa** out);

/* Words of length <= max_len. */
SK_API sk_status sk_nfa_enumerate(const sk_nfa* a, size_t max_len, sk_wordset** out);
/* {op(w) : w in L(a), |w| <= max_len}, op as in sk_word_unary. */
SK_API sk_status sk_nfa_image(const char* op, const sk_nfa* a, size_t max_len, sk_wordset** out);

/* ---- enumeration ------------------------------------------------------- */

/* kind 'a': |union of x SH x|, kind 'b': |union of x SH x^R| over x of length n. */
SK_API sk_status sk_sequence_value(char kind, size_t k, size_t n, char** decimal);
SK_API sk_status sk_sequence_json_line(char kind, size_t k, size_t n, char** out);

/* ---- verification suites ----------------------------------------------- */

typedef void (*sk_verify_callback)(const char* suite, const char* property, int passed, int informational,
                                   const char* detail, void* user);

/* suite: words, oracles, automata, enumeration, all. */
SK_API sk_status sk_verify(const char* suite, size_t max_len, sk_verify_callback callback, void* user,
                           size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* SHUFFLEKIT_H */
