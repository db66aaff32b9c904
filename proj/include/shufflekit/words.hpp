#pragma once

#include "shufflekit/word.hpp"

#include <span>

// Word-level shuffle and unshuffle operations. All are total on the empty word.
namespace shufflekit::words {

Word reverse(const Word& w);

/// Strict alternation x1 y1 x2 y2 ... ; |y| may exceed |x| by one, in which
/// case y's last letter closes the word. Other lengths throw ContractError.
Word perfect_shuffle(const Word& x, const Word& y);

/// All interleavings of x and y.
WordSet shuffle_set(const Word& x, const Word& y);
/// Left fold of shuffle_set over ws; throws ContractError on an empty list.
WordSet shuffle_many(std::span<const Word> ws);

/// Letters at 1-based odd positions.
Word odd(const Word& w);
/// Letters at 1-based even positions.
Word even(const Word& w);
/// First floor(n/2) letters.
Word fh(const Word& w);
/// Remaining ceil(n/2) letters.
Word lh(const Word& w);

Word bd(const Word& w);   // odd(w) even(w)
Word bdr(const Word& w);  // odd(w) even(w)^R
Word bdi(const Word& w);  // fh(w) sh lh(w)
Word bdir(const Word& w); // fh(w) sh lh(w)^R

/// Letter doubling; equals perfect_shuffle(w, w).
Word pss(const Word& w);
/// perfect_shuffle(w, reverse(w)).
Word pssr(const Word& w);

WordSet ss_set(const Word& w);  // shuffle_set(w, w)
WordSet ssr_set(const Word& w); // shuffle_set(w, reverse(w))

} // namespace shufflekit::words
