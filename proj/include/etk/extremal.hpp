#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etk/lex_order.hpp"
#include "etk/stream.hpp"
#include "etk/word.hpp"

namespace etk {

enum class Exactness { Exact, HorizonLimited };

struct ExtremalResult {
    Word word;
    std::size_t k = 0;
    LexOrder order;
    std::size_t horizon = 0;
    Exactness exactness = Exactness::HorizonLimited;

    bool exact() const noexcept { return exactness == Exactness::Exact; }
};

enum class Extreme { Min, Max };

// min(text|k) (or max) for every k in 1..max_k, by candidate refinement over
// all windows of `text`. Entry k-1 holds the length-k result; the list stops
// early if k exceeds |text|.
std::vector<Word> extremal_chain(const Word& text, std::size_t max_k, const LexOrder& order, Extreme which);

// Least (greatest) length-k factor of a finite word. Throws LengthError if k > |w|.
ExtremalResult min_factor(const Word& w, std::size_t k, const LexOrder& order);
ExtremalResult max_factor(const Word& w, std::size_t k, const LexOrder& order);

// Least (greatest) element of F_k(prefix(horizon)). Exactness comes from the
// stream's own horizon guarantee when it has one, otherwise from agreement
// between horizon and 2·horizon.
ExtremalResult min_factor(const WordStream& s, std::size_t k, const LexOrder& order, std::size_t horizon);
ExtremalResult max_factor(const WordStream& s, std::size_t k, const LexOrder& order, std::size_t horizon);

// The stabilized prefix of min(s): min(s|K) for the largest K <= horizon/2
// such that the chain min(s|1) ≺ ... ≺ min(s|K) is prefix-nested. Streams
// with an exact horizon are scanned as far as K needs; others keep only the
// part of the chain that agrees between horizon and 2·horizon.
Word min_stream(const WordStream& s, const LexOrder& order, std::size_t horizon);
Word max_stream(const WordStream& s, const LexOrder& order, std::size_t horizon);

// Brute force: sort every length-k window and take the first (last).
Word oracle_min(const Word& w, std::size_t k, const LexOrder& order);
Word oracle_max(const Word& w, std::size_t k, const LexOrder& order);

} // namespace etk
