#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "etk/stream.hpp"
#include "etk/word.hpp"

namespace etk {

// Distinct length-k blocks of w. Empty when k > |w|; {ε} when k == 0.
std::set<Word> factors(const Word& w, std::size_t k);

enum class Side { Left, Right };

struct SpecialFactor {
    Word factor;
    std::vector<Letter> extensions; // alphabet order, at least two
};

// Length-k factors of w with at least two distinct extensions on `side`,
// counting only extensions witnessed inside w.
std::vector<SpecialFactor> special_factors(const Word& w, std::size_t k, Side side);

// |F_n(prefix(horizon))|. A lower bound on the complexity of the stream,
// exact once the horizon covers every length-n factor.
std::size_t complexity(const WordStream& stream, std::size_t n, std::size_t horizon);

// True iff F_j agrees on the two horizon-prefixes for every j <= depth.
bool factor_sets_equal(const WordStream& x, const WordStream& y, std::size_t depth, std::size_t horizon);

} // namespace etk
