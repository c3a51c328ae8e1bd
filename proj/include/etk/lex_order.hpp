#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etk/word.hpp"

namespace etk {

// A total order on the letters of an alphabet. rank(l) == 0 is the least letter.
class LexOrder {
public:
    LexOrder() = default;
    static LexOrder natural(AlphabetRef alphabet);
    // `ascending` must list every letter exactly once.
    static LexOrder from_ascending(AlphabetRef alphabet, std::vector<Letter> ascending);
    // "c<a<b". Letters not mentioned are not allowed.
    static LexOrder parse(AlphabetRef alphabet, std::string_view text);

    const AlphabetRef& alphabet() const noexcept { return alphabet_; }
    std::size_t rank(Letter l) const { return rank_[index_of(l)]; }
    const std::vector<std::size_t>& ranks() const noexcept { return rank_; }
    const std::vector<Letter>& ascending() const noexcept { return ascending_; }
    Letter least() const { return ascending_.front(); }
    Letter greatest() const { return ascending_.back(); }
    bool less(Letter a, Letter b) const { return rank(a) < rank(b); }

    std::string to_string() const;

    friend bool operator==(const LexOrder& a, const LexOrder& b) noexcept {
        return a.ascending_ == b.ascending_;
    }

private:
    LexOrder(AlphabetRef alphabet, std::vector<Letter> ascending);

    AlphabetRef alphabet_;
    std::vector<Letter> ascending_;
    std::vector<std::size_t> rank_;
};

// Lexicographic comparison; a proper prefix is less than its extensions.
// Throws AlphabetError if the words are not over the order's alphabet.
std::strong_ordering compare(const Word& u, const Word& v, const LexOrder& order);
std::strong_ordering compare(std::span<const Letter> u, std::span<const Letter> v, const LexOrder& order);

// Every order on the alphabet, in lexicographic order of rank sequences
// (the natural order first).
std::vector<LexOrder> all_orders(const AlphabetRef& alphabet);

// Every order whose least |letters| positions are a permutation of `letters`;
// the remaining letters follow in declaration order. Orders only matter on
// the letters actually present, so this enumerates |letters|! orders.
std::vector<LexOrder> orders_over(const AlphabetRef& alphabet, std::span<const Letter> letters);

} // namespace etk
