#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etk/alphabet.hpp"

namespace etk {

// A finite word over a shared alphabet.
class Word {
public:
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
    Word(AlphabetRef alphabet, std::vector<Letter> letters);
    Word(AlphabetRef alphabet, std::span<const Letter> letters);

    // Contiguous symbols ("abaab") when the alphabet allows it, otherwise
    // comma-separated ("x1,x2,x1"). Throws AlphabetError on unknown symbols.
    static Word parse(const AlphabetRef& alphabet, std::string_view text);

    const AlphabetRef& alphabet() const noexcept { return alphabet_; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }
    const_iterator begin() const noexcept { return letters_.begin(); }
    const_iterator end() const noexcept { return letters_.end(); }

    void push_back(Letter l);
    void append(const Word& other);
    void append(std::span<const Letter> other);
    void truncate(std::size_t n);
    void reserve(std::size_t n) { letters_.reserve(n); }

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t n) const;
    Word suffix(std::size_t n) const;
    bool starts_with(const Word& p) const noexcept;
    bool ends_with(const Word& s) const noexcept;
    std::size_t count(Letter l) const noexcept;

    std::string to_string() const;

    friend Word operator+(Word a, const Word& b) {
        a.append(b);
        return a;
    }

    friend bool operator==(const Word& a, const Word& b) noexcept;
    // Orders by letter index (declaration order); used for containers, not
    // for lexicographic analysis under a chosen order.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
        return a.letters_ <=> b.letters_;
    }

private:
    AlphabetRef alphabet_;
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

Word reversal(const Word& w);
bool is_palindrome(std::span<const Letter> w) noexcept;
inline bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.letters()); }

// Distinct letters of w, in alphabet order.
std::vector<Letter> letters_of(std::span<const Letter> w);

// Throws AlphabetError unless both words share an alphabet.
void require_same_alphabet(const Word& a, const Word& b);

} // namespace etk
