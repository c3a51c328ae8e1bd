#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etk/word.hpp"

namespace etk {

struct Syllable {
    Letter letter;
    bool inverse = false;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

constexpr Syllable inverse_of(Syllable s) noexcept { return {s.letter, !s.inverse}; }

// An element of the free group over an alphabet, kept in reduced form:
// no syllable is ever adjacent to its inverse.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
    // Reduces the given syllables.
    GroupWord(AlphabetRef alphabet, std::span<const Syllable> syllables);
    // Embeds a positive word.
    explicit GroupWord(const Word& w);

    // "a b' a c": whitespace separated symbols, apostrophe marks an inverse.
    // The empty string (or "ε") is the identity.
    static GroupWord parse(const AlphabetRef& alphabet, std::string_view text);

    const AlphabetRef& alphabet() const noexcept { return alphabet_; }
    std::span<const Syllable> syllables() const noexcept { return syllables_; }
    std::size_t size() const noexcept { return syllables_.size(); }
    bool empty() const noexcept { return syllables_.empty(); }

    bool is_positive() const noexcept;
    // The positive word, if every exponent is +1.
    std::optional<Word> to_word() const;

    // Multiplies on the right, cancelling at the seam.
    void append(Syllable s);
    void append(const GroupWord& g);

    GroupWord inverse() const;

    std::string to_string() const;

    friend GroupWord operator*(GroupWord a, const GroupWord& b) {
        a.append(b);
        return a;
    }
    friend bool operator==(const GroupWord& a, const GroupWord& b) noexcept {
        return a.syllables_ == b.syllables_;
    }

private:
    AlphabetRef alphabet_;
    std::vector<Syllable> syllables_;
};

// Free reduction of an arbitrary syllable sequence.
GroupWord reduce(const AlphabetRef& alphabet, std::span<const Syllable> syllables);

} // namespace etk
