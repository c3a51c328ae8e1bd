#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace etk {

// Interned letter: an index into the owning alphabet, in declaration order.
enum class Letter : std::uint8_t {};

constexpr std::size_t index_of(Letter l) noexcept { return static_cast<std::size_t>(l); }
constexpr Letter letter_at(std::size_t i) noexcept { return static_cast<Letter>(i); }

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

// Finite ordered set of printable symbols. Immutable once built and shared
// between all words over it.
class Alphabet {
public:
    static constexpr std::size_t max_size = 255;

    // Throws AlphabetError on duplicates, empty symbols or an empty list.
    static AlphabetRef make(std::vector<std::string> symbols);

    // "a,b,c" or, when no comma is present, one symbol per code point ("abc").
    static AlphabetRef parse(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    const std::string& symbol(Letter l) const;
    bool contains(Letter l) const noexcept { return index_of(l) < symbols_.size(); }

    std::optional<Letter> find(std::string_view symbol) const;
    Letter at(std::string_view symbol) const;

    std::vector<Letter> letters() const;

    // True when every symbol is a single code point, so words can be written
    // without separators.
    bool single_code_point() const noexcept { return single_code_point_; }

    std::string to_string() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    explicit Alphabet(std::vector<std::string> symbols);

    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Letter> lookup_;
    bool single_code_point_ = true;
};

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) noexcept;

// Splits UTF-8 text into code points. Invalid lead bytes are taken one byte
// at a time.
std::vector<std::string> split_code_points(std::string_view text);

} // namespace etk
