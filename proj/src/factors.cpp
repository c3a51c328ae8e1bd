#include "etk/factors.hpp"

#include <bitset>
#include <map>
#include <string_view>
#include <unordered_set>

#include "etk/error.hpp"

namespace etk {

namespace {

// Letters are single bytes, so windows can be hashed as string views.
std::string_view bytes(std::span<const Letter> w, std::size_t pos, std::size_t len) {
    return {reinterpret_cast<const char*>(w.data()) + pos, len};
}

std::unordered_set<std::string_view> window_set(std::span<const Letter> w, std::size_t k) {
    std::unordered_set<std::string_view> out;
    if (k > w.size())
        return out;
    out.reserve(w.size() - k + 1);
    for (std::size_t p = 0; p + k <= w.size(); ++p)
        out.insert(bytes(w, p, k));
    return out;
}

} // namespace

std::set<Word> factors(const Word& w, std::size_t k) {
    std::set<Word> out;
    if (k > w.size())
        return out;
    for (std::size_t p = 0; p + k <= w.size(); ++p)
        out.insert(w.subword(p, k));
    return out;
}

std::vector<SpecialFactor> special_factors(const Word& w, std::size_t k, Side side) {
    std::map<Word, std::bitset<Alphabet::max_size + 1>> extensions;
    const auto letters = w.letters();
    for (std::size_t p = 0; p + k <= letters.size(); ++p) {
        if (side == Side::Right && p + k < letters.size())
            extensions[w.subword(p, k)].set(index_of(letters[p + k]));
        else if (side == Side::Left && p > 0)
            extensions[w.subword(p, k)].set(index_of(letters[p - 1]));
    }
    std::vector<SpecialFactor> out;
    for (const auto& [factor, ext] : extensions) {
        if (ext.count() < 2)
            continue;
        SpecialFactor sf{factor, {}};
        for (std::size_t i = 0; i < ext.size(); ++i)
            if (ext.test(i))
                sf.extensions.push_back(letter_at(i));
        out.push_back(std::move(sf));
    }
    return out;
}

std::size_t complexity(const WordStream& stream, std::size_t n, std::size_t horizon) {
    if (horizon < n)
        throw LengthError("complexity: horizon " + std::to_string(horizon) + " shorter than n = " +
                          std::to_string(n));
    const Word prefix = stream.prefix(horizon);
    return window_set(prefix.letters(), n).size();
}

bool factor_sets_equal(const WordStream& x, const WordStream& y, std::size_t depth, std::size_t horizon) {
    if (horizon < depth)
        throw LengthError("factor_sets_equal: horizon shorter than depth");
    if (!same_alphabet(x.alphabet(), y.alphabet()))
        throw AlphabetError("factor_sets_equal: streams over different alphabets");
    const Word px = x.prefix(horizon);
    const Word py = y.prefix(horizon);
    for (std::size_t j = 1; j <= depth; ++j)
        if (window_set(px.letters(), j) != window_set(py.letters(), j))
            return false;
    return true;
}

} // namespace etk
