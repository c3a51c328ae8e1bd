#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "etk/word.hpp"

namespace etk {

// An eventually periodic directive word Δ = preperiod · period^ω, indexed
// from 1 like x1 x2 x3 ...
class DirectiveWord {
public:
    // Throws SpecError when the period is empty or the alphabets differ.
    DirectiveWord(Word preperiod, Word period);

    // "u(v)": "(ab)" is the Fibonacci directive, "c(ab)" is c(ab)^ω.
    // With a multi-character alphabet: "x1,x2(y1,y2)".
    static DirectiveWord parse(const AlphabetRef& alphabet, std::string_view text);

    const AlphabetRef& alphabet() const noexcept { return preperiod_.alphabet(); }
    const Word& preperiod() const noexcept { return preperiod_; }
    const Word& period() const noexcept { return period_; }

    // x_i for i >= 1.
    Letter letter(std::size_t i) const;
    // x_1 ... x_n.
    Word prefix(std::size_t n) const;
    // The m-th shift x_{m+1} x_{m+2} ...
    DirectiveWord shift(std::size_t m) const;

    // Alph(Δ) and Ult(Δ), in alphabet order. Ult is exact: the letters of the period.
    std::vector<Letter> alph() const;
    std::vector<Letter> ult() const;

    std::string to_string() const;

    friend bool operator==(const DirectiveWord& a, const DirectiveWord& b) noexcept {
        return a.preperiod_ == b.preperiod_ && a.period_ == b.period_;
    }

private:
    Word preperiod_;
    Word period_;
};

// Shared by directive and literal stream syntax: splits "u(v)" into u and v.
struct UltimatelyPeriodicText {
    Word prefix;
    Word period;
};
UltimatelyPeriodicText parse_ultimately_periodic(const AlphabetRef& alphabet, std::string_view text);
std::string format_ultimately_periodic(const Word& prefix, const Word& period);

} // namespace etk
