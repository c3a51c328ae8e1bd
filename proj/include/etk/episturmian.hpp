#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "etk/directive.hpp"
#include "etk/morphism.hpp"
#include "etk/stream.hpp"
#include "etk/word.hpp"

namespace etk {

// w^(+): the shortest palindrome having w as a prefix. Computed as
// w · reversal(w minus its longest palindromic suffix).
Word palindromic_closure(const Word& w);

// u_1 = ε, u_{i+1} = (u_i x_i)^(+), for i < n. Returns u_1 ... u_n.
std::vector<Word> palindromic_prefixes(const DirectiveWord& directive, std::size_t n);

// The standard episturmian word directed by Δ, as the limit of its
// palindromic prefixes.
WordStream standard_word(const DirectiveWord& directive);

// Lengths |u_1|, |u_2|, ... up to and including the first one >= min_length.
std::vector<std::size_t> palindromic_prefix_lengths(const DirectiveWord& directive, std::size_t min_length);

// Every factor of length k of the standard word, computed from its
// structure: s = μ_n(s^(n)) with every image μ_n(y) of length >= k - 1, so
// each length-k factor sits inside μ_n(yz) for a length-2 factor yz of s^(n).
std::vector<Word> factors_of_length(const DirectiveWord& directive, std::size_t k);

// Length of the shortest prefix of the standard word containing every
// factor of length k. Prefixes at least this long give exact extremal factors.
std::size_t factor_horizon(const DirectiveWord& directive, std::size_t k);

// μ_n = Ψ_{x1} ... Ψ_{xn}; μ_0 = Id.
PureEpistandardMorphism mu(const DirectiveWord& directive, std::size_t n);

// h_n = μ_n(x_{n+1}).
Word h_word(const DirectiveWord& directive, std::size_t n);

struct StrictnessReport {
    std::vector<Letter> alph;
    std::vector<Letter> ult;
    // Set iff Alph(Δ) == Ult(Δ); then the standard word is strict over it.
    std::optional<std::vector<Letter>> strict_over;
    // Least m such that Alph(x_{m+1} x_{m+2} ...) == Ult(Δ).
    std::size_t m = 0;

    bool strict() const noexcept { return strict_over.has_value(); }
    // Strict over the whole of `alphabet`, not just a sub-alphabet.
    bool strict_over_alphabet(std::size_t alphabet_size) const noexcept {
        return strict_over && strict_over->size() == alphabet_size;
    }
};

StrictnessReport strictness(const DirectiveWord& directive);

struct Decomposition {
    PureEpistandardMorphism morphism; // μ_m
    DirectiveWord shifted;            // Δ^(m)
    std::size_t m;
};

// s = μ_m(s^(m)) with s^(m) strict over Ult(Δ). Throws NothingToDecompose
// when Δ is already strict.
Decomposition decompose_nonstrict(const DirectiveWord& directive);

struct ShiftChainRecord {
    std::size_t i;
    Letter generator;  // x_i
    Word image_prefix; // prefix(horizon) of Ψ_{x_i}(s^(i))
    Word target_prefix; // prefix(horizon) of s^(i-1)
};

// Checks s^(i-1) = Ψ_{x_i}(s^(i)) on the first `horizon` letters. Throws
// ConsistencyError on mismatch.
ShiftChainRecord shift_chain(const DirectiveWord& directive, std::size_t i, std::size_t horizon);

// Reads the directive letters off a prefix of a standard episturmian word:
// x_i is the letter following the palindromic prefix u_i. Stops once the
// next palindromic prefix would run past the end of w. Returns nullopt if w
// is not a prefix of any standard episturmian word's construction.
std::optional<std::vector<Letter>> directive_letters_of(const Word& w);

inline constexpr std::size_t max_fit_length = 64;

// Eventually periodic directives consistent with the observed letters,
// shortest (preperiod + period) first, up to max_fit_length letters. Only
// directives whose period uses exactly `period_alphabet` are produced when it
// is non-empty.
std::vector<DirectiveWord> fit_directive(const AlphabetRef& alphabet, std::span<const Letter> observed,
                                         std::span<const Letter> period_alphabet);

} // namespace etk
