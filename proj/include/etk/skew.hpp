#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "etk/directive.hpp"
#include "etk/morphism.hpp"
#include "etk/stream.hpp"

namespace etk {

// t = v·μ(𝐯) where 𝐯 is the standard word of `directive` (strict over
// B = alphabet∖{x}) and v is the suffix of length suffix_len of μ(ṽ_p·x),
// ṽ_p being the reversed length-p prefix of 𝐯.
struct SkewSpec {
    DirectiveWord directive;
    Letter x;
    std::size_t p = 0;
    PureEpistandardMorphism mu;
    std::size_t suffix_len = 0;

    const AlphabetRef& alphabet() const noexcept { return directive.alphabet(); }

    friend bool operator==(const SkewSpec& a, const SkewSpec& b) noexcept {
        return a.directive == b.directive && a.x == b.x && a.p == b.p && a.mu == b.mu &&
               a.suffix_len == b.suffix_len;
    }
};

// μ(ṽ_p·x), the word v is cut from.
Word skew_block(const SkewSpec& spec);
// v itself.
Word skew_prefix(const SkewSpec& spec);

// Throws SpecError unless 𝐯 is strict over alphabet∖{x}, x is a letter, the
// morphism is over the same alphabet and 1 <= suffix_len <= |μ(ṽ_p x)|.
void validate(const SkewSpec& spec);

// Same word, with p reduced to the least value whose block still has
// suffix_len letters.
SkewSpec canonical(const SkewSpec& spec);

// The realized stream v·μ(𝐯).
WordStream construct_skew(const SkewSpec& spec);

// Runs the peeling argument on a fine, non-recurrent stream: strip Ψ
// generators (prepending the separating letter when the word does not start
// with it) until one letter occurs exactly once, u·x·𝐯 with u = ṽ_p, then
// read the directive of 𝐯 and undo the prepends. The result is canonical and
// reproduces prefix(horizon) of t. Throws NotSkewForm otherwise.
SkewSpec reconstruct_skew(const WordStream& t, std::size_t depth, std::size_t horizon);

// "skew v=(ab) x=c p=4 mu=Ψ:c suffix=full" (suffix may also be a number).
SkewSpec parse_skew_spec(const AlphabetRef& alphabet, std::string_view text);
std::string format_skew_spec(const SkewSpec& spec);

} // namespace etk
