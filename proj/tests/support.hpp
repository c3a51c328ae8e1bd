#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "etk/alphabet.hpp"
#include "etk/directive.hpp"
#include "etk/episturmian.hpp"
#include "etk/morphism.hpp"
#include "etk/skew.hpp"
#include "etk/word.hpp"

namespace etk::testing {

inline AlphabetRef letters(std::size_t n) {
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < n; ++i)
        symbols.push_back(std::string(1, static_cast<char>('a' + i)));
    return Alphabet::make(symbols);
}

inline Word w(const AlphabetRef& a, std::string_view text) { return Word::parse(a, text); }

inline Letter pick(std::mt19937& rng, const std::vector<Letter>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
}

inline std::size_t between(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Preperiod and period drawn letter by letter from the alphabet.
inline DirectiveWord random_directive(std::mt19937& rng, const AlphabetRef& a, std::size_t max_pre,
                                      std::size_t max_period) {
    const auto all = a->letters();
    Word pre(a), period(a);
    const std::size_t lp = between(rng, 0, max_pre), lq = between(rng, 1, max_period);
    for (std::size_t i = 0; i < lp; ++i)
        pre.push_back(pick(rng, all));
    for (std::size_t i = 0; i < lq; ++i)
        period.push_back(pick(rng, all));
    return DirectiveWord(pre, period);
}

// A directive strict over exactly `base`.
inline DirectiveWord random_strict_directive(std::mt19937& rng, const AlphabetRef& a, std::vector<Letter> base,
                                             std::size_t max_pre, std::size_t max_extra) {
    std::shuffle(base.begin(), base.end(), rng);
    Word pre(a), period(a, base);
    const std::size_t lp = between(rng, 0, max_pre), extra = between(rng, 0, max_extra);
    for (std::size_t i = 0; i < lp; ++i)
        pre.push_back(pick(rng, base));
    for (std::size_t i = 0; i < extra; ++i)
        period.push_back(pick(rng, base));
    return DirectiveWord(pre, period);
}

// Canonical skew specs: μ empty or ending in Ψ_x, p least for its suffix.
inline SkewSpec random_skew(std::mt19937& rng, std::size_t alphabet_size) {
    const AlphabetRef a = letters(alphabet_size);
    const auto all = a->letters();
    const Letter x = pick(rng, all);
    std::vector<Letter> base;
    for (Letter l : all)
        if (l != x)
            base.push_back(l);
    const DirectiveWord d = random_strict_directive(rng, a, base, 2, 3);
    std::vector<Letter> gens;
    const std::size_t len = between(rng, 0, 3);
    for (std::size_t i = 0; i + 1 < len; ++i)
        gens.push_back(pick(rng, all));
    if (len > 0)
        gens.push_back(x);
    SkewSpec spec{d, x, between(rng, 0, 6), PureEpistandardMorphism(a, gens), 1};
    spec.suffix_len = between(rng, 1, skew_block(spec).size());
    return canonical(spec);
}

// Shortest palindrome with prefix w, by trying every completion.
inline Word brute_closure(const Word& w) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
        Word c = w;
        for (std::size_t j = i; j-- > 0;)
            c.push_back(w[j]);
        if (is_palindrome(c))
            return c;
    }
    return w;
}

} // namespace etk::testing
