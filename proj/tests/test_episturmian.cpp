#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etk/episturmian.hpp"
#include "etk/error.hpp"
#include "etk/factors.hpp"
#include "support.hpp"

using namespace etk;
using namespace etk::testing;

namespace {

std::vector<std::string> strings(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& x : ws)
        out.push_back(x.to_string());
    return out;
}

std::vector<DirectiveWord> corpus(unsigned seed, std::size_t n) {
    std::mt19937 rng(seed);
    std::vector<DirectiveWord> out;
    while (out.size() < n)
        out.push_back(random_directive(rng, letters(between(rng, 1, 4)), 3, 5));
    return out;
}

} // namespace

TEST_CASE("palindromic closure") {
    const AlphabetRef a = letters(3);
    CHECK(palindromic_closure(Word(a)).empty());
    CHECK(palindromic_closure(w(a, "ab")).to_string() == "aba");
    CHECK(palindromic_closure(w(a, "abaa")).to_string() == "abaaba");
    std::mt19937 rng(1);
    for (int i = 0; i < 2000; ++i) {
        Word x(a);
        for (std::size_t n = between(rng, 0, 14); n > 0; --n)
            x.push_back(pick(rng, i % 2 ? a->letters() : std::vector<Letter>{letter_at(0), letter_at(1)}));
        REQUIRE(palindromic_closure(x) == brute_closure(x));
    }
}

TEST_CASE("palindromic prefixes") {
    const AlphabetRef a = letters(3);
    CHECK(strings(palindromic_prefixes(DirectiveWord::parse(a, "(ab)"), 5)) ==
          std::vector<std::string>{"", "a", "aba", "abaaba", "abaababaaba"});
    CHECK(strings(palindromic_prefixes(DirectiveWord::parse(a, "(abc)"), 4)) ==
          std::vector<std::string>{"", "a", "aba", "abacaba"});
    CHECK(strings(palindromic_prefixes(DirectiveWord::parse(a, "(a)"), 4)) ==
          std::vector<std::string>{"", "a", "aa", "aaa"});
    CHECK_THROWS_AS(palindromic_prefixes(DirectiveWord::parse(a, "(a)"), 0), LengthError);
}

TEST_CASE("standard words") {
    const AlphabetRef a = letters(3);
    CHECK(standard_word(DirectiveWord::parse(a, "(ab)")).prefix(14).to_string() == "abaababaabaaba");
    CHECK(standard_word(DirectiveWord::parse(a, "c(ab)")).prefix(10).to_string() == "cacbcacacb");
    CHECK(standard_word(DirectiveWord::parse(a, "(a)")).prefix(5).to_string() == "aaaaa");
    CHECK(standard_word(DirectiveWord::parse(a, "(ab)")).kind() == StreamKind::EpisturmianFromDirective);
}

TEST_CASE("h words") {
    const AlphabetRef a = letters(2);
    const DirectiveWord f = DirectiveWord::parse(a, "(ab)");
    CHECK(h_word(f, 0).to_string() == "a");
    CHECK(h_word(f, 1).to_string() == "ab");
    CHECK(h_word(f, 2).to_string() == "aba");
    CHECK(mu(f, 0).is_identity());
}

TEST_CASE("prefix equations across a random corpus") {
    for (const DirectiveWord& d : corpus(2, 100)) {
        const auto us = palindromic_prefixes(d, 20);
        const WordStream s = standard_word(d);
        for (std::size_t n = 1; n <= us.size(); ++n) {
            const Word& u = us[n - 1];
            REQUIRE(is_palindrome(u));
            REQUIRE(s.prefix(u.size()) == u);
            if (n < us.size()) {
                REQUIRE(us[n].size() > u.size());
                REQUIRE(us[n].starts_with(u));
                REQUIRE(h_word(d, n - 1) + u == us[n]);
            }
            if (n <= 15) {
                Word hs(d.alphabet());
                for (std::size_t j = n - 1; j-- > 0;)
                    hs.append(h_word(d, j));
                REQUIRE(hs == u);
            }
        }
        const auto lengths = palindromic_prefix_lengths(d, us.back().size());
        for (std::size_t i = 0; i < us.size(); ++i)
            REQUIRE(lengths[i] == us[i].size());
    }
}

TEST_CASE("first letter is separating") {
    for (const DirectiveWord& d : corpus(3, 50)) {
        const Word p = standard_word(d).prefix(500);
        REQUIRE(is_separating(d.letter(1), p));
    }
}

TEST_CASE("strictness") {
    const AlphabetRef ab = letters(2);
    const AlphabetRef abc = letters(3);
    auto r = strictness(DirectiveWord::parse(ab, "(ab)"));
    CHECK(r.strict());
    CHECK(r.strict_over_alphabet(2));
    CHECK(r.m == 0);
    r = strictness(DirectiveWord::parse(abc, "c(ab)"));
    CHECK_FALSE(r.strict());
    CHECK(r.ult == std::vector<Letter>{letter_at(0), letter_at(1)});
    CHECK(r.m == 1);
    r = strictness(DirectiveWord::parse(abc, "(abc)"));
    CHECK(r.strict_over_alphabet(3));
    CHECK(r.m == 0);
    // Strict over a proper sub-alphabet.
    r = strictness(DirectiveWord::parse(abc, "ab(ab)"));
    CHECK(r.strict());
    CHECK_FALSE(r.strict_over_alphabet(3));
    CHECK(strictness(DirectiveWord::parse(abc, "cab(ab)")).m == 1);
    CHECK(strictness(DirectiveWord::parse(abc, "ca(b)")).m == 2);
}

TEST_CASE("decomposition of non-strict words") {
    const AlphabetRef abc = letters(3);
    auto d = decompose_nonstrict(DirectiveWord::parse(abc, "c(ab)"));
    CHECK(d.morphism.to_string() == "Ψ:c");
    CHECK(d.shifted.to_string() == "(ab)");
    d = decompose_nonstrict(DirectiveWord::parse(abc, "cab(ab)"));
    CHECK(d.m == 1);
    CHECK(d.morphism.to_string() == "Ψ:c");
    CHECK(d.shifted.to_string() == "ab(ab)");
    d = decompose_nonstrict(DirectiveWord::parse(abc, "ca(b)"));
    CHECK(d.m == 2);
    CHECK(d.morphism.to_string() == "Ψ:ca");
    CHECK(d.shifted.to_string() == "(b)");
    CHECK_THROWS_AS(decompose_nonstrict(DirectiveWord::parse(abc, "(ab)")), NothingToDecompose);
}

TEST_CASE("both construction paths agree") {
    std::size_t checked = 0;
    for (const DirectiveWord& d : corpus(4, 100)) {
        if (strictness(d).strict())
            continue;
        const Decomposition dec = decompose_nonstrict(d);
        REQUIRE(strictness(dec.shifted).strict());
        REQUIRE(dec.morphism.apply(standard_word(dec.shifted)).prefix(10000) == standard_word(d).prefix(10000));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("shift chain") {
    const AlphabetRef abc = letters(3);
    const auto rec = shift_chain(DirectiveWord::parse(abc, "(ab)"), 1, 100);
    CHECK(rec.target_prefix == rec.image_prefix);
    CHECK(standard_word(DirectiveWord::parse(abc, "(ab)").shift(1)).prefix(5).to_string() == "babba");
    const auto rec2 = shift_chain(DirectiveWord::parse(abc, "c(ab)"), 1, 100);
    CHECK(rec2.generator == letter_at(2));
    shift_chain(DirectiveWord::parse(abc, "(a)"), 1, 10);
    for (const DirectiveWord& d : corpus(5, 30))
        for (std::size_t i = 1; i <= 6; ++i)
            shift_chain(d, i, 300);
}

TEST_CASE("complexity of strict words") {
    std::mt19937 rng(6);
    for (int i = 0; i < 20; ++i) {
        const std::size_t k = between(rng, 2, 4);
        const AlphabetRef a = letters(k);
        const DirectiveWord d = random_strict_directive(rng, a, a->letters(), 2, 3);
        const WordStream s = standard_word(d);
        const std::size_t h = factor_horizon(d, 30);
        for (std::size_t n = 1; n <= 30; ++n)
            REQUIRE(complexity(s, n, h) == (k - 1) * n + 1);
    }
}

TEST_CASE("factor sets and horizons") {
    for (const DirectiveWord& d : corpus(7, 60)) {
        const WordStream s = standard_word(d);
        for (std::size_t k : {1, 2, 5, 17, 40}) {
            const auto fs = factors_of_length(d, k);
            const std::size_t h = factor_horizon(d, k);
            const Word long_prefix = s.prefix(std::max<std::size_t>(8 * h, 4000));
            const auto scanned = factors(long_prefix, k);
            REQUIRE(std::set<Word>(fs.begin(), fs.end()) == scanned);
            REQUIRE(factors(s.prefix(h), k) == scanned);
            REQUIRE(factors(s.prefix(h - 1), k).size() < scanned.size());
        }
    }
    // The |u_m| >= 2k rule of thumb is not enough: here a appears only after
    // the fourth palindromic prefix.
    const AlphabetRef ab = letters(2);
    const DirectiveWord runs = DirectiveWord::parse(ab, "bb(bbbab)");
    CHECK(factor_horizon(runs, 1) > palindromic_prefix_lengths(runs, 2).back());
}

TEST_CASE("reading directives back") {
    const AlphabetRef abc = letters(3);
    const Word f = standard_word(DirectiveWord::parse(abc, "(ab)")).prefix(200);
    const auto letters_read = directive_letters_of(f);
    REQUIRE(letters_read);
    for (std::size_t i = 0; i < letters_read->size(); ++i)
        REQUIRE((*letters_read)[i] == letter_at(i % 2));
    CHECK(letters_read->size() >= 8);
    CHECK_FALSE(directive_letters_of(w(abc, "abb")));
    const auto fits = fit_directive(abc, *letters_read, std::vector<Letter>{letter_at(0), letter_at(1)});
    REQUIRE_FALSE(fits.empty());
    CHECK(fits.front().to_string() == "(ab)");
    const auto t = standard_word(DirectiveWord::parse(abc, "ca(abc)")).prefix(3000);
    const auto tl = directive_letters_of(t);
    REQUIRE(tl);
    CHECK(fit_directive(abc, *tl, abc->letters()).front().to_string() == "ca(abc)");
}
