// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "etk/episturmian.hpp"
#include "etk/error.hpp"
#include "etk/extremal.hpp"
#include "etk/factors.hpp"
#include "etk/fine.hpp"
#include "etk/lex_order.hpp"
#include "etk/skew.hpp"
#include "support.hpp"

using namespace etk;
using namespace etk::testing;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

const AlphabetRef abc = letters(3);

DirectiveWord dir(const std::string& text) { return DirectiveWord::parse(abc, text); }
SkewSpec skew(const std::string& text) { return parse_skew_spec(abc, text); }

struct Golden {
    const char* name;
    StructuredWord spec;
    const char* expected;
    Classification structural;
};

std::vector<Golden> golden() {
    return {
        {"f", dir("(ab)"), "abaababaabaaba", Classification::StrictEpisturmian},
        {"cf", skew("skew v=(ab) x=c p=0 mu=Id suffix=full"), "cabaababaabaaba", Classification::SkewEpisturmian},
        {"f4~cf", skew("skew v=(ab) x=c p=4 mu=Id suffix=full"), "aabacabaababaabaaba",
         Classification::SkewEpisturmian},
        {"psi_a(f)", dir("a(ab)"), "aabaaabaabaaabaaaba", Classification::StrictEpisturmian},
        {"psi_c(cf)", skew("skew v=(ab) x=c p=0 mu=Ψ:c suffix=full"), "ccacbcacacbcacbcacacbcacacbca",
         Classification::SkewEpisturmian},
        {"psi_c(f4~cf)", skew("skew v=(ab) x=c p=4 mu=Ψ:c suffix=full"), "cacacbcaccacbcacacbcacbcacacbcaca",
         Classification::SkewEpisturmian},
    };
}

// The letters of Alph(s) and, for each, the orders on them with that letter least.
std::vector<std::pair<Letter, LexOrder>> least_letter_orders(const AlphabetRef& a, const std::vector<Letter>& alph) {
    std::vector<std::pair<Letter, LexOrder>> out;
    for (const LexOrder& o : orders_over(a, alph))
        out.emplace_back(o.least(), o);
    return out;
}

std::vector<DirectiveWord> corpus() {
    std::mt19937 rng(20240601);
    std::vector<DirectiveWord> out;
    while (out.size() < 100) {
        const AlphabetRef a = letters(between(rng, 1, 4));
        out.push_back(random_directive(rng, a, 3, 5));
    }
    return out;
}

Word with_first(Letter a, const Word& s, std::size_t len) {
    Word out(s.alphabet());
    out.push_back(a);
    out.append(s.prefix(len));
    return out;
}

Outcome golden_vectors() {
    int bad = 0;
    for (const Golden& g : golden()) {
        const std::string expected = g.expected;
        if (realize(g.spec).prefix(expected.size()).to_string() != expected)
            ++bad;
    }
    return {bad == 0, std::to_string(6 - bad) + "/6 words reproduced"};
}

Outcome golden_classification() {
    std::ostringstream detail;
    bool ok = true;
    for (const Golden& g : golden()) {
        const FinenessVerdict e = is_fine_empirical(realize(g.spec), 60, 2000);
        const FinenessVerdict s = classify(g.spec, 60, 2000);
        if (!e.fine() || s.classification != g.structural) {
            ok = false;
            detail << g.name << " empirical " << to_string(e.classification) << " structural "
                   << to_string(s.classification) << "; ";
        }
    }
    const DirectiveWord cab = dir("c(ab)");
    const FinenessVerdict v = classify(cab, 60, 2000);
    bool witness_ok = v.classification == Classification::NotFine && v.witness && v.witness->k <= 10;
    if (witness_ok) {
        const Word text = standard_word(cab).prefix(2000);
        const auto& wit = *v.witness;
        witness_ok = oracle_min(text, wit.k, wit.order) == wit.found && wit.found != wit.required &&
                     !factors(text, wit.k).empty() && factors(text, wit.k).count(wit.found) == 1;
        detail << "psi_c(f) witness " << wit.order.to_string() << " k=" << wit.k << " required " << wit.required
               << " found " << wit.found;
    } else {
        detail << "psi_c(f) has no witness at k <= 10";
    }
    return {ok && witness_ok, detail.str()};
}

Outcome least_bound() {
    std::size_t violations = 0, checks = 0;
    for (const DirectiveWord& d : corpus()) {
        const std::size_t k_max = 200;
        const Word text = standard_word(d).prefix(factor_horizon(d, k_max));
        const Word s = text.prefix(k_max);
        for (const auto& [a, o] : least_letter_orders(d.alphabet(), d.alph())) {
            const auto chain = extremal_chain(text, k_max, o, Extreme::Min);
            for (std::size_t k = 1; k <= k_max; ++k, ++checks)
                if (compare(with_first(a, s, k - 1), chain[k - 1], o) > 0)
                    ++violations;
        }
    }
    return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) + " checks"};
}

Outcome strict_equality() {
    std::size_t strict = 0, nonstrict = 0, strict_bad = 0, nonstrict_unwitnessed = 0;
    for (const DirectiveWord& d : corpus()) {
        const bool is_strict = strictness(d).strict();
        const std::size_t k_max = is_strict ? 200 : 50;
        const Word text = standard_word(d).prefix(factor_horizon(d, k_max));
        const Word s = text.prefix(k_max);
        bool equal_everywhere = true;
        for (const auto& [a, o] : least_letter_orders(d.alphabet(), d.alph())) {
            const auto chain = extremal_chain(text, k_max, o, Extreme::Min);
            for (std::size_t k = 1; k <= k_max; ++k)
                if (chain[k - 1] != with_first(a, s, k - 1))
                    equal_everywhere = false;
        }
        if (is_strict) {
            ++strict;
            strict_bad += !equal_everywhere;
        } else {
            ++nonstrict;
            nonstrict_unwitnessed += equal_everywhere;
        }
    }
    std::ostringstream detail;
    detail << strict << " strict (" << strict_bad << " failing equality), " << nonstrict << " non-strict ("
           << nonstrict_unwitnessed << " without a violation)";
    return {strict_bad == 0 && nonstrict_unwitnessed == 0 && strict > 0 && nonstrict > 0, detail.str()};
}

Outcome equations() {
    std::size_t violations = 0, checks = 0;
    for (const DirectiveWord& d : corpus()) {
        const auto us = palindromic_prefixes(d, 15);
        const WordStream s = standard_word(d);
        for (std::size_t n = 1; n <= us.size(); ++n) {
            const Word& u = us[n - 1];
            Word expect_closure(d.alphabet());
            Word hs(d.alphabet());
            for (std::size_t j = n - 1; j-- > 0;)
                hs.append(h_word(d, j));
            if (n > 1) {
                Word prev = us[n - 2];
                prev.push_back(d.letter(n - 1));
                expect_closure = brute_closure(prev);
            }
            ++checks;
            if (!is_palindrome(u) || hs != u || s.prefix(u.size()) != u || (n > 1 && expect_closure != u))
                ++violations;
        }
    }
    return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) + " prefixes"};
}

Outcome psi_transfer() {
    std::mt19937 rng(77);
    std::size_t hold = 0, fail = 0, disagreements = 0;
    for (int i = 0; i < 50; ++i) {
        const AlphabetRef a = letters(between(rng, 2, 4));
        const DirectiveWord d1 = random_strict_directive(rng, a, a->letters(), 2, 2);
        const bool different_s = i % 2 == 1;
        DirectiveWord d2 = d1;
        while (different_s && standard_word(d2).prefix(12) == standard_word(d1).prefix(12))
            d2 = random_strict_directive(rng, a, a->letters(), 2, 2);
        const Letter z = pick(rng, a->letters());
        const Letter least = pick(rng, a->letters());
        const std::size_t depth = 30;
        const std::size_t horizon = 2 * factor_horizon(d1, depth + 1) + 4 * depth;
        const bool agree =
            verify_lemma_transfer(standard_word(d1), standard_word(d2), z, least, depth, horizon);
        disagreements += !agree;
        // Population by the left side, evaluated directly.
        const Word text1 = standard_word(d1).prefix(horizon);
        const Word s1 = standard_word(d2).prefix(depth);
        bool lhs = true;
        for (const LexOrder& o : orders_over(a, a->letters())) {
            if (o.least() != least)
                continue;
            const auto chain = extremal_chain(text1, depth, o, Extreme::Min);
            for (std::size_t k = 1; k <= depth; ++k)
                lhs = lhs && chain[k - 1] == with_first(least, s1, k - 1);
        }
        (lhs ? hold : fail) += 1;
    }
    // z outside or inside Alph(t1), both branches.
    std::size_t branch_checks = 0, branch_bad = 0, below = 0, above = 0;
    for (int i = 0; i < 50; ++i) {
        const AlphabetRef a = letters(between(rng, 2, 4));
        std::vector<Letter> base = a->letters();
        if (i % 2 == 0)
            base.erase(base.begin() + static_cast<std::ptrdiff_t>(between(rng, 0, base.size() - 1)));
        if (base.size() < 2)
            base = a->letters();
        const DirectiveWord d1 = random_strict_directive(rng, a, base, 1, 2);
        const Letter z = pick(rng, a->letters());
        const std::size_t depth = 100;
        std::vector<Letter> alph_t = base;
        if (std::find(base.begin(), base.end(), z) == base.end())
            alph_t.push_back(z);
        std::sort(alph_t.begin(), alph_t.end());
        std::vector<Letter> zd{z};
        for (Letter l : d1.preperiod())
            zd.push_back(l);
        const DirectiveWord dz(Word(a, zd), d1.period());
        const Word text = standard_word(dz).prefix(factor_horizon(dz, depth));
        const Word image_s = text.prefix(depth);
        for (const LexOrder& o : orders_over(a, alph_t)) {
            Letter least = base.front();
            for (Letter l : base)
                if (o.less(l, least))
                    least = l;
            Word expected(a);
            if (o.less(z, least)) {
                expected.push_back(z);
                ++below;
            } else {
                ++above;
            }
            expected.push_back(least);
            expected.append(image_s);
            const auto chain = extremal_chain(text, depth, o, Extreme::Min);
            for (std::size_t k = 1; k <= depth; ++k, ++branch_checks)
                if (chain[k - 1] != expected.prefix(k))
                    ++branch_bad;
        }
    }
    std::ostringstream detail;
    detail << hold << " both-hold, " << fail << " both-fail, " << disagreements << " disagreements; branch check "
           << branch_bad << " failures in " << branch_checks << " (z<a " << below << ", z>=a " << above << ")";
    return {disagreements == 0 && hold > 0 && fail > 0 && branch_bad == 0 && below > 0 && above > 0, detail.str()};
}

Outcome complexity_counts() {
    std::size_t bad = 0;
    const DirectiveWord trib = dir("(abc)");
    const DirectiveWord fib = dir("(ab)");
    const std::size_t ht = factor_horizon(trib, 50), hf = factor_horizon(fib, 50);
    for (std::size_t n = 1; n <= 50; ++n) {
        bad += complexity(standard_word(trib), n, ht) != 2 * n + 1;
        bad += complexity(standard_word(fib), n, hf) != n + 1;
    }
    return {bad == 0, std::to_string(bad) + " mismatches (horizons " + std::to_string(ht) + ", " +
                          std::to_string(hf) + ")"};
}

Outcome oracle_equivalence() {
    std::mt19937 rng(4242);
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
        WordStream s = standard_word(dir("(ab)"));
        switch (i % 4) {
        case 0:
            s = standard_word(random_directive(rng, letters(between(rng, 2, 4)), 3, 5));
            break;
        case 1:
            s = construct_skew(random_skew(rng, between(rng, 2, 4)));
            break;
        case 2: {
            const AlphabetRef a = letters(between(rng, 2, 4));
            Word u(a), v(a);
            for (std::size_t j = between(rng, 0, 6); j > 0; --j)
                u.push_back(pick(rng, a->letters()));
            for (std::size_t j = between(rng, 1, 6); j > 0; --j)
                v.push_back(pick(rng, a->letters()));
            s = WordStream::literal(u, v);
            break;
        }
        default: {
            const AlphabetRef a = letters(3);
            s = psi(a, pick(rng, a->letters())).apply(standard_word(random_directive(rng, a, 2, 4)));
        }
        }
        const std::size_t k = between(rng, 1, 12);
        const std::size_t horizon = between(rng, 2 * k, 400);
        const auto orders = all_orders(s.alphabet());
        const LexOrder& o = orders[between(rng, 0, orders.size() - 1)];
        const Word text = s.prefix(horizon);
        bad += min_factor(s, k, o, horizon).word != oracle_min(text, k, o);
        bad += max_factor(s, k, o, horizon).word != oracle_max(text, k, o);
    }
    std::size_t chain_bad = 0;
    for (const Golden& g : golden()) {
        const Word text = realize(g.spec).prefix(2000);
        for (const LexOrder& o : all_orders(abc))
            for (Extreme e : {Extreme::Min, Extreme::Max}) {
                const auto chain = extremal_chain(text, 100, o, e);
                for (std::size_t k = 1; k < chain.size(); ++k)
                    chain_bad += !chain[k].starts_with(chain[k - 1]);
            }
    }
    return {bad == 0 && chain_bad == 0,
            std::to_string(bad) + " oracle mismatches in 400, " + std::to_string(chain_bad) + " chain breaks"};
}

Outcome round_trip() {
    std::mt19937 rng(909);
    std::size_t bad = 0;
    std::ostringstream first;
    for (int i = 0; i < 50; ++i) {
        const SkewSpec spec = random_skew(rng, between(rng, 2, 4));
        const WordStream t = construct_skew(spec);
        try {
            const SkewSpec back = reconstruct_skew(t, 60, 2000);
            const bool same = back.p == spec.p && back.x == spec.x && back.mu.length() == spec.mu.length() &&
                              construct_skew(back).prefix(2000) == t.prefix(2000);
            if (!same && bad++ == 0)
                first << format_skew_spec(spec) << " came back as " << format_skew_spec(back);
        } catch (const NotSkewForm& e) {
            if (bad++ == 0)
                first << format_skew_spec(spec) << ": " << e.what();
        }
    }
    return {bad == 0, std::to_string(50 - bad) + "/50 recovered" + (bad ? "; first failure " + first.str() : "")};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden vectors", 1, golden_vectors},
        {2, "golden fineness and witness", 5, golden_classification},
        {3, "a.s <= min(s) suite", 60, least_bound},
        {4, "strict equality suite", 60, strict_equality},
        {5, "closure and h-product equations", 0, equations},
        {6, "Psi transfer suite", 0, psi_transfer},
        {7, "factor complexity", 0, complexity_counts},
        {8, "oracle equivalence and prefix chains", 0, oracle_equivalence},
        {9, "skew round trip", 30, round_trip},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        const bool pass = out.pass && in_time;
        failures += !pass;
        std::printf("%s [%d] %s: %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs,
                    in_time ? "" : ", over time limit");
    }
    return failures == 0 ? 0 : 1;
}
