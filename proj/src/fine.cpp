#include "etk/fine.hpp"

#include <algorithm>

#include "etk/episturmian.hpp"
#include "etk/error.hpp"
#include "etk/extremal.hpp"
#include "etk/factors.hpp"

namespace etk {

namespace {

struct Scan {
    Word s;
    std::optional<FinenessWitness> witness;
};

// Compares every order's min chain against least·s with s read off the
// first order's chain.
Scan scan_min(const Word& text, std::size_t depth) {
    const std::vector<Letter> present = letters_of(text.letters());
    const auto orders = orders_over(text.alphabet(), present);
    std::vector<std::vector<Word>> chains;
    chains.reserve(orders.size());
    for (const LexOrder& o : orders)
        chains.push_back(extremal_chain(text, depth, o, Extreme::Min));

    Scan out;
    const Word& top = chains.front().back();
    out.s = top.suffix(top.size() - 1);
    for (std::size_t k = 1; k <= depth && !out.witness; ++k) {
        for (std::size_t i = 0; i < orders.size(); ++i) {
            Word required(text.alphabet());
            required.push_back(orders[i].least());
            required.append(out.s.prefix(k - 1));
            if (chains[i][k - 1] != required) {
                out.witness = FinenessWitness{orders[i], k, required, chains[i][k - 1]};
                break;
            }
        }
    }
    return out;
}

// Every factor of t of length <= max_len seen in the scanned prefix also
// occurs in s.
bool shares_factors(const Word& t, const Word& s, std::size_t max_len) {
    for (std::size_t len = 1; len <= max_len && len <= s.size(); ++len) {
        const auto fs = factors(s, len);
        for (const Word& f : factors(t, len))
            if (!fs.count(f))
                return false;
    }
    return true;
}

std::vector<Letter> skew_base(const SkewSpec& spec) {
    std::vector<Letter> out;
    for (Letter l : spec.alphabet()->letters())
        if (l != spec.x)
            out.push_back(l);
    return out;
}

void check_horizon(std::size_t depth, std::size_t horizon) {
    if (depth == 0)
        throw LengthError("depth must be positive");
    if (horizon < 2 * depth)
        throw LengthError("horizon " + std::to_string(horizon) + " must be at least twice the depth " +
                          std::to_string(depth));
}

struct Remapped {
    AlphabetRef alphabet;
    LiteralSpec spec;
};

// Restricts a literal word to the letters it actually uses.
Remapped restrict_literal(const LiteralSpec& lit) {
    Word all = lit.prefix + lit.period;
    const std::vector<Letter> used = letters_of(all.letters());
    std::vector<std::string> symbols;
    for (Letter l : used)
        symbols.push_back(lit.period.alphabet()->symbol(l));
    AlphabetRef sub = Alphabet::make(symbols);
    auto remap = [&](const Word& w) {
        Word out(sub);
        for (Letter l : w)
            out.push_back(letter_at(static_cast<std::size_t>(std::find(used.begin(), used.end(), l) - used.begin())));
        return out;
    };
    return {sub, LiteralSpec{remap(lit.prefix), remap(lit.period)}};
}

} // namespace

std::string to_string(Classification c) {
    switch (c) {
    case Classification::StrictEpisturmian:
        return "StrictEpisturmian";
    case Classification::SkewEpisturmian:
        return "SkewEpisturmian";
    case Classification::NotFine:
        return "NotFine";
    case Classification::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

FinenessVerdict is_fine_empirical(const WordStream& t, std::size_t depth, std::size_t horizon) {
    check_horizon(depth, horizon);
    const Word text = t.prefix(horizon);
    Scan scan = scan_min(text, depth);

    FinenessVerdict v;
    v.depth = depth;
    v.horizon = horizon;
    v.s_prefix = scan.s;
    if (scan.witness) {
        v.classification = Classification::NotFine;
        v.witness = std::move(scan.witness);
        return v;
    }
    try {
        v.skew = reconstruct_skew(t, depth, horizon);
        v.classification = Classification::SkewEpisturmian;
        v.strict_over = skew_base(*v.skew);
        return v;
    } catch (const NotSkewForm&) {
    }
    const Word s_long = min_stream(t, LexOrder::natural(t.alphabet()), horizon);
    const Word s = s_long.suffix(s_long.size() - 1);
    if (shares_factors(text, s, std::min<std::size_t>(depth, 8))) {
        v.classification = Classification::StrictEpisturmian;
        v.strict_over = letters_of(text.letters());
    } else {
        v.classification = Classification::Unknown;
    }
    return v;
}

WordStream realize(const StructuredWord& spec) {
    if (const auto* d = std::get_if<DirectiveWord>(&spec))
        return standard_word(*d);
    if (const auto* sk = std::get_if<SkewSpec>(&spec))
        return construct_skew(*sk);
    const auto& lit = std::get<LiteralSpec>(spec);
    return WordStream::literal(lit.prefix, lit.period);
}

FinenessVerdict classify(const StructuredWord& spec, std::size_t depth, std::size_t horizon) {
    if (horizon == 0)
        horizon = std::max<std::size_t>(1000, 20 * depth);
    check_horizon(depth, horizon);

    if (const auto* lit = std::get_if<LiteralSpec>(&spec)) {
        const Remapped r = restrict_literal(*lit);
        if (r.alphabet->size() < lit->period.alphabet()->size()) {
            FinenessVerdict v = classify(StructuredWord(r.spec), depth, horizon);
            // Report over the caller's alphabet.
            const AlphabetRef& full = lit->period.alphabet();
            auto lift_letter = [&](Letter l) { return *full->find(r.alphabet->symbol(l)); };
            auto lift = [&](const Word& w) {
                Word out(full);
                for (Letter l : w)
                    out.push_back(lift_letter(l));
                return out;
            };
            for (auto& l : v.strict_over)
                l = lift_letter(l);
            v.s_prefix = lift(v.s_prefix);
            if (v.witness) {
                std::vector<Letter> asc;
                for (Letter l : v.witness->order.ascending())
                    asc.push_back(lift_letter(l));
                v.witness = FinenessWitness{orders_over(full, asc).front(), v.witness->k, lift(v.witness->required),
                                            lift(v.witness->found)};
            }
            // A recovered skew form stays over the restricted alphabet; its symbols are unchanged.
            return v;
        }
    }

    const WordStream t = realize(spec);
    FinenessVerdict structural;
    structural.depth = depth;
    structural.horizon = horizon;
    std::optional<Word> expected_s;

    if (const auto* d = std::get_if<DirectiveWord>(&spec)) {
        const StrictnessReport r = strictness(*d);
        if (r.strict()) {
            structural.classification = Classification::StrictEpisturmian;
            structural.strict_over = *r.strict_over;
            expected_s = t.prefix(depth - 1);
        } else {
            structural.classification = Classification::NotFine;
        }
    } else if (const auto* sk = std::get_if<SkewSpec>(&spec)) {
        validate(*sk);
        structural.classification = Classification::SkewEpisturmian;
        structural.skew = canonical(*sk);
        structural.strict_over = skew_base(*sk);
        expected_s = sk->mu.apply(standard_word(sk->directive)).prefix(depth - 1);
    } else {
        const auto& lit = std::get<LiteralSpec>(spec);
        const std::vector<Letter> used = letters_of((lit.prefix + lit.period).letters());
        if (used.size() == 1) {
            structural.classification = Classification::StrictEpisturmian;
            structural.strict_over = used;
            expected_s = t.prefix(depth - 1);
        } else if (used.size() == 2) {
            try {
                structural.skew = reconstruct_skew(t, depth, horizon);
                structural.classification = Classification::SkewEpisturmian;
                structural.strict_over = skew_base(*structural.skew);
                expected_s = structural.skew->mu.apply(standard_word(structural.skew->directive)).prefix(depth - 1);
            } catch (const NotSkewForm&) {
                structural.classification = Classification::NotFine;
            }
        } else {
            structural.classification = Classification::NotFine;
        }
    }

    FinenessVerdict empirical = is_fine_empirical(t, depth, horizon);

    if (structural.fine()) {
        if (!empirical.fine() && empirical.classification != Classification::Unknown)
            throw ConsistencyError("structurally " + to_string(structural.classification) +
                                   " word fails the empirical check at k = " +
                                   std::to_string(empirical.witness->k) + " under " +
                                   empirical.witness->order.to_string());
        if (empirical.classification != Classification::Unknown &&
            empirical.classification != structural.classification)
            throw ConsistencyError("structural verdict " + to_string(structural.classification) +
                                   " disagrees with empirical verdict " + to_string(empirical.classification));
        if (expected_s && *expected_s != empirical.s_prefix)
            throw ConsistencyError("common word " + empirical.s_prefix.to_string() + " differs from expected " +
                                   expected_s->to_string());
        structural.s_prefix = empirical.s_prefix;
        return structural;
    }

    // NotFine: locate a witness, looking deeper if the requested depth shows none.
    std::size_t d = depth;
    std::size_t h = horizon;
    for (int attempt = 0; attempt < 4 && !empirical.witness; ++attempt) {
        d *= 2;
        h *= 2;
        empirical = is_fine_empirical(t, d, h);
    }
    if (!empirical.witness)
        throw ConsistencyError("structurally not fine, but no witness up to depth " + std::to_string(d));
    structural.witness = empirical.witness;
    structural.s_prefix = empirical.s_prefix.prefix(std::min(empirical.s_prefix.size(), depth - 1));
    return structural;
}

std::optional<Word> common_s(const WordStream& t, std::size_t depth, std::size_t horizon) {
    check_horizon(depth, horizon);
    const Word text = t.prefix(horizon);
    Scan scan = scan_min(text, depth);
    if (scan.witness)
        return std::nullopt;
    const std::vector<Letter> present = letters_of(text.letters());
    if (present.size() == 2) {
        for (const LexOrder& o : orders_over(text.alphabet(), present)) {
            const auto chain = extremal_chain(text, depth, o, Extreme::Max);
            for (std::size_t k = 1; k <= depth; ++k) {
                Word required(text.alphabet());
                required.push_back(o.ascending()[1]);
                required.append(scan.s.prefix(k - 1));
                if (chain[k - 1] != required)
                    return std::nullopt;
            }
        }
    }
    return scan.s;
}

bool verify_lemma_transfer(const WordStream& t1, const WordStream& s1, Letter z, Letter a, std::size_t depth,
                           std::size_t horizon) {
    check_horizon(depth, horizon);
    const AlphabetRef& alphabet = t1.alphabet();
    const PureEpistandardMorphism psi_z = psi(alphabet, z);
    const Word text1 = t1.prefix(horizon);
    const Word text = psi_z.apply(t1).prefix(horizon);
    const Word s1_prefix = s1.prefix(depth);
    const Word s_prefix = psi_z.apply(s1).prefix(depth);

    const std::vector<Letter> alph1 = letters_of(text1.letters());
    std::vector<Letter> letters = alph1;
    if (std::find(letters.begin(), letters.end(), z) == letters.end())
        letters.push_back(z);
    std::sort(letters.begin(), letters.end());

    for (const LexOrder& o : orders_over(alphabet, letters)) {
        const Letter least1 = *std::min_element(alph1.begin(), alph1.end(),
                                                [&](Letter x, Letter y) { return o.less(x, y); });
        if (least1 != a)
            continue;
        Word lhs_word(alphabet);
        lhs_word.push_back(a);
        lhs_word.append(s1_prefix);
        Word rhs_word(alphabet);
        if (o.less(z, a))
            rhs_word.push_back(z);
        rhs_word.push_back(a);
        rhs_word.append(s_prefix);

        const auto chain1 = extremal_chain(text1, depth, o, Extreme::Min);
        const auto chain = extremal_chain(text, depth, o, Extreme::Min);
        bool lhs = chain1.size() == depth;
        for (std::size_t k = 1; k <= depth && lhs; ++k)
            lhs = chain1[k - 1] == lhs_word.prefix(k);
        bool rhs = chain.size() == depth;
        for (std::size_t k = 1; k <= depth && rhs; ++k)
            rhs = chain[k - 1] == rhs_word.prefix(k);
        if (lhs != rhs)
            return false;
    }
    return true;
}

} // namespace etk
