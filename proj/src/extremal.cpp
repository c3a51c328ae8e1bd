#include "etk/extremal.hpp"

#include <algorithm>

#include "etk/error.hpp"

namespace etk {

namespace {

// Letter keys such that the wanted extreme is always the smallest key.
std::vector<std::size_t> keys_for(const LexOrder& order, Extreme which) {
    std::vector<std::size_t> keys = order.ranks();
    if (which == Extreme::Max)
        for (auto& r : keys)
            r = keys.size() - 1 - r;
    return keys;
}

std::vector<std::size_t> full_scan(const std::vector<std::size_t>& key, std::size_t k) {
    const std::size_t n = key.size();
    std::vector<std::size_t> best{0};
    for (std::size_t p = 1; p + k <= n; ++p) {
        const std::size_t q = best.front();
        int cmp = 0;
        for (std::size_t i = 0; i < k && cmp == 0; ++i)
            cmp = key[p + i] < key[q + i] ? -1 : key[p + i] > key[q + i] ? 1 : 0;
        if (cmp < 0)
            best.assign(1, p);
        else if (cmp == 0)
            best.push_back(p);
    }
    return best;
}

ExtremalResult finite_extreme(const Word& w, std::size_t k, const LexOrder& order, Extreme which) {
    if (k > w.size())
        throw LengthError("factor length " + std::to_string(k) + " exceeds word length " + std::to_string(w.size()));
    ExtremalResult r;
    r.word = k == 0 ? Word(w.alphabet()) : extremal_chain(w, k, order, which).back();
    r.k = k;
    r.order = order;
    r.horizon = w.size();
    r.exactness = Exactness::Exact;
    return r;
}

ExtremalResult stream_extreme(const WordStream& s, std::size_t k, const LexOrder& order, std::size_t horizon,
                              Extreme which) {
    if (k == 0)
        throw LengthError("factor length must be positive");
    if (horizon < k)
        throw LengthError("horizon " + std::to_string(horizon) + " is shorter than k = " + std::to_string(k));
    ExtremalResult r;
    r.word = extremal_chain(s.prefix(horizon), k, order, which).back();
    r.k = k;
    r.order = order;
    r.horizon = horizon;
    if (auto bound = s.exact_horizon(k)) {
        r.exactness = horizon >= *bound ? Exactness::Exact : Exactness::HorizonLimited;
    } else {
        const Word twice = extremal_chain(s.prefix(2 * horizon), k, order, which).back();
        r.exactness = twice == r.word ? Exactness::Exact : Exactness::HorizonLimited;
    }
    return r;
}

std::size_t nested_length(const std::vector<Word>& chain) {
    std::size_t good = chain.empty() ? 0 : 1;
    while (good < chain.size() && chain[good].starts_with(chain[good - 1]))
        ++good;
    return good;
}

Word stabilized(const WordStream& s, const LexOrder& order, std::size_t horizon, Extreme which) {
    const std::size_t max_k = horizon / 2;
    if (max_k == 0)
        return Word(s.alphabet());
    if (auto bound = s.exact_horizon(max_k)) {
        const auto chain = extremal_chain(s.prefix(std::max(horizon, *bound)), max_k, order, which);
        return chain[nested_length(chain) - 1];
    }
    const auto chain = extremal_chain(s.prefix(horizon), max_k, order, which);
    const auto twice = extremal_chain(s.prefix(2 * horizon), max_k, order, which);
    std::size_t good = std::min(nested_length(chain), nested_length(twice));
    std::size_t agree = 0;
    while (agree < good && chain[agree] == twice[agree])
        ++agree;
    return agree == 0 ? Word(s.alphabet()) : chain[agree - 1];
}

Word oracle(const Word& w, std::size_t k, const LexOrder& order, bool want_max) {
    if (k > w.size())
        throw LengthError("factor length " + std::to_string(k) + " exceeds word length " + std::to_string(w.size()));
    if (w.alphabet() && !same_alphabet(w.alphabet(), order.alphabet()))
        throw AlphabetError("word and order use different alphabets");
    std::vector<std::vector<std::size_t>> windows;
    for (std::size_t p = 0; p + k <= w.size(); ++p) {
        std::vector<std::size_t> ranks;
        for (std::size_t i = 0; i < k; ++i)
            ranks.push_back(order.rank(w[p + i]));
        windows.push_back(std::move(ranks));
    }
    std::sort(windows.begin(), windows.end());
    const auto& pick = want_max ? windows.back() : windows.front();
    Word out(order.alphabet());
    for (std::size_t r : pick)
        out.push_back(order.ascending()[r]);
    return out;
}

} // namespace

std::vector<Word> extremal_chain(const Word& text, std::size_t max_k, const LexOrder& order, Extreme which) {
    if (text.alphabet() && !same_alphabet(text.alphabet(), order.alphabet()))
        throw AlphabetError("word and order use different alphabets");
    const std::vector<std::size_t> rank = keys_for(order, which);
    std::vector<std::size_t> key;
    key.reserve(text.size());
    for (Letter l : text)
        key.push_back(rank[index_of(l)]);

    const std::size_t n = text.size();
    std::vector<Word> out;
    std::vector<std::size_t> cand;
    for (std::size_t p = 0; p < n; ++p)
        cand.push_back(p);
    for (std::size_t k = 1; k <= max_k && k <= n; ++k) {
        std::erase_if(cand, [&](std::size_t p) { return p + k > n; });
        if (cand.empty()) {
            cand = full_scan(key, k);
        } else {
            std::size_t best = key[cand.front() + k - 1];
            for (std::size_t p : cand)
                best = std::min(best, key[p + k - 1]);
            std::erase_if(cand, [&](std::size_t p) { return key[p + k - 1] != best; });
        }
        out.push_back(text.subword(cand.front(), k));
    }
    return out;
}

ExtremalResult min_factor(const Word& w, std::size_t k, const LexOrder& order) {
    return finite_extreme(w, k, order, Extreme::Min);
}

ExtremalResult max_factor(const Word& w, std::size_t k, const LexOrder& order) {
    return finite_extreme(w, k, order, Extreme::Max);
}

ExtremalResult min_factor(const WordStream& s, std::size_t k, const LexOrder& order, std::size_t horizon) {
    return stream_extreme(s, k, order, horizon, Extreme::Min);
}

ExtremalResult max_factor(const WordStream& s, std::size_t k, const LexOrder& order, std::size_t horizon) {
    return stream_extreme(s, k, order, horizon, Extreme::Max);
}

Word min_stream(const WordStream& s, const LexOrder& order, std::size_t horizon) {
    return stabilized(s, order, horizon, Extreme::Min);
}

Word max_stream(const WordStream& s, const LexOrder& order, std::size_t horizon) {
    return stabilized(s, order, horizon, Extreme::Max);
}

Word oracle_min(const Word& w, std::size_t k, const LexOrder& order) { return oracle(w, k, order, false); }

Word oracle_max(const Word& w, std::size_t k, const LexOrder& order) { return oracle(w, k, order, true); }

} // namespace etk
