#include "etk/lex_order.hpp"

#include <algorithm>
#include <numeric>

#include "etk/error.hpp"

namespace etk {

LexOrder::LexOrder(AlphabetRef alphabet, std::vector<Letter> ascending)
    : alphabet_(std::move(alphabet)), ascending_(std::move(ascending)) {
    if (!alphabet_)
        throw AlphabetError("order needs an alphabet");
    const std::size_t k = alphabet_->size();
    if (ascending_.size() != k)
        throw AlphabetError("order must rank all " + std::to_string(k) + " letters");
    rank_.assign(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        const Letter l = ascending_[r];
        if (!alphabet_->contains(l))
            throw AlphabetError("order names a letter outside the alphabet");
        if (rank_[index_of(l)] != k)
            throw AlphabetError("letter '" + alphabet_->symbol(l) + "' ranked twice");
        rank_[index_of(l)] = r;
    }
}

LexOrder LexOrder::natural(AlphabetRef alphabet) {
    auto letters = alphabet->letters();
    return LexOrder(std::move(alphabet), std::move(letters));
}

LexOrder LexOrder::from_ascending(AlphabetRef alphabet, std::vector<Letter> ascending) {
    return LexOrder(std::move(alphabet), std::move(ascending));
}

LexOrder LexOrder::parse(AlphabetRef alphabet, std::string_view text) {
    std::vector<Letter> ascending;
    std::size_t start = 0;
    while (true) {
        const auto lt = text.find('<', start);
        const auto token = text.substr(start, lt == std::string_view::npos ? std::string_view::npos : lt - start);
        if (token.empty())
            throw ParseError("empty letter in order '" + std::string(text) + "'", start);
        const auto l = alphabet->find(token);
        if (!l)
            throw ParseError("unknown letter '" + std::string(token) + "' in order", start);
        ascending.push_back(*l);
        if (lt == std::string_view::npos)
            break;
        start = lt + 1;
    }
    return LexOrder(std::move(alphabet), std::move(ascending));
}

std::string LexOrder::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < ascending_.size(); ++i) {
        if (i)
            out += '<';
        out += alphabet_->symbol(ascending_[i]);
    }
    return out;
}

std::strong_ordering compare(std::span<const Letter> u, std::span<const Letter> v, const LexOrder& order) {
    const auto& ranks = order.ranks();
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == v[i])
            continue;
        const auto ru = index_of(u[i]) < ranks.size() ? ranks[index_of(u[i])] : ranks.size();
        const auto rv = index_of(v[i]) < ranks.size() ? ranks[index_of(v[i])] : ranks.size();
        if (ru == ranks.size() || rv == ranks.size())
            throw AlphabetError("letter outside the order's alphabet");
        return ru <=> rv;
    }
    return u.size() <=> v.size();
}

std::strong_ordering compare(const Word& u, const Word& v, const LexOrder& order) {
    for (const Word* w : {&u, &v})
        if (!w->empty() && !same_alphabet(w->alphabet(), order.alphabet()))
            throw AlphabetError("word '" + w->to_string() + "' is not over the order's alphabet");
    return compare(u.letters(), v.letters(), order);
}

std::vector<LexOrder> all_orders(const AlphabetRef& alphabet) {
    const auto letters = alphabet->letters();
    return orders_over(alphabet, letters);
}

std::vector<LexOrder> orders_over(const AlphabetRef& alphabet, std::span<const Letter> letters) {
    std::vector<Letter> head(letters.begin(), letters.end());
    std::sort(head.begin(), head.end());
    head.erase(std::unique(head.begin(), head.end()), head.end());
    std::vector<Letter> tail;
    for (Letter l : alphabet->letters())
        if (!std::binary_search(head.begin(), head.end(), l))
            tail.push_back(l);

    std::vector<LexOrder> out;
    do {
        std::vector<Letter> ascending = head;
        ascending.insert(ascending.end(), tail.begin(), tail.end());
        out.push_back(LexOrder::from_ascending(alphabet, std::move(ascending)));
    } while (std::next_permutation(head.begin(), head.end()));
    return out;
}

} // namespace etk
