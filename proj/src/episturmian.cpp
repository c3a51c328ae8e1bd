#include "etk/episturmian.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>

#include "etk/error.hpp"

namespace etk {

namespace {

// Length of the longest palindromic suffix of w: the longest prefix of
// reversal(w) that is also a suffix of w, via the KMP failure function of
// reversal(w) · # · w.
std::size_t longest_palindromic_suffix(std::span<const Letter> w) {
    const std::size_t n = w.size();
    if (n == 0)
        return 0;
    std::vector<int> s;
    s.reserve(2 * n + 1);
    for (std::size_t i = n; i-- > 0;)
        s.push_back(static_cast<int>(index_of(w[i])));
    s.push_back(-1);
    for (Letter l : w)
        s.push_back(static_cast<int>(index_of(l)));
    std::vector<std::size_t> fail(s.size(), 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t k = fail[i - 1];
        while (k > 0 && s[i] != s[k])
            k = fail[k - 1];
        if (s[i] == s[k])
            ++k;
        fail[i] = k;
    }
    return fail.back();
}

// Iterates u_{i+1} = (u_i x_i)^(+) in place. With u_i a palindromic prefix of
// a standard episturmian word, the longest palindromic suffix of u_i x_i is
// x_i u_j x_i for the last j < i with x_j = x_i (or just x_i when x_i is new),
// so the closure appends u_i minus its prefix u_j, or x_i u_i.
class PalindromicPrefixIterator {
public:
    explicit PalindromicPrefixIterator(const DirectiveWord& directive) : directive_(directive) {
        last_.fill(0);
        lengths_.push_back(0);
    }

    // |u_i| for the current i (starting at i = 1).
    std::size_t index() const noexcept { return lengths_.size(); }
    std::size_t length() const noexcept { return lengths_.back(); }
    const std::vector<std::size_t>& lengths() const noexcept { return lengths_; }

    // Advances to u_{i+1}. If `u` is given it holds u_i and is extended to u_{i+1}.
    void step(Word* u) {
        const std::size_t i = index();
        const Letter x = directive_.letter(i);
        const std::size_t cur = lengths_.back();
        const std::size_t j = last_[index_of(x)];
        std::size_t next;
        if (j == 0) {
            next = 2 * cur + 1;
            if (u) {
                u->push_back(x);
                u->append(u->letters().subspan(0, cur));
            }
        } else {
            const std::size_t uj = lengths_[j - 1];
            next = 2 * cur - uj;
            if (u)
                u->append(u->letters().subspan(uj, cur - uj));
        }
        last_[index_of(x)] = i;
        lengths_.push_back(next);
    }

private:
    DirectiveWord directive_;
    std::array<std::size_t, Alphabet::max_size + 1> last_{};
    std::vector<std::size_t> lengths_;
};

class EpisturmianSource final : public CachedSource {
public:
    explicit EpisturmianSource(DirectiveWord directive) : directive_(directive), iterator_(directive) {}

    StreamKind kind() const override { return StreamKind::EpisturmianFromDirective; }
    const AlphabetRef& alphabet() const override { return directive_.alphabet(); }
    std::string describe() const override { return "standard" + directive_.to_string(); }

    std::optional<std::size_t> exact_horizon(std::size_t k) const override {
        std::lock_guard lock(horizon_mutex_);
        auto it = horizons_.find(k);
        if (it == horizons_.end())
            it = horizons_.emplace(k, factor_horizon(directive_, k)).first;
        return it->second;
    }

protected:
    void extend(Word& cache, std::size_t n) const override {
        while (cache.size() < n)
            iterator_.step(&cache);
    }

private:
    DirectiveWord directive_;
    mutable PalindromicPrefixIterator iterator_;
    mutable std::mutex horizon_mutex_;
    mutable std::map<std::size_t, std::size_t> horizons_;
};

std::string bytes_of(std::span<const Letter> w) {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w)
        out.push_back(static_cast<char>(index_of(l)));
    return out;
}

} // namespace

Word palindromic_closure(const Word& w) {
    const std::size_t lps = longest_palindromic_suffix(w.letters());
    Word out = w;
    const auto head = w.letters().subspan(0, w.size() - lps);
    for (auto it = head.rbegin(); it != head.rend(); ++it)
        out.push_back(*it);
    return out;
}

std::vector<Word> palindromic_prefixes(const DirectiveWord& directive, std::size_t n) {
    if (n == 0)
        throw LengthError("palindromic_prefixes: n must be at least 1");
    std::vector<Word> out;
    out.reserve(n);
    out.emplace_back(directive.alphabet());
    for (std::size_t i = 1; i < n; ++i) {
        Word next = out.back();
        next.push_back(directive.letter(i));
        out.push_back(palindromic_closure(next));
    }
    return out;
}

WordStream standard_word(const DirectiveWord& directive) {
    return WordStream(std::make_shared<EpisturmianSource>(directive));
}

std::vector<std::size_t> palindromic_prefix_lengths(const DirectiveWord& directive, std::size_t min_length) {
    PalindromicPrefixIterator it(directive);
    while (it.length() < min_length)
        it.step(nullptr);
    return it.lengths();
}

std::vector<Word> factors_of_length(const DirectiveWord& directive, std::size_t k) {
    const AlphabetRef& alphabet = directive.alphabet();
    if (k == 0)
        return {Word(alphabet)};
    const StrictnessReport r = strictness(directive);
    std::vector<Word> images;
    for (Letter l : alphabet->letters())
        images.push_back(Word(alphabet, std::vector<Letter>{l}));
    std::size_t n = 0;
    auto advance = [&] {
        const Letter x = directive.letter(++n);
        for (Letter y : alphabet->letters())
            if (y != x)
                images[index_of(y)] = images[index_of(x)] + images[index_of(y)];
    };
    while (n < r.m)
        advance();

    std::set<Word> found;
    auto collect = [&](const Word& text) {
        for (std::size_t p = 0; p + k <= text.size(); ++p)
            found.insert(text.subword(p, k));
    };
    if (r.ult.size() == 1) {
        // s = μ_m(y)^ω.
        const Word& period = images[index_of(r.ult.front())];
        Word text(alphabet);
        while (text.size() < period.size() + k)
            text.append(period);
        collect(text);
    } else {
        auto shortest = [&] {
            std::size_t len = images[index_of(r.ult.front())].size();
            for (Letter y : r.ult)
                len = std::min(len, images[index_of(y)].size());
            return len;
        };
        while (shortest() + 1 < k)
            advance();
        // Length-2 factors of s^(n) = Ψ_y0(s^(n+1)), Alph(s^(n+1)) = Ult.
        const Letter y0 = directive.letter(n + 1);
        for (Letter z : r.ult) {
            collect(images[index_of(y0)] + images[index_of(z)]);
            if (z != y0)
                collect(images[index_of(z)] + images[index_of(y0)]);
        }
    }
    return {found.begin(), found.end()};
}

std::size_t factor_horizon(const DirectiveWord& directive, std::size_t k) {
    if (k == 0)
        return 0;
    std::vector<std::string> storage;
    for (const Word& f : factors_of_length(directive, k))
        storage.push_back(bytes_of(f.letters()));
    const std::unordered_set<std::string_view> wanted(storage.begin(), storage.end());
    const WordStream s = standard_word(directive);
    for (std::size_t len = std::max<std::size_t>(4 * k, 64);; len *= 2) {
        if (len > (std::size_t{1} << 30))
            throw ConsistencyError("factors of length " + std::to_string(k) + " of " + directive.to_string() +
                                   " not found in any scanned prefix");
        const std::string text = bytes_of(s.prefix(len).letters());
        const std::string_view view(text);
        std::unordered_set<std::string_view> seen;
        for (std::size_t p = 0; p + k <= view.size(); ++p) {
            const std::string_view w = view.substr(p, k);
            if (wanted.count(w) && seen.insert(w).second && seen.size() == wanted.size())
                return p + k;
        }
    }
}

PureEpistandardMorphism mu(const DirectiveWord& directive, std::size_t n) {
    const Word gens = directive.prefix(n);
    return PureEpistandardMorphism(directive.alphabet(), std::vector<Letter>(gens.begin(), gens.end()));
}

Word h_word(const DirectiveWord& directive, std::size_t n) {
    return mu(directive, n).image(directive.letter(n + 1));
}

StrictnessReport strictness(const DirectiveWord& directive) {
    StrictnessReport r;
    r.alph = directive.alph();
    r.ult = directive.ult();
    if (r.alph == r.ult) {
        r.strict_over = r.ult;
        r.m = 0;
        return r;
    }
    const Word& pre = directive.preperiod();
    for (std::size_t i = pre.size(); i-- > 0;) {
        if (!std::binary_search(r.ult.begin(), r.ult.end(), pre[i])) {
            r.m = i + 1;
            break;
        }
    }
    return r;
}

Decomposition decompose_nonstrict(const DirectiveWord& directive) {
    const StrictnessReport r = strictness(directive);
    if (r.strict())
        throw NothingToDecompose("directive " + directive.to_string() + " is already strict");
    return Decomposition{mu(directive, r.m), directive.shift(r.m), r.m};
}

ShiftChainRecord shift_chain(const DirectiveWord& directive, std::size_t i, std::size_t horizon) {
    if (i == 0)
        throw LengthError("shift_chain: i must be at least 1");
    const Letter x = directive.letter(i);
    ShiftChainRecord rec{i, x, {}, {}};
    rec.image_prefix = psi(directive.alphabet(), x).apply(standard_word(directive.shift(i))).prefix(horizon);
    rec.target_prefix = standard_word(directive.shift(i - 1)).prefix(horizon);
    if (rec.image_prefix != rec.target_prefix)
        throw ConsistencyError("shift chain broken at i = " + std::to_string(i) + " for directive " +
                               directive.to_string());
    return rec;
}

std::optional<std::vector<Letter>> directive_letters_of(const Word& w) {
    std::vector<Letter> letters;
    if (w.empty())
        return letters;
    Word u(w.alphabet());
    std::array<std::size_t, Alphabet::max_size + 1> last{};
    std::vector<std::size_t> lengths{0};
    while (u.size() < w.size()) {
        const Letter x = w[u.size()];
        const std::size_t i = lengths.size();
        const std::size_t cur = u.size();
        const std::size_t j = last[index_of(x)];
        if (j == 0) {
            u.push_back(x);
            u.append(u.letters().subspan(0, cur));
        } else {
            const std::size_t uj = lengths[j - 1];
            u.append(u.letters().subspan(uj, cur - uj));
        }
        last[index_of(x)] = i;
        lengths.push_back(u.size());
        letters.push_back(x);
        const std::size_t overlap = std::min(u.size(), w.size());
        if (!std::equal(u.begin() + static_cast<std::ptrdiff_t>(cur), u.begin() + static_cast<std::ptrdiff_t>(overlap),
                        w.begin() + static_cast<std::ptrdiff_t>(cur)))
            return std::nullopt;
    }
    return letters;
}

std::vector<DirectiveWord> fit_directive(const AlphabetRef& alphabet, std::span<const Letter> observed,
                                         std::span<const Letter> period_alphabet) {
    std::vector<Letter> wanted(period_alphabet.begin(), period_alphabet.end());
    std::sort(wanted.begin(), wanted.end());
    std::vector<DirectiveWord> out;
    const std::size_t n = observed.size();
    for (std::size_t total = 1; total <= std::min(n, max_fit_length); ++total) {
        for (std::size_t per = 1; per <= total; ++per) {
            const std::size_t pre = total - per;
            bool ok = true;
            for (std::size_t i = pre + per; i < n && ok; ++i)
                ok = observed[i] == observed[pre + (i - pre) % per];
            if (!ok)
                continue;
            const auto period = observed.subspan(pre, per);
            if (!wanted.empty() && letters_of(period) != wanted)
                continue;
            out.emplace_back(Word(alphabet, observed.subspan(0, pre)), Word(alphabet, period));
        }
    }
    return out;
}

} // namespace etk
