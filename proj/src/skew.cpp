#include "etk/skew.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "etk/episturmian.hpp"
#include "etk/error.hpp"

namespace etk {

namespace {

std::vector<Letter> complement_of(const AlphabetRef& alphabet, Letter x) {
    std::vector<Letter> out;
    for (Letter l : alphabet->letters())
        if (l != x)
            out.push_back(l);
    return out;
}

Word reversed_prefix(const DirectiveWord& directive, std::size_t p) {
    return reversal(standard_word(directive).prefix(p));
}

std::optional<Letter> separating_letter(const Word& w) {
    for (Letter l : letters_of(w.letters()))
        if (is_separating(l, w))
            return l;
    return std::nullopt;
}

// The one-occurrence form u·x·rest with u the reversed prefix of rest.
struct Terminal {
    Letter x;
    std::size_t p;
    std::vector<DirectiveWord> candidates;
};

std::optional<Terminal> terminal_form(const Word& w) {
    const AlphabetRef& alphabet = w.alphabet();
    for (Letter x : letters_of(w.letters())) {
        if (w.count(x) != 1)
            continue;
        const std::size_t i = static_cast<std::size_t>(std::find(w.begin(), w.end(), x) - w.begin());
        const Word rest = w.suffix(w.size() - i - 1);
        if (rest.size() < i)
            continue;
        if (w.prefix(i) != reversal(rest.prefix(i)))
            continue;
        const auto observed = directive_letters_of(rest);
        if (!observed)
            continue;
        const std::vector<Letter> b = complement_of(alphabet, x);
        if (b.empty())
            continue;
        auto candidates = fit_directive(alphabet, *observed, b);
        std::erase_if(candidates, [&](const DirectiveWord& d) {
            return d.preperiod().size() + 2 * d.period().size() > observed->size();
        });
        if (candidates.empty())
            continue;
        return Terminal{x, i, std::move(candidates)};
    }
    return std::nullopt;
}

struct Peel {
    Letter z;
    bool prepended;
};

} // namespace

Word skew_block(const SkewSpec& spec) {
    Word w = reversed_prefix(spec.directive, spec.p);
    w.push_back(spec.x);
    return spec.mu.apply(w);
}

Word skew_prefix(const SkewSpec& spec) {
    const Word block = skew_block(spec);
    if (spec.suffix_len > block.size())
        throw SpecError("suffix length " + std::to_string(spec.suffix_len) + " exceeds block length " +
                        std::to_string(block.size()));
    return block.suffix(spec.suffix_len);
}

void validate(const SkewSpec& spec) {
    const AlphabetRef& alphabet = spec.alphabet();
    if (!alphabet->contains(spec.x))
        throw SpecError("skew letter is not in the alphabet");
    if (spec.mu.alphabet() && !same_alphabet(spec.mu.alphabet(), alphabet))
        throw SpecError("morphism and directive use different alphabets");
    const std::vector<Letter> b = complement_of(alphabet, spec.x);
    if (b.empty())
        throw SpecError("a skew word needs at least two letters");
    const StrictnessReport r = strictness(spec.directive);
    if (!r.strict() || *r.strict_over != b)
        throw SpecError("directive " + spec.directive.to_string() + " is not strict over the alphabet minus " +
                        alphabet->symbol(spec.x));
    if (spec.suffix_len == 0)
        throw SpecError("suffix length must be at least 1");
    const std::size_t block = skew_block(spec).size();
    if (spec.suffix_len > block)
        throw SpecError("suffix length " + std::to_string(spec.suffix_len) + " exceeds block length " +
                        std::to_string(block));
}

SkewSpec canonical(const SkewSpec& spec) {
    validate(spec);
    SkewSpec out = spec;
    for (std::size_t p = 0; p < spec.p; ++p) {
        out.p = p;
        if (skew_block(out).size() >= spec.suffix_len)
            return out;
    }
    out.p = spec.p;
    return out;
}

WordStream construct_skew(const SkewSpec& spec) {
    validate(spec);
    return WordStream::concatenation(skew_prefix(spec), spec.mu.apply(standard_word(spec.directive)));
}

SkewSpec reconstruct_skew(const WordStream& t, std::size_t depth, std::size_t horizon) {
    const AlphabetRef& alphabet = t.alphabet();
    horizon = std::max(horizon, depth);
    const Word target = t.prefix(horizon);
    Word w = t.prefix(8 * horizon);
    std::vector<Peel> peels;

    while (true) {
        if (auto term = terminal_form(w)) {
            for (const DirectiveWord& directive : term->candidates) {
                SkewSpec spec{directive, term->x, term->p, PureEpistandardMorphism::identity(alphabet), term->p + 1};
                bool ok = true;
                for (auto it = peels.rbegin(); it != peels.rend() && ok; ++it) {
                    Word v = skew_prefix(spec);
                    std::vector<Letter> gens{it->z};
                    gens.insert(gens.end(), spec.mu.generators().begin(), spec.mu.generators().end());
                    spec.mu = PureEpistandardMorphism(alphabet, std::move(gens));
                    spec.suffix_len = psi(alphabet, it->z).apply(v).size();
                    if (it->prepended) {
                        if (spec.suffix_len <= 1)
                            ok = false;
                        else
                            --spec.suffix_len;
                    }
                }
                if (!ok)
                    continue;
                try {
                    spec = canonical(spec);
                    if (construct_skew(spec).prefix(horizon) == target)
                        return spec;
                } catch (const SpecError&) {
                }
            }
        }
        if (w.size() < 2 * depth || w.size() < 4)
            throw NotSkewForm("peeling ran out of letters before reaching the one-occurrence form");
        const auto z = separating_letter(w);
        if (!z)
            throw NotSkewForm("no separating letter at peel level " + std::to_string(peels.size()));
        const bool prepend = w.front() != *z;
        if (prepend) {
            Word lead(alphabet);
            lead.push_back(*z);
            w = lead + w;
        }
        const bool ends_in_z = w.back() == *z;
        auto peeled = apply_inverse(*z, w).to_word();
        if (!peeled)
            throw NotSkewForm("word is not in the image of the separating generator");
        w = std::move(*peeled);
        if (ends_in_z)
            w.truncate(w.size() - 1);
        peels.push_back({*z, prepend});
    }
}

SkewSpec parse_skew_spec(const AlphabetRef& alphabet, std::string_view text) {
    std::map<std::string, std::pair<std::string, std::size_t>> fields;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size())
            break;
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        const std::string_view token = text.substr(start, pos - start);
        if (first && token == "skew") {
            first = false;
            continue;
        }
        first = false;
        const auto eq = token.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected key=value in skew spec, got '" + std::string(token) + "'", start);
        std::string key(token.substr(0, eq));
        if (key != "v" && key != "x" && key != "p" && key != "mu" && key != "suffix")
            throw ParseError("unknown skew spec key '" + key + "'", start);
        if (fields.count(key))
            throw ParseError("duplicate skew spec key '" + key + "'", start);
        fields[key] = {std::string(token.substr(eq + 1)), start + eq + 1};
    }
    for (const char* required : {"v", "x"})
        if (!fields.count(required))
            throw ParseError(std::string("skew spec is missing ") + required + "=", text.size());

    auto number = [&](const std::string& key) -> std::size_t {
        const auto& [value, at] = fields.at(key);
        std::size_t n = 0;
        const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || end != value.data() + value.size())
            throw ParseError("expected a number for " + key + "=", at);
        return n;
    };

    const auto& [xtext, xat] = fields.at("x");
    const auto x = alphabet->find(xtext);
    if (!x)
        throw ParseError("unknown letter '" + xtext + "' for x=", xat);
    SkewSpec spec{DirectiveWord::parse(alphabet, fields.at("v").first), *x, 0,
                  PureEpistandardMorphism::identity(alphabet), 0};
    if (fields.count("p"))
        spec.p = number("p");
    if (fields.count("mu"))
        spec.mu = PureEpistandardMorphism::parse(alphabet, fields.at("mu").first);
    if (!fields.count("suffix") || fields.at("suffix").first == "full")
        spec.suffix_len = skew_block(spec).size();
    else
        spec.suffix_len = number("suffix");
    return spec;
}

std::string format_skew_spec(const SkewSpec& spec) {
    const std::size_t block = skew_block(spec).size();
    return "skew v=" + spec.directive.to_string() + " x=" + spec.alphabet()->symbol(spec.x) +
           " p=" + std::to_string(spec.p) + " mu=" + spec.mu.to_string() +
           " suffix=" + (spec.suffix_len == block ? std::string("full") : std::to_string(spec.suffix_len));
}

} // namespace etk
