#include "etk/directive.hpp"

#include "etk/error.hpp"

namespace etk {

DirectiveWord::DirectiveWord(Word preperiod, Word period) : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty())
        throw SpecError("directive word needs a non-empty period");
    if (preperiod_.empty())
        preperiod_ = Word(period_.alphabet());
    else if (!same_alphabet(preperiod_.alphabet(), period_.alphabet()))
        throw SpecError("directive preperiod and period over different alphabets");
}

DirectiveWord DirectiveWord::parse(const AlphabetRef& alphabet, std::string_view text) {
    auto [u, v] = parse_ultimately_periodic(alphabet, text);
    if (v.empty())
        throw ParseError("directive period must be non-empty", text.size());
    return DirectiveWord(std::move(u), std::move(v));
}

Letter DirectiveWord::letter(std::size_t i) const {
    if (i == 0)
        throw LengthError("directive letters are indexed from 1");
    --i;
    if (i < preperiod_.size())
        return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

Word DirectiveWord::prefix(std::size_t n) const {
    Word out(alphabet());
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back(letter(i));
    return out;
}

DirectiveWord DirectiveWord::shift(std::size_t m) const {
    if (m <= preperiod_.size())
        return DirectiveWord(preperiod_.suffix(preperiod_.size() - m), period_);
    const std::size_t r = (m - preperiod_.size()) % period_.size();
    Word rotated = period_.suffix(period_.size() - r);
    rotated.append(period_.prefix(r));
    return DirectiveWord(Word(alphabet()), std::move(rotated));
}

std::vector<Letter> DirectiveWord::alph() const {
    Word all = preperiod_;
    all.append(period_);
    return letters_of(all.letters());
}

std::vector<Letter> DirectiveWord::ult() const { return letters_of(period_.letters()); }

std::string DirectiveWord::to_string() const { return format_ultimately_periodic(preperiod_, period_); }

UltimatelyPeriodicText parse_ultimately_periodic(const AlphabetRef& alphabet, std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos)
        throw ParseError("expected 'u(v)' with a parenthesized period", text.size());
    if (text.empty() || text.back() != ')')
        throw ParseError("expected ')' at end of '" + std::string(text) + "'", text.size());
    const auto inner = text.substr(open + 1, text.size() - open - 2);
    if (inner.find_first_of("()") != std::string_view::npos)
        throw ParseError("nested parentheses", open + 1 + inner.find_first_of("()"));
    auto head = text.substr(0, open);
    if (head.ends_with(','))
        head.remove_suffix(1);
    try {
        return {Word::parse(alphabet, head), Word::parse(alphabet, inner)};
    } catch (const AlphabetError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string format_ultimately_periodic(const Word& prefix, const Word& period) {
    std::string out = prefix.to_string();
    if (!prefix.empty() && prefix.alphabet() && !prefix.alphabet()->single_code_point())
        out += ',';
    return out + "(" + period.to_string() + ")";
}

} // namespace etk
