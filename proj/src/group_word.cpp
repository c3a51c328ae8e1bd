#include "etk/group_word.hpp"

#include <algorithm>
#include <cctype>

#include "etk/error.hpp"

namespace etk {

GroupWord::GroupWord(AlphabetRef alphabet, std::span<const Syllable> syllables) : alphabet_(std::move(alphabet)) {
    for (const Syllable& s : syllables)
        append(s);
}

GroupWord::GroupWord(const Word& w) : alphabet_(w.alphabet()) {
    syllables_.reserve(w.size());
    for (Letter l : w)
        syllables_.push_back({l, false});
}

GroupWord GroupWord::parse(const AlphabetRef& alphabet, std::string_view text) {
    GroupWord g(alphabet);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        std::string_view token = text.substr(i, j - i);
        bool inverse = false;
        if (token.ends_with('\'')) {
            inverse = true;
            token.remove_suffix(1);
        }
        if (token == "ε" && !inverse) {
            i = j;
            continue;
        }
        const auto l = alphabet->find(token);
        if (!l)
            throw ParseError("unknown letter '" + std::string(token) + "' in group word", i);
        g.append(Syllable{*l, inverse});
        i = j;
    }
    return g;
}

bool GroupWord::is_positive() const noexcept {
    return std::none_of(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.inverse; });
}

std::optional<Word> GroupWord::to_word() const {
    if (!is_positive())
        return std::nullopt;
    std::vector<Letter> letters;
    letters.reserve(syllables_.size());
    for (const Syllable& s : syllables_)
        letters.push_back(s.letter);
    return Word(alphabet_, std::move(letters));
}

void GroupWord::append(Syllable s) {
    if (alphabet_ && !alphabet_->contains(s.letter))
        throw AlphabetError("syllable letter outside alphabet");
    if (!syllables_.empty() && syllables_.back() == inverse_of(s))
        syllables_.pop_back();
    else
        syllables_.push_back(s);
}

void GroupWord::append(const GroupWord& g) {
    if (!alphabet_)
        alphabet_ = g.alphabet_;
    else if (g.alphabet_ && !same_alphabet(alphabet_, g.alphabet_))
        throw AlphabetError("group words over different alphabets");
    for (const Syllable& s : g.syllables_)
        append(s);
}

GroupWord GroupWord::inverse() const {
    GroupWord out(alphabet_);
    out.syllables_.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        out.syllables_.push_back(inverse_of(*it));
    return out;
}

std::string GroupWord::to_string() const {
    if (syllables_.empty())
        return "ε";
    std::string out;
    for (std::size_t i = 0; i < syllables_.size(); ++i) {
        if (i)
            out += ' ';
        out += alphabet_->symbol(syllables_[i].letter);
        if (syllables_[i].inverse)
            out += '\'';
    }
    return out;
}

GroupWord reduce(const AlphabetRef& alphabet, std::span<const Syllable> syllables) {
    return GroupWord(alphabet, syllables);
}

} // namespace etk
