#include "etk/word.hpp"

#include <algorithm>

#include "etk/error.hpp"

namespace etk {

namespace {

void check_letters(const AlphabetRef& alphabet, std::span<const Letter> letters) {
    if (!alphabet) {
        if (!letters.empty())
            throw AlphabetError("word has letters but no alphabet");
        return;
    }
    for (Letter l : letters)
        if (!alphabet->contains(l))
            throw AlphabetError("letter index " + std::to_string(index_of(l)) + " outside alphabet {" +
                                alphabet->to_string() + "}");
}

} // namespace

Word::Word(AlphabetRef alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    check_letters(alphabet_, letters_);
}

Word::Word(AlphabetRef alphabet, std::span<const Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(letters.begin(), letters.end()) {
    check_letters(alphabet_, letters_);
}

Word Word::parse(const AlphabetRef& alphabet, std::string_view text) {
    if (!alphabet)
        throw AlphabetError("cannot parse a word without an alphabet");
    Word w(alphabet);
    if (text.empty() || text == "ε")
        return w;
    if (text.find(',') != std::string_view::npos || !alphabet->single_code_point()) {
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            w.letters_.push_back(alphabet->at(text.substr(start, comma - start)));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
    } else {
        for (const auto& cp : split_code_points(text))
            w.letters_.push_back(alphabet->at(cp));
    }
    return w;
}

void Word::push_back(Letter l) {
    if (!alphabet_ || !alphabet_->contains(l))
        throw AlphabetError("letter outside the word's alphabet");
    letters_.push_back(l);
}

void Word::append(const Word& other) {
    if (other.empty())
        return;
    if (!alphabet_)
        alphabet_ = other.alphabet_;
    else
        require_same_alphabet(*this, other);
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

void Word::append(std::span<const Letter> other) {
    check_letters(alphabet_, other);
    const Letter* base = letters_.data();
    if (!other.empty() && other.data() >= base && other.data() < base + letters_.size()) {
        const std::vector<Letter> copy(other.begin(), other.end());
        letters_.insert(letters_.end(), copy.begin(), copy.end());
        return;
    }
    letters_.insert(letters_.end(), other.begin(), other.end());
}

void Word::truncate(std::size_t n) {
    if (n < letters_.size())
        letters_.resize(n);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    Word out(alphabet_);
    if (pos >= letters_.size())
        return out;
    len = std::min(len, letters_.size() - pos);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
}

Word Word::prefix(std::size_t n) const { return subword(0, n); }

Word Word::suffix(std::size_t n) const {
    n = std::min(n, letters_.size());
    return subword(letters_.size() - n, n);
}

bool Word::starts_with(const Word& p) const noexcept {
    return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const noexcept {
    return s.size() <= size() && std::equal(s.begin(), s.end(), end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::size_t Word::count(Letter l) const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
}

std::string Word::to_string() const {
    if (letters_.empty() || !alphabet_)
        return {};
    const bool contiguous = alphabet_->single_code_point();
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i && !contiguous)
            out += ',';
        out += alphabet_->symbol(letters_[i]);
    }
    return out;
}

bool operator==(const Word& a, const Word& b) noexcept {
    if (a.letters_ != b.letters_)
        return false;
    // Empty words are equal regardless of alphabet binding.
    return a.letters_.empty() || same_alphabet(a.alphabet_, b.alphabet_);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Word reversal(const Word& w) {
    std::vector<Letter> r(w.begin(), w.end());
    std::reverse(r.begin(), r.end());
    return Word(w.alphabet(), std::move(r));
}

bool is_palindrome(std::span<const Letter> w) noexcept {
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (w[i] != w[j - 1])
            return false;
    return true;
}

std::vector<Letter> letters_of(std::span<const Letter> w) {
    std::vector<bool> seen(Alphabet::max_size + 1, false);
    for (Letter l : w)
        seen[index_of(l)] = true;
    std::vector<Letter> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i])
            out.push_back(letter_at(i));
    return out;
}

void require_same_alphabet(const Word& a, const Word& b) {
    if (a.empty() && !a.alphabet())
        return;
    if (b.empty() && !b.alphabet())
        return;
    if (!same_alphabet(a.alphabet(), b.alphabet()))
        throw AlphabetError("words over different alphabets");
}

} // namespace etk
