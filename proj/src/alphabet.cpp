#include "etk/alphabet.hpp"

#include "etk/error.hpp"

namespace etk {

std::vector<std::string> split_code_points(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 1;
        if ((lead & 0xE0) == 0xC0)
            len = 2;
        else if ((lead & 0xF0) == 0xE0)
            len = 3;
        else if ((lead & 0xF8) == 0xF0)
            len = 4;
        if (i + len > text.size())
            len = 1;
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw AlphabetError("alphabet must have at least one letter");
    if (symbols_.size() > max_size)
        throw AlphabetError("alphabet has more than " + std::to_string(max_size) + " letters");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.empty())
            throw AlphabetError("empty symbol in alphabet");
        for (char c : s)
            if (c == ',' || c == '(' || c == ')' || c == '<' || c == '\'' || c == ' ')
                throw AlphabetError("symbol '" + s + "' contains a reserved character");
        if (!lookup_.emplace(s, letter_at(i)).second)
            throw AlphabetError("duplicate symbol '" + s + "' in alphabet");
        if (split_code_points(s).size() != 1)
            single_code_point_ = false;
    }
}

AlphabetRef Alphabet::make(std::vector<std::string> symbols) {
    return AlphabetRef(new Alphabet(std::move(symbols)));
}

AlphabetRef Alphabet::parse(std::string_view text) {
    std::vector<std::string> symbols;
    if (text.find(',') == std::string_view::npos) {
        symbols = split_code_points(text);
    } else {
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            symbols.emplace_back(text.substr(start, comma - start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
    }
    return make(std::move(symbols));
}

const std::string& Alphabet::symbol(Letter l) const {
    if (!contains(l))
        throw AlphabetError("letter index " + std::to_string(index_of(l)) + " outside alphabet");
    return symbols_[index_of(l)];
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
    const auto it = lookup_.find(std::string(symbol));
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

Letter Alphabet::at(std::string_view symbol) const {
    if (auto l = find(symbol))
        return *l;
    throw AlphabetError("symbol '" + std::string(symbol) + "' not in alphabet {" + to_string() + "}");
}

std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back(letter_at(i));
    return out;
}

std::string Alphabet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i)
            out += ',';
        out += symbols_[i];
    }
    return out;
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) noexcept {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

} // namespace etk
