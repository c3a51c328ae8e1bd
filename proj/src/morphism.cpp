#include "etk/morphism.hpp"

#include <algorithm>

#include "etk/error.hpp"

namespace etk {

namespace {

Word psi_image(Letter a, std::span<const Letter> w, const AlphabetRef& alphabet) {
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (Letter x : w) {
        if (x != a)
            out.push_back(a);
        out.push_back(x);
    }
    return Word(alphabet, std::move(out));
}

class MorphicSource final : public CachedSource {
public:
    MorphicSource(PureEpistandardMorphism mu, WordStream inner) : mu_(std::move(mu)), inner_(std::move(inner)) {}

    StreamKind kind() const override { return StreamKind::MorphicImage; }
    const AlphabetRef& alphabet() const override { return inner_.alphabet(); }
    std::string describe() const override { return mu_.to_string() + "[" + inner_.describe() + "]"; }

protected:
    void extend(Word& cache, std::size_t n) const override {
        // The morphism is non-erasing, so n inner letters always suffice.
        const Word inner = inner_.prefix(std::max(n, consumed_ + 1));
        while (cache.size() < n && consumed_ < inner.size())
            cache.append(mu_.image(inner[consumed_++]));
    }

private:
    PureEpistandardMorphism mu_;
    WordStream inner_;
    mutable std::size_t consumed_ = 0;
};

void require_letter(const AlphabetRef& alphabet, Letter a) {
    if (!alphabet || !alphabet->contains(a))
        throw AlphabetError("letter outside the morphism's alphabet");
}

} // namespace

PureEpistandardMorphism::PureEpistandardMorphism(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {
    build_images();
}

PureEpistandardMorphism::PureEpistandardMorphism(AlphabetRef alphabet, std::vector<Letter> generators)
    : alphabet_(std::move(alphabet)), generators_(std::move(generators)) {
    for (Letter z : generators_)
        require_letter(alphabet_, z);
    build_images();
}

void PureEpistandardMorphism::build_images() {
    if (!alphabet_)
        throw AlphabetError("morphism needs an alphabet");
    images_.clear();
    for (Letter c : alphabet_->letters()) {
        Word img(alphabet_, std::vector<Letter>{c});
        for (auto it = generators_.rbegin(); it != generators_.rend(); ++it)
            img = psi_image(*it, img.letters(), alphabet_);
        images_.push_back(std::move(img));
    }
}

PureEpistandardMorphism PureEpistandardMorphism::parse(const AlphabetRef& alphabet, std::string_view text) {
    const auto trimmed_start = text.find_first_not_of(' ');
    if (trimmed_start == std::string_view::npos)
        return identity(alphabet);
    text.remove_prefix(trimmed_start);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text == "id" || text == "Id" || text == "ε")
        return identity(alphabet);

    std::vector<Letter> generators;
    for (std::string_view compact : {std::string_view("Ψ:"), std::string_view("psi:"), std::string_view("Psi:")}) {
        if (text.starts_with(compact)) {
            const auto body = text.substr(compact.size());
            const Word w = Word::parse(alphabet, body);
            return PureEpistandardMorphism(alphabet, std::vector<Letter>(w.begin(), w.end()));
        }
    }

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::string_view rest = text.substr(pos);
        std::size_t head = 0;
        if (rest.starts_with("psi("))
            head = 4;
        else if (rest.starts_with("Ψ("))
            head = std::string_view("Ψ(").size();
        else
            throw ParseError("expected psi(<letter>) in morphism '" + std::string(text) + "'", pos);
        const auto close = rest.find(')', head);
        if (close == std::string_view::npos)
            throw ParseError("unterminated psi( in morphism", pos);
        const auto symbol = rest.substr(head, close - head);
        const auto l = alphabet->find(symbol);
        if (!l)
            throw ParseError("unknown letter '" + std::string(symbol) + "' in morphism", pos + head);
        generators.push_back(*l);
        pos += close + 1;
        if (pos < text.size()) {
            if (text[pos] != '*')
                throw ParseError("expected '*' between generators", pos);
            ++pos;
        }
    }
    return PureEpistandardMorphism(alphabet, std::move(generators));
}

Word PureEpistandardMorphism::apply(std::span<const Letter> w) const {
    Word out(alphabet_);
    for (Letter l : w)
        out.append(images_.at(index_of(l)));
    return out;
}

Word PureEpistandardMorphism::apply(const Word& w) const {
    if (!w.empty() && !same_alphabet(w.alphabet(), alphabet_))
        throw AlphabetError("word and morphism over different alphabets");
    return apply(w.letters());
}

GroupWord PureEpistandardMorphism::apply(const GroupWord& g) const {
    GroupWord out(alphabet_);
    for (const Syllable& s : g.syllables()) {
        const GroupWord img(images_.at(index_of(s.letter)));
        out.append(s.inverse ? img.inverse() : img);
    }
    return out;
}

WordStream PureEpistandardMorphism::apply(const WordStream& s) const {
    if (!same_alphabet(s.alphabet(), alphabet_))
        throw AlphabetError("stream and morphism over different alphabets");
    return WordStream(std::make_shared<MorphicSource>(*this, s));
}

GroupWord PureEpistandardMorphism::apply_inverse(const GroupWord& g) const {
    GroupWord out = g;
    for (Letter z : generators_)
        out = etk::apply_inverse(z, out);
    return out;
}

std::string PureEpistandardMorphism::to_string() const {
    if (generators_.empty())
        return "Id";
    return "Ψ:" + Word(alphabet_, generators_).to_string();
}

PureEpistandardMorphism psi(const AlphabetRef& alphabet, Letter a) {
    return PureEpistandardMorphism(alphabet, std::vector<Letter>{a});
}

PureEpistandardMorphism psi(const AlphabetRef& alphabet, std::string_view symbol) {
    return psi(alphabet, alphabet->at(symbol));
}

PureEpistandardMorphism compose(const PureEpistandardMorphism& mu, const PureEpistandardMorphism& nu) {
    if (!same_alphabet(mu.alphabet(), nu.alphabet()))
        throw AlphabetError("composing morphisms over different alphabets");
    std::vector<Letter> generators(mu.generators().begin(), mu.generators().end());
    generators.insert(generators.end(), nu.generators().begin(), nu.generators().end());
    return PureEpistandardMorphism(mu.alphabet(), std::move(generators));
}

GroupWord apply_inverse(Letter a, const GroupWord& g) {
    require_letter(g.alphabet(), a);
    GroupWord out(g.alphabet());
    for (const Syllable& s : g.syllables()) {
        if (s.letter == a) {
            out.append(s);
        } else if (!s.inverse) {
            out.append(Syllable{a, true});
            out.append(s);
        } else {
            // (a^{-1} x)^{-1} = x^{-1} a
            out.append(s);
            out.append(Syllable{a, false});
        }
    }
    return out;
}

GroupWord apply_inverse(Letter a, const Word& w) { return apply_inverse(a, GroupWord(w)); }

bool is_separating(Letter a, std::span<const Letter> w) noexcept {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] != a && w[i + 1] != a)
            return false;
    return true;
}

Permutation::Permutation(AlphabetRef alphabet) : alphabet_(std::move(alphabet)), images_(alphabet_->letters()) {}

Permutation::Permutation(AlphabetRef alphabet, std::vector<Letter> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_->size())
        throw AlphabetError("permutation must map every letter");
    auto sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != alphabet_->letters())
        throw AlphabetError("permutation images are not a bijection");
}

Word Permutation::apply(const Word& w) const {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w)
        out.push_back((*this)(l));
    return Word(alphabet_, std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<Letter> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[index_of(images_[i])] = letter_at(i);
    return Permutation(alphabet_, std::move(inv));
}

EpistandardMorphism::EpistandardMorphism(const PureEpistandardMorphism& pure) : alphabet_(pure.alphabet()) {
    for (Letter z : pure.generators())
        steps_.push_back({true, z, {}});
}

EpistandardMorphism::EpistandardMorphism(const Permutation& perm) : alphabet_(perm.alphabet()) {
    std::vector<Letter> images;
    for (Letter l : perm.alphabet()->letters())
        images.push_back(perm(l));
    steps_.push_back({false, Letter{}, std::move(images)});
}

EpistandardMorphism EpistandardMorphism::then_after(const EpistandardMorphism& inner) const {
    if (!same_alphabet(alphabet_, inner.alphabet_))
        throw AlphabetError("composing morphisms over different alphabets");
    EpistandardMorphism out;
    out.alphabet_ = alphabet_;
    out.steps_ = steps_;
    out.steps_.insert(out.steps_.end(), inner.steps_.begin(), inner.steps_.end());
    return out;
}

Word EpistandardMorphism::apply(const Word& w) const {
    Word cur = w;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (it->is_psi) {
            cur = psi_image(it->psi_letter, cur.letters(), alphabet_);
        } else {
            std::vector<Letter> next;
            next.reserve(cur.size());
            for (Letter l : cur)
                next.push_back(it->permutation[index_of(l)]);
            cur = Word(alphabet_, std::move(next));
        }
    }
    return cur;
}

bool EpistandardMorphism::is_pure() const noexcept {
    return std::all_of(steps_.begin(), steps_.end(), [](const Step& s) { return s.is_psi; });
}

EpistandardMorphism compose(const Permutation& p, const PureEpistandardMorphism& mu) {
    return EpistandardMorphism(p).then_after(EpistandardMorphism(mu));
}

EpistandardMorphism compose(const PureEpistandardMorphism& mu, const Permutation& p) {
    return EpistandardMorphism(mu).then_after(EpistandardMorphism(p));
}

} // namespace etk
