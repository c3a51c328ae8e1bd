#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etk/group_word.hpp"
#include "etk/stream.hpp"
#include "etk/word.hpp"

namespace etk {

// Ψ_{z1} ∘ Ψ_{z2} ∘ ... ∘ Ψ_{zn}, where Ψ_a fixes a and sends every other
// letter x to ax. The empty generator list is the identity.
class PureEpistandardMorphism {
public:
    PureEpistandardMorphism() = default;
    explicit PureEpistandardMorphism(AlphabetRef alphabet);
    PureEpistandardMorphism(AlphabetRef alphabet, std::vector<Letter> generators);

    static PureEpistandardMorphism identity(AlphabetRef alphabet) {
        return PureEpistandardMorphism(std::move(alphabet));
    }

    // "psi(a)*psi(b)", "Ψ:ab", "psi:ab", or "id"/"Id" for the identity.
    static PureEpistandardMorphism parse(const AlphabetRef& alphabet, std::string_view text);

    const AlphabetRef& alphabet() const noexcept { return alphabet_; }
    std::span<const Letter> generators() const noexcept { return generators_; }
    std::size_t length() const noexcept { return generators_.size(); }
    bool is_identity() const noexcept { return generators_.empty(); }

    const Word& image(Letter l) const { return images_.at(index_of(l)); }

    Word apply(const Word& w) const;
    Word apply(std::span<const Letter> w) const;
    // Extension to the free group: a^{-1} maps to image(a)^{-1}.
    GroupWord apply(const GroupWord& g) const;
    // The image stream; prefix(n) of the result is a prefix of the true image.
    WordStream apply(const WordStream& s) const;

    // Inverse as a free-group automorphism: generator inverses in reverse order.
    GroupWord apply_inverse(const GroupWord& g) const;

    // "Ψ:abc", or "Id" for the identity.
    std::string to_string() const;

    friend bool operator==(const PureEpistandardMorphism& a, const PureEpistandardMorphism& b) noexcept {
        return a.generators_ == b.generators_;
    }

private:
    void build_images();

    AlphabetRef alphabet_;
    std::vector<Letter> generators_;
    std::vector<Word> images_;
};

PureEpistandardMorphism psi(const AlphabetRef& alphabet, Letter a);
PureEpistandardMorphism psi(const AlphabetRef& alphabet, std::string_view symbol);

// μ ∘ ν. Throws AlphabetError on mismatched alphabets.
PureEpistandardMorphism compose(const PureEpistandardMorphism& mu, const PureEpistandardMorphism& nu);

// Ψ_a^{-1} applied syllable-wise, then reduced. Words outside the image of
// Ψ_a come back with negative exponents.
GroupWord apply_inverse(Letter a, const GroupWord& g);
GroupWord apply_inverse(Letter a, const Word& w);

// Every length-2 factor of w contains a. Vacuously true when |w| < 2.
bool is_separating(Letter a, std::span<const Letter> w) noexcept;
inline bool is_separating(Letter a, const Word& w) noexcept { return is_separating(a, w.letters()); }

// A bijection of the alphabet, extended letterwise to words.
class Permutation {
public:
    explicit Permutation(AlphabetRef alphabet);
    Permutation(AlphabetRef alphabet, std::vector<Letter> images);

    const AlphabetRef& alphabet() const noexcept { return alphabet_; }
    Letter operator()(Letter l) const { return images_.at(index_of(l)); }
    Word apply(const Word& w) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
        return a.images_ == b.images_;
    }

private:
    AlphabetRef alphabet_;
    std::vector<Letter> images_;
};

// A general epistandard morphism: a word over {Ψ_a} ∪ permutations, applied
// right to left like ordinary composition.
class EpistandardMorphism {
public:
    explicit EpistandardMorphism(const PureEpistandardMorphism& pure);
    explicit EpistandardMorphism(const Permutation& perm);

    EpistandardMorphism then_after(const EpistandardMorphism& inner) const; // this ∘ inner
    Word apply(const Word& w) const;
    bool is_pure() const noexcept;

private:
    struct Step {
        bool is_psi;
        Letter psi_letter;
        std::vector<Letter> permutation;
    };

    EpistandardMorphism() = default;

    AlphabetRef alphabet_;
    std::vector<Step> steps_; // outermost first
};

EpistandardMorphism compose(const Permutation& p, const PureEpistandardMorphism& mu);
EpistandardMorphism compose(const PureEpistandardMorphism& mu, const Permutation& p);

} // namespace etk
