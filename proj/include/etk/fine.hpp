#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "etk/directive.hpp"
#include "etk/lex_order.hpp"
#include "etk/skew.hpp"
#include "etk/stream.hpp"

namespace etk {

enum class Classification { StrictEpisturmian, SkewEpisturmian, NotFine, Unknown };

std::string to_string(Classification c);

// Evidence that no common s exists: under `order`, min(t|k) is `found`
// while the common-word candidate requires `required` = least·s_{k-1}.
struct FinenessWitness {
    LexOrder order;
    std::size_t k = 0;
    Word required;
    Word found;
};

struct FinenessVerdict {
    Classification classification = Classification::Unknown;
    std::vector<Letter> strict_over;   // B: Alph(t) when strict, alphabet minus x when skew
    std::optional<SkewSpec> skew;      // for SkewEpisturmian when a form is known
    Word s_prefix;                     // common s, |s_prefix| = depth - 1
    std::optional<FinenessWitness> witness;
    std::size_t depth = 0;
    std::size_t horizon = 0;

    bool fine() const noexcept {
        return classification == Classification::StrictEpisturmian ||
               classification == Classification::SkewEpisturmian;
    }
};

// For every order on Alph(t), compares min(t|k), k <= depth, against
// least·s_{k-1} for one common s. Fine verdicts are split into strict and
// skew by whether t and s share their short factors; skew verdicts carry a
// reconstructed form when one can be recovered. Requires horizon >= 2·depth.
FinenessVerdict is_fine_empirical(const WordStream& t, std::size_t depth, std::size_t horizon);

// A word given by construction rather than as a black box.
struct LiteralSpec {
    Word prefix;
    Word period;
};
using StructuredWord = std::variant<DirectiveWord, SkewSpec, LiteralSpec>;

WordStream realize(const StructuredWord& spec);

// Decides fineness from the structure, then cross-checks against
// is_fine_empirical at the same depth. Throws ConsistencyError if the two
// disagree and SpecError if a skew spec is invalid. horizon == 0 picks one.
FinenessVerdict classify(const StructuredWord& spec, std::size_t depth, std::size_t horizon = 0);

// The common word s to the given depth, or nullopt if t is not fine up to
// depth. Over two letters also requires max(t|k) = b·s_{k-1}.
std::optional<Word> common_s(const WordStream& t, std::size_t depth, std::size_t horizon);

// Evaluates both sides of the transfer min(t1) = a·s1 ⇔ min(Ψ_z t1) = [z]a·Ψ_z(s1)
// for every order on Alph(t1) ∪ {z} in which a is the least letter of
// Alph(t1); the z-prefix is present exactly when z < a. True when the two
// sides agree for every such order.
bool verify_lemma_transfer(const WordStream& t1, const WordStream& s1, Letter z, Letter a, std::size_t depth,
                           std::size_t horizon);

} // namespace etk
