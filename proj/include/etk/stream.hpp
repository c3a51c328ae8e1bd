#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "etk/word.hpp"

namespace etk {

enum class StreamKind {
    LiteralThenPeriodic,
    EpisturmianFromDirective,
    MorphicImage,
    Concatenation,
};

std::string to_string(StreamKind kind);

// Generator behind a WordStream. Implementations must be deterministic:
// prefix(n) is always the first n letters of one fixed infinite word.
class StreamSource {
public:
    virtual ~StreamSource() = default;

    virtual StreamKind kind() const = 0;
    virtual const AlphabetRef& alphabet() const = 0;
    virtual Word prefix(std::size_t n) const = 0;
    virtual std::string describe() const = 0;

    // A horizon past which every factor of length k is guaranteed to have
    // occurred, when the source can vouch for one.
    virtual std::optional<std::size_t> exact_horizon(std::size_t /*k*/) const { return std::nullopt; }
};

// Source that memoizes the longest prefix generated so far. Subclasses only
// implement extend(); locking is handled here.
class CachedSource : public StreamSource {
public:
    Word prefix(std::size_t n) const final;

protected:
    // Grow `cache` to at least n letters. Called with the lock held.
    virtual void extend(Word& cache, std::size_t n) const = 0;

private:
    mutable std::mutex mutex_;
    mutable Word cache_;
    mutable bool initialized_ = false;
};

// An infinite word, given as a deterministic prefix generator. Cheap to copy;
// copies share the same source.
class WordStream {
public:
    explicit WordStream(std::shared_ptr<const StreamSource> source);

    // u v^ω. Throws SpecError if v is empty.
    static WordStream literal(Word u, Word v);
    // v · inner.
    static WordStream concatenation(Word v, WordStream inner);

    Word prefix(std::size_t n) const { return source_->prefix(n); }
    StreamKind kind() const { return source_->kind(); }
    const AlphabetRef& alphabet() const { return source_->alphabet(); }
    std::string describe() const { return source_->describe(); }
    std::optional<std::size_t> exact_horizon(std::size_t k) const { return source_->exact_horizon(k); }
    const StreamSource& source() const noexcept { return *source_; }

private:
    std::shared_ptr<const StreamSource> source_;
};

} // namespace etk
