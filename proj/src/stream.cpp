#include "etk/stream.hpp"

#include "etk/directive.hpp"
#include "etk/error.hpp"

namespace etk {

std::string to_string(StreamKind kind) {
    switch (kind) {
    case StreamKind::LiteralThenPeriodic: return "LiteralThenPeriodic";
    case StreamKind::EpisturmianFromDirective: return "EpisturmianFromDirective";
    case StreamKind::MorphicImage: return "MorphicImage";
    case StreamKind::Concatenation: return "Concatenation";
    }
    return "?";
}

Word CachedSource::prefix(std::size_t n) const {
    std::lock_guard lock(mutex_);
    if (!initialized_) {
        cache_ = Word(alphabet());
        initialized_ = true;
    }
    if (cache_.size() < n)
        extend(cache_, n);
    return cache_.prefix(n);
}

namespace {

class LiteralSource final : public CachedSource {
public:
    LiteralSource(Word u, Word v) : u_(std::move(u)), v_(std::move(v)) {}

    StreamKind kind() const override { return StreamKind::LiteralThenPeriodic; }
    const AlphabetRef& alphabet() const override { return v_.alphabet(); }
    std::string describe() const override { return format_ultimately_periodic(u_, v_); }

protected:
    void extend(Word& cache, std::size_t n) const override {
        if (cache.empty())
            cache.append(u_);
        while (cache.size() < n)
            cache.append(v_);
    }

private:
    Word u_;
    Word v_;
};

class ConcatenationSource final : public StreamSource {
public:
    ConcatenationSource(Word head, WordStream inner) : head_(std::move(head)), inner_(std::move(inner)) {}

    StreamKind kind() const override { return StreamKind::Concatenation; }
    const AlphabetRef& alphabet() const override { return inner_.alphabet(); }
    std::string describe() const override { return head_.to_string() + "·[" + inner_.describe() + "]"; }

    Word prefix(std::size_t n) const override {
        if (n <= head_.size())
            return head_.prefix(n);
        Word out = head_;
        out.append(inner_.prefix(n - head_.size()));
        return out;
    }

private:
    Word head_;
    WordStream inner_;
};

} // namespace

WordStream::WordStream(std::shared_ptr<const StreamSource> source) : source_(std::move(source)) {
    if (!source_)
        throw SpecError("stream without a source");
}

WordStream WordStream::literal(Word u, Word v) {
    if (v.empty())
        throw SpecError("periodic part of a literal stream must be non-empty");
    require_same_alphabet(u, v);
    if (u.empty())
        u = Word(v.alphabet());
    return WordStream(std::make_shared<LiteralSource>(std::move(u), std::move(v)));
}

WordStream WordStream::concatenation(Word v, WordStream inner) {
    if (v.empty())
        v = Word(inner.alphabet());
    else if (!same_alphabet(v.alphabet(), inner.alphabet()))
        throw AlphabetError("concatenation of words over different alphabets");
    return WordStream(std::make_shared<ConcatenationSource>(std::move(v), std::move(inner)));
}

} // namespace etk
