#include "genlab/reduction.hpp"

#include "genlab/errors.hpp"

namespace genlab {

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::Plain: return "plain";
        case ReductionKind::CS: return "CS";
        case ReductionKind::CM: return "CM";
        case ReductionKind::Composite: return "composite";
        case ReductionKind::WeakGP: return "weak-GP";
    }
    return "?";
}

Reduction::Reduction(Alphabet source, Alphabet target, Map map, Declaration decl)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)), decl_(std::move(decl)) {}

Word Reduction::apply(const Word& x) const {
    if (!(x.alphabet() == source_)) throw AlphabetMismatch("reduction '" + decl_.name + "' applied to a foreign word");
    Word y = map_(x);
    if (!(y.alphabet() == target_)) throw Error("reduction '" + decl_.name + "' produced a word off its target alphabet");
    return y;
}

std::uint64_t Reduction::size_growth(std::uint64_t n) const {
    if (!decl_.size_growth) throw DomainError("reduction '" + decl_.name + "' declares no size growth");
    return (*decl_.size_growth)(n);
}

std::optional<std::uint64_t> Reduction::source_size_for(std::uint64_t m) const {
    // S_f is strictly increasing, so S_f(k) >= k + S_f(0) and k <= m suffices.
    for (std::uint64_t k = 0; k <= m; ++k) {
        const auto s = size_growth(k);
        if (s == m) return k;
        if (s > m) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace genlab
