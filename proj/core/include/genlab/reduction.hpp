#pragma once

#include "genlab/polynomial.hpp"
#include "genlab/words.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace genlab {

/// Claimed kind of a reduction. Claims are checked by the verifiers in
/// reductions.hpp; `WeakGP` is a tag only (nothing finite can verify it).
enum class ReductionKind : std::uint8_t { Plain, CS, CM, Composite, WeakGP };

std::string to_string(ReductionKind k);

/// A total word map Σ* → Π* with its declared size growth S_f, a polynomial
/// envelope of S_f, a declared time bound T_f and an optional density
/// polynomial d for change-of-measure claims.
class Reduction {
public:
    using Map = std::function<Word(const Word&)>;
    using SizeGrowth = std::function<std::uint64_t(std::uint64_t)>;

    struct Declaration {
        std::string name;
        ReductionKind kind = ReductionKind::Plain;
        /// Absent when the map is not size-invariant.
        std::optional<SizeGrowth> size_growth;
        std::string size_growth_label;
        /// Polynomial upper bound of S_f, used when composing time bounds.
        Polynomial size_envelope;
        Polynomial time_bound;
        std::optional<Polynomial> density;
    };

    Reduction(Alphabet source, Alphabet target, Map map, Declaration decl);

    /// f(x); throws AlphabetMismatch when x is not over the source alphabet.
    Word apply(const Word& x) const;
    Word operator()(const Word& x) const { return apply(x); }

    const std::string& name() const { return decl_.name; }
    ReductionKind kind() const { return decl_.kind; }
    const Alphabet& source() const { return source_; }
    const Alphabet& target() const { return target_; }
    const Declaration& declaration() const { return decl_; }

    bool has_size_growth() const { return decl_.size_growth.has_value(); }
    /// S_f(n); throws DomainError when no size growth is declared.
    std::uint64_t size_growth(std::uint64_t n) const;
    /// The k with S_f(k) = m, found by monotone search; nullopt if m is not
    /// an achieved size.
    std::optional<std::uint64_t> source_size_for(std::uint64_t m) const;

    const Polynomial& time_bound() const { return decl_.time_bound; }
    const Polynomial& size_envelope() const { return decl_.size_envelope; }
    const std::optional<Polynomial>& density() const { return decl_.density; }

private:
    Alphabet source_;
    Alphabet target_;
    Map map_;
    Declaration decl_;
};

}  // namespace genlab
