#pragma once

#include "genlab/rational.hpp"
#include "genlab/reduction.hpp"
#include "genlab/report.hpp"
#include "genlab/words.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace genlab {

/// Largest sphere (in words) that any operation will enumerate.
inline constexpr std::uint64_t kMaxEnumeratedSphere = std::uint64_t{1} << 22;

enum class EnsembleKind : std::uint8_t { Uniform, Table, DBHNu, Transferred, Induced, ClosedForm };

std::string to_string(EnsembleKind k);

class SphericalEnsemble;

/// A decidable set of words, optionally with a closed form for its sphere
/// masses μ_n(S ∩ Σⁿ) under particular ensembles.
struct WordSet {
    using SphereMass = std::function<std::optional<Rational>(const SphericalEnsemble&, std::size_t)>;

    std::string label;
    std::function<bool(const Word&)> contains;
    /// Returns nullopt when no closed form applies to the given ensemble.
    SphereMass sphere_mass;

    WordSet complement() const;
};

WordSet all_words();

namespace detail {

class EnsembleImpl {
public:
    virtual ~EnsembleImpl() = default;
    virtual EnsembleKind kind() const = 0;
    virtual std::string describe() const = 0;
    /// μ_{|x|}(x); x is already known to be over the ensemble's alphabet.
    virtual Rational mass(const Word& x) const = 0;
    virtual std::optional<Rational> mu_star(const Word&) const { return std::nullopt; }
    /// Largest sphere the ensemble is defined on (Table kinds).
    virtual std::optional<std::size_t> max_sphere() const { return std::nullopt; }
    /// Declared computability class (documentation only, never verified).
    virtual std::string computability() const { return "enumeration"; }
};

}  // namespace detail

/// Spherical ensemble μ = {μ_n} with exact rational masses, supp(μ_n) ⊆ Σⁿ.
/// Immutable and cheap to copy; safe to share across threads.
class SphericalEnsemble {
public:
    SphericalEnsemble(Alphabet alphabet, std::shared_ptr<const detail::EnsembleImpl> impl);

    static SphericalEnsemble uniform(Alphabet alphabet);
    /// Sparse table; absent words have mass 0. Every sphere up to the longest
    /// key must sum to exactly 1 (an absent sphere 0 defaults to {ε: 1}).
    static SphericalEnsemble table(Alphabet alphabet, const std::map<Word, Rational>& entries);
    /// Ensemble defined by a host rule. `mu_star` may be empty.
    static SphericalEnsemble closed_form(std::string name, Alphabet alphabet, std::function<Rational(const Word&)> mass,
                                         std::function<Rational(const Word&)> mu_star = {},
                                         std::optional<std::size_t> max_sphere = std::nullopt);

    const Alphabet& alphabet() const { return alphabet_; }
    EnsembleKind kind() const { return impl_->kind(); }
    std::string describe() const { return impl_->describe(); }
    std::string computability() const { return impl_->computability(); }
    std::optional<std::size_t> max_sphere() const { return impl_->max_sphere(); }

    /// μ_{|x|}(x). Throws AlphabetMismatch, or HorizonExceeded beyond a table's range.
    Rational mass(const Word& x) const;
    /// Closed-form μ*(x) when the kind provides one.
    std::optional<Rational> closed_mu_star(const Word& x) const;

    const detail::EnsembleImpl& impl() const { return *impl_; }

private:
    Alphabet alphabet_;
    std::shared_ptr<const detail::EnsembleImpl> impl_;
};

Rational mass(const SphericalEnsemble& mu, const Word& x);

/// Σ_{x∈Σⁿ} μ_n(x) by enumeration.
Rational sphere_sum(const SphericalEnsemble& mu, std::size_t n);

/// Masses of Σⁿ in lexicographic order.
std::vector<Rational> sphere_masses(const SphericalEnsemble& mu, std::size_t n);

/// μ*(x) = μ_{|x|}{y ∈ Σ^{|x|} : y <lex x}. Closed form when available, else enumeration.
Rational mu_star(const SphericalEnsemble& mu, const Word& x);

/// μ*(x⁺) for the in-sphere successor x⁺, and 1 on the lex-max word. Binary alphabet only.
Rational hat_mu(const SphericalEnsemble& mu, const Word& x);

/// f-transfer of μ: ν(y) = Σ_{f(x)=y} μ(x) on achieved sizes, |Π|^{-|y|} elsewhere.
/// The reduction must declare a size growth; size invariance is checked per
/// source sphere as spheres are materialized (DomainError on violation).
SphericalEnsemble transfer(const Reduction& f, const SphericalEnsemble& mu);

/// S-induced ensemble μ^S. Uses S.sphere_mass when it returns a value for μ,
/// otherwise enumerates each sphere once.
SphericalEnsemble induce(const SphericalEnsemble& mu, const WordSet& s);

/// Brute-force check of the transfer equation on every target sphere m <= n_max.
/// Preimages are found by enumerating source spheres, independently of S_f.
/// Target spheres above kMaxEnumeratedSphere are checked on the image only.
CheckReport verify_transfer(const Reduction& f, const SphericalEnsemble& mu, const SphericalEnsemble& nu,
                            std::size_t n_max);

/// Brute-force check of the induction equation on every sphere n <= n_max.
CheckReport verify_induced(const SphericalEnsemble& mu, const WordSet& s, const SphericalEnsemble& induced,
                           std::size_t n_max);

}  // namespace genlab
