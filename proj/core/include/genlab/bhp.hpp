#pragma once

#include "genlab/machine.hpp"
#include "genlab/measure.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/rational.hpp"
#include "genlab/reduction.hpp"
#include "genlab/reductions.hpp"
#include "genlab/report.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace genlab {

// ---- instance codes c(n, w) = 1^m 0 w ---------------------------------------

struct BHInstance {
    std::uint64_t n = 0;
    Word w{Alphabet::binary()};
};

/// 1^{n-|w|-1} 0 w. Throws DomainError when n <= |w|.
Word encode_instance(std::uint64_t n, const Word& w);

/// Splits u at its first 0. nullopt for ε and 1^k, which are not codes.
std::optional<BHInstance> try_decode_instance(const Word& u);
/// As above but throws DomainError for non-codes.
BHInstance decode_instance(const Word& u);

/// u is a code (n, w) and m halts on w within n steps.
bool bh_member(const Machine& m, const Word& u);

/// ν_{|u|}(u): 1/(|u|·2^{|w|}) for codes, 1 for ε, 0 for 1^k.
Rational nu_mass(const Word& u);

/// The ensemble ν of the distributional bounded halting problem, with
/// closed-form μ*.
SphericalEnsemble dbh_nu();

// ---- longevity guards and C(g) --------------------------------------------

/// A strictly increasing guard g with a polynomial upper envelope.
struct LongevityGuard {
    std::string label;
    std::function<std::uint64_t(std::uint64_t)> g;
    Polynomial envelope;

    static LongevityGuard from_polynomial(const Polynomial& p);
    std::uint64_t operator()(std::uint64_t n) const { return g(n); }

    /// Some k with g(k) = n, by monotone search.
    std::optional<std::uint64_t> inverse(std::uint64_t n) const;

    /// L1 (g(n) >= n) and L2 (strictly increasing) on 0..horizon.
    CheckReport validate(std::size_t horizon) const;
};

/// C(g) = { c(g(|w|), w) }, with the closed form ν_n(C(g) ∩ Σⁿ) = 1/n when
/// some k has g(k) = n > k, else 0 (registered for the ν ensemble only).
WordSet c_of_g(const LongevityGuard& g);

/// ν(g): the C(g)-induced ν.
SphericalEnsemble nu_g(const LongevityGuard& g);

// ---- numerals ----------------------------------------------------------------

/// n̄ = 1b_k 1b_{k-1} … 1b_0 for n >= 1; the reserved "10" for 0.
Word numeral(const Natural& n);
Word numeral(std::uint64_t n);
std::size_t numeral_length(std::uint64_t n);

/// Inverse of numeral on a whole word. Throws ParseError when malformed.
Natural decode_numeral(const Word& v);

/// Reads a numeral starting at `pos` that must be followed by a 0. Returns the
/// value and the index of that 0, or nullopt when malformed.
std::optional<std::pair<Natural, std::size_t>> read_numeral(const Word& u, std::size_t pos);

// ---- x′, x″ and μ* inversion --------------------------------------------------

/// x₀.x₁…x_k1 for s = x₀x₁…x_k, i.e. (2·N(s)+1)/2^{|s|}.
Rational dyadic_value(const Word& s);

/// x′ from the common binary prefix of μ*(x) and hatμ(x). Requires
/// μ(x) > 2^{-|x|}; throws DomainError otherwise.
Word x_prime(const SphericalEnsemble& mu, const Word& x);

/// x′ by a shortlex scan of candidates up to length |x|+1.
Word x_prime_scan(const SphericalEnsemble& mu, const Word& x);

/// 0x when μ(x) <= 2^{-|x|}, else 1x′.
Word x_double_prime(const SphericalEnsemble& mu, const Word& x);

/// The x in Σⁿ with μ*(x) < t <= hatμ(x), by one μ* query per bit. 0 < t <= 1.
Word invert_mu_star(const SphericalEnsemble& mu, std::size_t n, const Rational& t);

/// Recovers x from (n, x″) as machine M does; nullopt when x″ is not the
/// encoding of any x of length n.
std::optional<Word> recover_from_x_double_prime(const SphericalEnsemble& mu, std::size_t n, const Word& xpp);

// ---- red2bh ------------------------------------------------------------------

/// A nondeterministic decider for D⁺ with a polynomial longevity guard.
struct Decider {
    MachinePtr machine;
    Polynomial guard;
};

/// n + 2⌈log₂(n+1)⌉ + 6, an upper bound on |0·n̄·0·x″| for |x| = n.
std::uint64_t code_length_envelope(std::uint64_t n);

struct Red2BH {
    Reduction f;
    MachinePtr m;
    LongevityGuard g;
};

/// f(x) = 1^{g(n)-|0n̄0x″|} 0 n̄ 0 x″ and the virtual machine M. The guard
/// used is max(g_user, envelope + n + guard of A_D); g_user is validated for
/// L1/L2 on `horizon` (ConstructionError on failure).
Red2BH red2bh(const DistProblem& problem, const Decider& decider, const LongevityGuard& user_guard,
              std::size_t horizon = 16);

struct MeasureRow {
    Word x;
    bool high_branch = false;  // μ(x) > 2^{-|x|}
    Rational nu_fx;
    Rational ratio;  // ν(f(x))·factor(|x|)/μ(x); absent (0) when μ(x) = 0
};

struct MeasureDecreaseReport {
    CheckReport lemma;       // factor 16|x|²g(|x|)
    CheckReport per_branch;  // the proof's factor-8 intermediate bounds
    std::vector<MeasureRow> rows;
    std::optional<Rational> min_ratio;
};

/// ν(f(x))·factor(|x|) >= μ(x) for all |x| <= n_max, with |x|² read as
/// max(|x|,1)². `factor` defaults to 16·max(n,1)²·g(n).
MeasureDecreaseReport verify_measure_decrease(const SphericalEnsemble& mu, const Red2BH& r, std::size_t n_max);

/// Generic form used for red2bhu: ν(f(x))·factor(|x|) >= μ(x).
CheckReport verify_measure_factor(const SphericalEnsemble& mu, const Reduction& f,
                                  const std::function<Rational(std::size_t)>& factor, std::size_t n_max,
                                  const std::string& property);

// ---- machine codes and the universal machine -------------------------------

/// Canonical γ(M) for a table machine over {0,1}; every valid γ is >= 2^33.
Natural gamma(const TuringMachine& m);
/// M̄ = numeral(γ(M)).
Word machine_code(const TuringMachine& m);
/// M̄ for entry `index` of a universal machine's registry.
Word registry_code(std::uint16_t index);

struct DecodedMachine {
    std::optional<TuringMachine> table;
    std::optional<std::uint16_t> registry_index;
};

/// nullopt when γ is not a valid code.
std::optional<DecodedMachine> decode_gamma(const Natural& gamma);
/// Table machine from M̄; throws ParseError for malformed or registry codes.
TuringMachine decode_machine(const Word& mbar);

/// Interpreter-backed U. Form 1, M̄0w: runs M on w, T_U = T_M. Form 2,
/// n̄0M̄0x″: recovers x ∈ {0,1}ⁿ under ν and halts iff x codes (n', w) with
/// M halting on w within n' steps, costing |input| + n + T_M(w). Anything
/// else never halts.
MachinePtr universal_machine(std::vector<MachinePtr> registry = {});

struct Red2BHU {
    Reduction f;
    MachinePtr u;
    LongevityGuard h;
    Word mbar;
};

/// f(x) = 1^{h(n)-|0n̄0M̄0x″|} 0 n̄ 0 M̄ 0 x″ with x″ under ν, h = g·s and
/// s ≡ 1. Throws ConstructionError when h(n) < 4n + |M̄| + 6 on the horizon.
Red2BHU red2bhu(const TuringMachine& m, const LongevityGuard& g, std::size_t horizon = 16);
/// Same for a machine held in U's registry at index 0.
Red2BHU red2bhu(MachinePtr m, const LongevityGuard& g, std::size_t horizon = 16);

/// The smallest guard red2bhu accepts for a code of length `mbar_length`.
LongevityGuard universal_guard(std::size_t mbar_length);

struct StageReport {
    std::string stage;
    CheckReport membership;
    CheckReport measure;
};

struct PipelineReport {
    std::vector<StageReport> stages;
    bool passed() const;
    nlohmann::json to_json() const;
};

/// red2bh → identity restriction → red2bhu → identity restriction, each
/// stage checked for membership preservation and its measure inequality on
/// |x| <= n_max.
PipelineReport completeness_pipeline(const DistProblem& problem, const Decider& decider, const LongevityGuard& g,
                                     std::size_t n_max);

}  // namespace genlab
