#pragma once

#include "genlab/machine.hpp"
#include "genlab/measure.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/reduction.hpp"
#include "genlab/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace genlab {

/// A distributional decision problem (D, μ) with D given by its positive part.
struct DistProblem {
    std::string name;
    Alphabet alphabet;
    std::function<bool(const Word&)> member;
    SphericalEnsemble mu;
};

Reduction identity_reduction(const Alphabet& alphabet);

/// The binary homomorphism 0 ↦ 00, 1 ↦ 1. Not size-invariant.
Reduction example41();

/// Binary-alphabet reduction together with its image problem (E⁺, ν).
struct BinaryImage {
    Reduction f;
    DistProblem image;
};

/// |Σ|=1: a ↦ 0. |Σ|=2: letters renamed by index. |Σ|>=3: the k-th word of
/// Σⁿ maps to the k-th word of {0,1}^L, L the least with 2^L >= |Σ|ⁿ.
/// ν is the f-transfer of μ; E⁺ is decided by unranking.
BinaryImage to_binary(const DistProblem& problem);

/// The size growth used by to_binary: the least L with 2^L >= k^n.
std::uint64_t binary_length(std::size_t k, std::uint64_t n);

/// Per-sphere constancy of |f(x)| and strict growth across spheres up to
/// n_max; also compares against the declared S_f when there is one.
CheckReport verify_size_invariance(const Reduction& f, std::size_t n_max);

/// Size invariance on source spheres <= n_max plus the transfer equation on
/// target spheres <= S_f(n_max).
CheckReport verify_cs(const Reduction& f, const SphericalEnsemble& mu, const SphericalEnsemble& nu, std::size_t n_max);

/// |f(x)| = |x| and ν(f(x)) >= μ(x)/d(|x|) for every |x| <= n_max.
CheckReport verify_cm(const Reduction& f, const SphericalEnsemble& mu, const SphericalEnsemble& nu, const Polynomial& d,
                      std::size_t n_max);

/// g∘f: S = S_g∘S_f, T = T_f + T_g∘env_f, envelope env_g∘env_f and, when
/// both declare one, density d_f·(d_g∘env_f).
Reduction compose(const Reduction& f, const Reduction& g);

/// A∘f as a machine: T_f(|x|) declared steps, then A on f(x).
MachinePtr compose_machine(MachinePtr a, const Reduction& f);

struct ControlTransferRow {
    std::size_t k = 0;
    std::uint64_t target_size = 0;
    /// C_{A∘f, p∘S_f+T_f}(k) under μ (CS), or μ_k{x : T_A(f(x)) > p(k)} (CM).
    Rational left;
    /// μ_k{x : T_A(f(x)) > p(S_f(k))}; equals `left` in the CS chain.
    Rational mid;
    /// C_{A,p}(S_f(k)) under ν (CS), or C_{A,p}(k)·d(k) (CM).
    Rational right;
};

struct ControlTransferReport {
    CheckReport report;
    std::vector<ControlTransferRow> rows;
};

/// Finite check of the CS control-sequence bound on spheres k <= n_max.
ControlTransferReport check_control_transfer(MachinePtr a, const Reduction& f, const Polynomial& p,
                                             const SphericalEnsemble& mu, const SphericalEnsemble& nu,
                                             std::size_t n_max);

/// CM analog: μ_k{x : T_A(f(x)) > p(k)} <= C_{A,p}(k)·d(k) with d from f.
ControlTransferReport check_control_transfer_cm(MachinePtr a, const Reduction& f, const Polynomial& p,
                                                const SphericalEnsemble& mu, const SphericalEnsemble& nu,
                                                std::size_t n_max);

}  // namespace genlab
