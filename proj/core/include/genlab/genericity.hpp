#pragma once

#include "genlab/machine.hpp"
#include "genlab/measure.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace genlab {

/// μ_n(S ∩ Σⁿ): the registered closed form when S has one for μ, else enumeration.
Rational density(const SphericalEnsemble& mu, const WordSet& s, std::size_t n);

struct DensitySequence {
    std::string label;
    std::size_t n_min = 0;
    std::vector<Rational> values;  // values[i] is the density at n_min + i

    std::size_t horizon() const { return n_min + values.size() - 1; }
};

DensitySequence density_sequence(const SphericalEnsemble& mu, const WordSet& s, std::size_t n_min, std::size_t n_max);

/// True when T_M(x) > bound: the run did not halt within `bound` steps, or it
/// halted with DontKnow. A halted run whose tape is undecodable counts as halted.
bool exceeds(const Machine& m, const Word& x, std::uint64_t bound);

enum class ControlMode : std::uint8_t { Exact, Sampled };

struct ControlPoint {
    std::size_t n = 0;
    /// Exact C_{M,p}(n), or hits/samples in sampled mode.
    Rational value;
    std::uint64_t samples = 0;
    /// Hoeffding radius at 95% confidence (sampled mode only).
    double radius = 0;
};

struct ControlSequence {
    std::string machine;
    Polynomial p;
    ControlMode mode = ControlMode::Exact;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::vector<ControlPoint> points;
};

struct ControlOptions {
    ControlMode mode = ControlMode::Exact;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::size_t n_min = 0;
};

/// C_{M,p}(n) = μ_n{x : T_M(x) > p(n)} for n_min <= n <= n_max.
ControlSequence control_sequence(const Machine& m, const Polynomial& p, const SphericalEnsemble& mu, std::size_t n_max,
                                 const ControlOptions& options = {});

/// Heuristic fit of a decaying sequence. Never a claim about asymptotics.
struct DecayFit {
    std::string label;  // "no decay", "polynomial", "exponential" or "eventually zero"
    double exponent = 0;  // k in n^{-k} from the log-log fit
    double rate = 0;      // r in r^n from the log-linear fit
    double rss_polynomial = 0;
    double rss_exponential = 0;
    std::size_t points = 0;

    std::string summary() const;
};

/// Least-squares fits of log v against log n and against n over points with
/// n >= 1. Throws DomainError with fewer than four points.
DecayFit classify_decay(const std::vector<std::pair<std::size_t, double>>& points);
DecayFit classify_decay(const DensitySequence& seq);
DecayFit classify_decay(const ControlSequence& seq);

/// Deterministic stream seed for sphere n: SplitMix64 applied to (seed, n).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t n);

/// i.i.d. draws from μ_n, reproducible per (seed, n). Uniform and DBH-ν sample
/// directly; otherwise CDF inversion through a closed-form μ* (letter
/// descent) or an enumerated sphere CDF. Throws DomainError when neither applies.
std::vector<Word> sample_sphere(const SphericalEnsemble& mu, std::size_t n, std::uint64_t count, std::uint64_t seed);

/// CSV with columns n, numerator, denominator, float_value, mode, samples, seed.
void write_csv(std::ostream& out, const DensitySequence& seq);
void write_csv(std::ostream& out, const ControlSequence& seq);

/// Minimal SVG line plot of (n, value) pairs.
void write_svg(std::ostream& out, const std::string& title, const std::vector<std::pair<std::size_t, double>>& points);

std::vector<std::pair<std::size_t, double>> plot_points(const DensitySequence& seq);
std::vector<std::pair<std::size_t, double>> plot_points(const ControlSequence& seq);

}  // namespace genlab
