#include "genlab/genericity.hpp"

#include "genlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

namespace genlab {

Rational density(const SphericalEnsemble& mu, const WordSet& s, std::size_t n) {
    if (s.sphere_mass)
        if (auto closed = s.sphere_mass(mu, n)) return *closed;
    if (sphere_size(mu.alphabet(), n) > kMaxEnumeratedSphere)
        throw HorizonExceeded("density of '" + s.label + "' at n=" + std::to_string(n) + " needs enumeration");
    Rational total = 0;
    for_each_in_sphere(mu.alphabet(), n, [&](const Word& x) {
        if (s.contains(x)) total += mu.mass(x);
    });
    return total;
}

DensitySequence density_sequence(const SphericalEnsemble& mu, const WordSet& s, std::size_t n_min, std::size_t n_max) {
    if (n_min > n_max) throw DomainError("empty density range");
    DensitySequence seq{s.label, n_min, {}};
    for (std::size_t n = n_min; n <= n_max; ++n) seq.values.push_back(density(mu, s, n));
    return seq;
}

bool exceeds(const Machine& m, const Word& x, std::uint64_t bound) {
    const RunResult r = m.evaluate(x, bound);
    if (!r.halted() || r.steps > bound) return true;
    return r.answer() == Answer::DontKnow;
}

namespace {

// 95% two-sided Hoeffding radius for a mean of `samples` Bernoulli draws.
double hoeffding_radius(std::uint64_t samples) {
    return std::sqrt(std::log(2.0 / 0.05) / (2.0 * static_cast<double>(samples)));
}

}  // namespace

ControlSequence control_sequence(const Machine& m, const Polynomial& p, const SphericalEnsemble& mu, std::size_t n_max,
                                 const ControlOptions& options) {
    if (!(m.input_alphabet() == mu.alphabet())) throw AlphabetMismatch("machine and ensemble alphabets differ");
    ControlSequence seq;
    seq.machine = m.name();
    seq.p = p;
    seq.mode = options.mode;
    if (options.mode == ControlMode::Sampled) {
        if (options.samples == 0) throw DomainError("sampled mode needs at least one sample");
        seq.seed = options.seed;
        seq.samples = options.samples;
    }
    for (std::size_t n = options.n_min; n <= n_max; ++n) {
        const auto bound = p(n);
        ControlPoint point{n, 0, 0, 0};
        if (options.mode == ControlMode::Exact) {
            if (sphere_size(mu.alphabet(), n) > kMaxEnumeratedSphere)
                throw HorizonExceeded("exact control sequence at n=" + std::to_string(n) + " needs enumeration");
            Rational total = 0;
            for_each_in_sphere(mu.alphabet(), n, [&](const Word& x) {
                Rational q = mu.mass(x);
                if (q != 0 && exceeds(m, x, bound)) total += q;
            });
            point.value = total;
        } else {
            std::uint64_t hits = 0;
            for (const auto& x : sample_sphere(mu, n, options.samples, options.seed))
                if (exceeds(m, x, bound)) ++hits;
            point.value = Rational(Natural(static_cast<unsigned long>(hits)),
                                   Natural(static_cast<unsigned long>(options.samples)));
            point.value.canonicalize();
            point.samples = options.samples;
            point.radius = hoeffding_radius(options.samples);
        }
        seq.points.push_back(std::move(point));
    }
    return seq;
}

std::string DecayFit::summary() const {
    std::ostringstream os;
    os << "HEURISTIC: " << label;
    if (label == "polynomial") os << ", k~" << std::setprecision(3) << exponent;
    if (label == "exponential") os << ", rate~" << std::setprecision(3) << rate << "^n";
    os << " (" << points << " points)";
    return os.str();
}

namespace {

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double rss = 0;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LineFit f;
    const double den = n * sxx - sx * sx;
    f.slope = den == 0 ? 0 : (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (f.slope * xs[i] + f.intercept);
        f.rss += r * r;
    }
    return f;
}

}  // namespace

DecayFit classify_decay(const std::vector<std::pair<std::size_t, double>>& points) {
    std::vector<std::pair<std::size_t, double>> usable;
    for (const auto& pt : points)
        if (pt.first >= 1) usable.push_back(pt);
    if (usable.size() < 4) throw DomainError("classify_decay needs at least four points with n >= 1");

    DecayFit fit;
    fit.points = usable.size();
    // A zero tail means the sequence vanished on the horizon.
    std::size_t tail_zeros = 0;
    for (auto it = usable.rbegin(); it != usable.rend() && it->second <= 0; ++it) ++tail_zeros;
    if (tail_zeros > 0) {
        fit.label = "eventually zero";
        return fit;
    }

    std::vector<double> ns, logns, logvs;
    for (const auto& [n, v] : usable) {
        if (v <= 0) continue;
        ns.push_back(static_cast<double>(n));
        logns.push_back(std::log(static_cast<double>(n)));
        logvs.push_back(std::log(v));
    }
    const LineFit poly = least_squares(logns, logvs);
    const LineFit expo = least_squares(ns, logvs);
    fit.exponent = -poly.slope;
    fit.rate = std::exp(expo.slope);
    fit.rss_polynomial = poly.rss;
    fit.rss_exponential = expo.rss;

    // Flat within a few percent over the horizon: no decay.
    const double drop = logvs.front() - logvs.back();
    if (drop < 0.05 || fit.exponent < 0.1) {
        fit.label = "no decay";
    } else {
        fit.label = expo.rss < poly.rss ? "exponential" : "polynomial";
    }
    return fit;
}

std::vector<std::pair<std::size_t, double>> plot_points(const DensitySequence& seq) {
    std::vector<std::pair<std::size_t, double>> pts;
    for (std::size_t i = 0; i < seq.values.size(); ++i) pts.emplace_back(seq.n_min + i, to_double(seq.values[i]));
    return pts;
}

std::vector<std::pair<std::size_t, double>> plot_points(const ControlSequence& seq) {
    std::vector<std::pair<std::size_t, double>> pts;
    for (const auto& p : seq.points) pts.emplace_back(p.n, to_double(p.value));
    return pts;
}

DecayFit classify_decay(const DensitySequence& seq) { return classify_decay(plot_points(seq)); }
DecayFit classify_decay(const ControlSequence& seq) { return classify_decay(plot_points(seq)); }

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t n) {
    // SplitMix64: one step from seed, then one from (mixed ^ n).
    auto mix = [](std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    return mix(mix(seed) ^ n);
}

namespace {

// Uniform integer in [0, bound) by rejection; independent of library distributions.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw DomainError("empty draw range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

Word draw_uniform(std::mt19937_64& rng, const Alphabet& a, std::size_t n) {
    std::string letters(n, 0);
    for (auto& c : letters) c = static_cast<char>(draw_below(rng, a.size()));
    return Word(a, std::move(letters));
}

Rational unit_from_bits(std::uint64_t k) {
    Rational u(Natural(std::to_string(k)), pow2(64));
    u.canonicalize();
    return u;
}

// Largest x in Σⁿ with μ*(x) <= u, found one letter at a time.
Word descend(const SphericalEnsemble& mu, std::size_t n, const Rational& u) {
    const auto& a = mu.alphabet();
    std::string letters(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = a.size(); c-- > 1;) {
            letters[i] = static_cast<char>(c);
            if (*mu.closed_mu_star(Word(a, letters)) <= u) break;
            letters[i] = 0;
        }
    }
    return Word(a, std::move(letters));
}

}  // namespace

std::vector<Word> sample_sphere(const SphericalEnsemble& mu, std::size_t n, std::uint64_t count, std::uint64_t seed) {
    std::mt19937_64 rng(split_seed(seed, n));
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(count));
    const auto& a = mu.alphabet();
    switch (mu.kind()) {
        case EnsembleKind::Uniform:
            for (std::uint64_t i = 0; i < count; ++i) out.push_back(draw_uniform(rng, a, n));
            return out;
        case EnsembleKind::DBHNu:
            for (std::uint64_t i = 0; i < count; ++i) {
                if (n == 0) {
                    out.emplace_back(a);
                    continue;
                }
                const auto m = draw_below(rng, n);
                Word x = Word::repeat(a, 1, m);
                x.push_back(0);
                x.append(draw_uniform(rng, a, n - m - 1));
                out.push_back(std::move(x));
            }
            return out;
        default: break;
    }
    if (n == 0 || mu.closed_mu_star(Word(a, std::string(n, 0)))) {
        for (std::uint64_t i = 0; i < count; ++i) out.push_back(descend(mu, n, unit_from_bits(rng())));
        return out;
    }
    if (sphere_size(a, n) > kMaxEnumeratedSphere)
        throw DomainError("no sampler for " + mu.describe() + " at n=" + std::to_string(n));
    std::vector<Rational> cdf;  // cdf[i] = μ*(i-th word) + mass
    std::vector<Word> words;
    Rational acc = 0;
    for_each_in_sphere(a, n, [&](const Word& x) {
        acc += mu.mass(x);
        cdf.push_back(acc);
        words.push_back(x);
    });
    for (std::uint64_t i = 0; i < count; ++i) {
        const Rational u = unit_from_bits(rng());
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        out.push_back(words[static_cast<std::size_t>(it - cdf.begin())]);
    }
    return out;
}

namespace {

void csv_row(std::ostream& out, std::size_t n, const Rational& v, const std::string& mode, const std::string& samples,
             const std::string& seed) {
    out << n << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << ',' << std::setprecision(17)
        << to_double(v) << ',' << mode << ',' << samples << ',' << seed << '\n';
}

constexpr const char* kCsvHeader = "n,numerator,denominator,float_value,mode,samples,seed\n";

}  // namespace

void write_csv(std::ostream& out, const DensitySequence& seq) {
    out << kCsvHeader;
    for (std::size_t i = 0; i < seq.values.size(); ++i) csv_row(out, seq.n_min + i, seq.values[i], "exact", "", "");
}

void write_csv(std::ostream& out, const ControlSequence& seq) {
    out << kCsvHeader;
    const bool sampled = seq.mode == ControlMode::Sampled;
    for (const auto& p : seq.points)
        csv_row(out, p.n, p.value, sampled ? "sampled" : "exact", sampled ? std::to_string(p.samples) : "",
                sampled ? std::to_string(seq.seed) : "");
}

void write_svg(std::ostream& out, const std::string& title, const std::vector<std::pair<std::size_t, double>>& points) {
    constexpr double width = 480, height = 320, margin = 40;
    std::size_t n_lo = points.empty() ? 0 : points.front().first;
    std::size_t n_hi = points.empty() ? 1 : points.back().first;
    if (n_hi == n_lo) ++n_hi;
    auto sx = [&](std::size_t n) {
        return margin + (width - 2 * margin) * static_cast<double>(n - n_lo) / static_cast<double>(n_hi - n_lo);
    };
    auto sy = [&](double v) { return height - margin - (height - 2 * margin) * std::clamp(v, 0.0, 1.0); };
    std::string escaped;
    for (char c : title) {
        if (c == '<') escaped += "&lt;";
        else if (c == '>') escaped += "&gt;";
        else if (c == '&') escaped += "&amp;";
        else escaped += c;
    }
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<text x=\"" << margin << "\" y=\"20\" font-family=\"monospace\" font-size=\"12\">" << escaped << "</text>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& [n, v] : points) out << sx(n) << ',' << sy(v) << ' ';
    out << "\"/>\n";
    for (const auto& [n, v] : points)
        out << "<circle cx=\"" << sx(n) << "\" cy=\"" << sy(v) << "\" r=\"2.5\" fill=\"steelblue\"/>\n";
    out << "</svg>\n";
}

}  // namespace genlab
