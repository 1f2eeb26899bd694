#include "genlab/bhp.hpp"
#include "genlab/corpus.hpp"
#include "genlab/errors.hpp"
#include "genlab/genericity.hpp"
#include "genlab/machine_io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

using namespace genlab;

namespace {

std::shared_ptr<const TuringMachine> corpus(const std::string& name) {
    return load_machine(std::string(GENLAB_CORPUS_DIR) + "/machines/" + name + ".json");
}

// Words of length n avoiding "11" are counted by Fibonacci F(n+2).
Rational contains11_oracle(std::size_t n) {
    Natural a = 1, b = 2;  // F(2), F(3)
    for (std::size_t i = 0; i < n; ++i) {
        Natural c = a + b;
        a = b;
        b = c;
    }
    return Rational(1) - Rational(a) * pow2_neg(n);
}

std::vector<std::pair<std::size_t, double>> series(std::size_t n_max, double (*f)(double)) {
    std::vector<std::pair<std::size_t, double>> out;
    for (std::size_t n = 1; n <= n_max; ++n) out.emplace_back(n, f(static_cast<double>(n)));
    return out;
}

}  // namespace

TEST(Density, Contains11AgainstFibonacci) {
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    const auto seq = density_sequence(u, contains_11(), 0, 16);
    ASSERT_EQ(seq.values.size(), 17u);
    for (std::size_t n = 0; n <= 16; ++n) EXPECT_EQ(seq.values[n], contains11_oracle(n)) << n;
    EXPECT_EQ(seq.horizon(), 16u);
}

TEST(Density, ComplementsSumToOne) {
    for (const auto& [name, mu] : registered_ensembles())
        for (std::size_t n = 0; n <= 8; ++n)
            EXPECT_EQ(density(mu, contains_11(), n) + density(mu, contains_11().complement(), n), 1) << name;
}

TEST(Density, GuardSetClosedFormMatchesEnumeration) {
    const auto guard = LongevityGuard::from_polynomial(Polynomial({1, 2}));
    auto closed = c_of_g(guard);
    auto enumerated = closed;
    enumerated.sphere_mass = {};
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(density(dbh_nu(), closed, n), density(dbh_nu(), enumerated, n));
}

TEST(Exceeds, DontKnowCountsAsExceeding) {
    // Writes 0 on a one-way tape and stays put: halts with a don't-know tape.
    TuringMachine dk("dk", 2, 0, 1, Alphabet::binary(),
                     {{0, 0, 1, 0, Move::Left}, {0, 1, 1, 0, Move::Left}, {0, kBlank, 1, 0, Move::Left}},
                     TapeMode::OneWay);
    const auto w = Word::binary("1");
    ASSERT_TRUE(halts_within(dk, w, 1));
    EXPECT_EQ(dk.evaluate(w, 1).answer(), Answer::DontKnow);
    EXPECT_TRUE(exceeds(dk, w, 1000));

    auto halt1 = corpus("halt1");
    EXPECT_TRUE(exceeds(*halt1, w, 0));
    EXPECT_FALSE(exceeds(*halt1, w, 1));
}

TEST(Control, ExactValuesForCorpusMachines) {
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    const auto seq = control_sequence(*corpus("first1loop"), Polynomial::constant(1), u, 10);
    ASSERT_EQ(seq.points.size(), 11u);
    EXPECT_EQ(seq.points[0].value, 0);
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(seq.points[n].value, Rational(1, 2)) << n;

    const auto loop = control_sequence(*corpus("loop"), Polynomial({0, 1}), u, 6);
    for (const auto& p : loop.points) EXPECT_EQ(p.value, 1);
}

TEST(Control, First0DecaysGeometrically) {
    // first0 scans right past the leading 1s: T(x) = (leading ones)+1 unless x = 1ⁿ.
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    const auto seq = control_sequence(*corpus("first0"), Polynomial::constant(3), u, 12, {.n_min = 1});
    for (const auto& p : seq.points) {
        // x starts with 111 (or is shorter and all ones).
        const Rational expected = p.n < 3 ? pow2_neg(p.n) : pow2_neg(3);
        EXPECT_EQ(p.value, expected) << p.n;
    }
}

TEST(Control, SampledEstimateWithinRadius) {
    const auto mu = spike_ensemble();
    auto m = corpus("first1loop");
    const auto exact = control_sequence(*m, Polynomial::constant(1), mu, 8);
    const auto sampled =
        control_sequence(*m, Polynomial::constant(1), mu, 8, {.mode = ControlMode::Sampled, .samples = 4000, .seed = 7});
    ASSERT_EQ(exact.points.size(), sampled.points.size());
    for (std::size_t i = 0; i < exact.points.size(); ++i) {
        EXPECT_EQ(sampled.points[i].samples, 4000u);
        EXPECT_NEAR(to_double(sampled.points[i].value), to_double(exact.points[i].value), sampled.points[i].radius);
    }
    const auto again =
        control_sequence(*m, Polynomial::constant(1), mu, 8, {.mode = ControlMode::Sampled, .samples = 4000, .seed = 7});
    for (std::size_t i = 0; i < again.points.size(); ++i) EXPECT_EQ(again.points[i].value, sampled.points[i].value);
}

TEST(Sampling, FrequenciesMatchMasses) {
    const std::uint64_t draws = 60000;
    std::vector<std::pair<std::string, SphericalEnsemble>> cases = {
        {"uniform", SphericalEnsemble::uniform(Alphabet::binary())},
        {"dbh_nu", dbh_nu()},
        {"geometric", geometric_ensemble()},
        {"spike", spike_ensemble()},
        {"ternary", SphericalEnsemble::uniform(Alphabet::from_chars("abc"))},
    };
    for (const auto& [name, mu] : cases) {
        const std::size_t n = 3;
        std::map<std::string, std::uint64_t> hits;
        for (const auto& w : sample_sphere(mu, n, draws, 123)) {
            ASSERT_EQ(w.size(), n);
            ++hits[w.letters()];
        }
        for_each_in_sphere(mu.alphabet(), n, [&](const Word& w) {
            const double p = to_double(mu.mass(w));
            const double sd = std::sqrt(p * (1 - p) / static_cast<double>(draws));
            const double freq = static_cast<double>(hits[w.letters()]) / static_cast<double>(draws);
            EXPECT_NEAR(freq, p, 5 * sd + 1e-12) << name << " " << w.to_string();
        });
    }
}

TEST(Sampling, ReproduciblePerSeedAndSphere) {
    const auto mu = reverse_geometric_ensemble();
    EXPECT_EQ(sample_sphere(mu, 5, 50, 1), sample_sphere(mu, 5, 50, 1));
    EXPECT_NE(sample_sphere(mu, 5, 50, 1), sample_sphere(mu, 5, 50, 2));
    EXPECT_NE(split_seed(1, 4), split_seed(1, 5));
    EXPECT_EQ(split_seed(9, 4), split_seed(9, 4));
}

TEST(Decay, ClassifiesTextbookShapes) {
    EXPECT_EQ(classify_decay(series(20, [](double n) { return std::pow(2.0, -n); })).label, "exponential");
    EXPECT_EQ(classify_decay(series(20, [](double n) { return 1.0 / (n * n); })).label, "polynomial");
    EXPECT_EQ(classify_decay(series(20, [](double) { return 0.5; })).label, "no decay");
    auto tail = series(10, [](double n) { return n < 5 ? 1.0 / n : 0.0; });
    EXPECT_EQ(classify_decay(tail).label, "eventually zero");
    EXPECT_THROW(classify_decay(series(3, [](double n) { return n; })), DomainError);
    EXPECT_EQ(classify_decay(series(20, [](double) { return 0.5; })).summary().rfind("HEURISTIC:", 0), 0u);
}

TEST(Decay, FitsExponentAndRate) {
    const auto poly = classify_decay(series(30, [](double n) { return 3.0 * std::pow(n, -1.5); }));
    EXPECT_NEAR(poly.exponent, 1.5, 1e-6);
    const auto expo = classify_decay(series(30, [](double n) { return std::pow(0.7, n); }));
    EXPECT_NEAR(expo.rate, 0.7, 1e-6);
}

TEST(Output, CsvHeaderAndRows) {
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    std::ostringstream out;
    write_csv(out, density_sequence(u, contains_11(), 2, 3));
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "n,numerator,denominator,float_value,mode,samples,seed");
    EXPECT_NE(out.str().find("\n2,1,4,"), std::string::npos);
    std::ostringstream svg;
    write_svg(svg, "t", {{1, 0.5}, {2, 0.25}});
    EXPECT_NE(svg.str().find("<svg"), std::string::npos);
}
