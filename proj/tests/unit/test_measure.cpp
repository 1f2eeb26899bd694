#include "genlab/bhp.hpp"
#include "genlab/corpus.hpp"
#include "genlab/errors.hpp"
#include "genlab/measure.hpp"
#include "genlab/reductions.hpp"

#include <gtest/gtest.h>

using namespace genlab;

namespace {

Word b(const char* s) { return Word::binary(s); }

SphericalEnsemble mu2_table() {
    return SphericalEnsemble::table(Alphabet::binary(), {{b("0"), Rational(1, 2)},
                                                          {b("1"), Rational(1, 2)},
                                                          {b("00"), Rational(1, 2)},
                                                          {b("01"), Rational(1, 4)},
                                                          {b("10"), Rational(1, 8)},
                                                          {b("11"), Rational(1, 8)}});
}

// Oracle: μ*(x) as a plain sum over the words listed before x.
Rational mu_star_oracle(const SphericalEnsemble& mu, const Word& x) {
    Rational s = 0;
    for (const auto& y : sphere(mu.alphabet(), x.size()))
        if (y.letters() < x.letters()) s += mu.mass(y);
    return s;
}

}  // namespace

TEST(Measure, MassExamples) {
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    EXPECT_EQ(mass(u, b("101")), Rational(1, 8));
    EXPECT_EQ(mass(dbh_nu(), b("110")), Rational(1, 3));
    EXPECT_EQ(mass(dbh_nu(), b("111")), 0);
    EXPECT_THROW(mass(u, Word::parse(Alphabet::from_chars("ab"), "a")), AlphabetMismatch);
    EXPECT_THROW(mass(mu2_table(), b("000")), HorizonExceeded);
}

TEST(Measure, SphereSums) {
    EXPECT_EQ(sphere_sum(dbh_nu(), 3), 1);
    EXPECT_EQ(sphere_sum(dbh_nu(), 0), 1);
    for (const auto& [name, mu] : registered_ensembles())
        for (std::size_t n = 0; n <= kCorpusTableSpheres; ++n) {
            EXPECT_EQ(sphere_sum(mu, n), 1) << name << " n=" << n;
            for (const auto& q : sphere_masses(mu, n)) EXPECT_GE(q, 0);
        }
    EXPECT_EQ(sphere_sum(half_spike_ensemble(), 7), 1);
}

TEST(Measure, TableRejectsBadSpheres) {
    EXPECT_THROW(SphericalEnsemble::table(Alphabet::binary(), {{b("0"), Rational(1, 2)}}), DomainError);
    EXPECT_THROW(SphericalEnsemble::table(Alphabet::binary(), {{b("0"), Rational(3, 2)}}), DomainError);
}

TEST(Measure, MuStarExamples) {
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    EXPECT_EQ(mu_star(u, b("10")), Rational(1, 2));
    EXPECT_EQ(mu_star(u, b("000")), 0);
    EXPECT_EQ(mu_star(mu2_table(), b("10")), Rational(3, 4));
    EXPECT_EQ(hat_mu(u, b("00")), Rational(1, 4));
    EXPECT_EQ(hat_mu(mu2_table(), b("00")), Rational(1, 2));
    EXPECT_EQ(hat_mu(mu2_table(), b("11")), 1);
    EXPECT_THROW(hat_mu(SphericalEnsemble::uniform(Alphabet::from_chars("abc")), Word::parse(Alphabet::from_chars("abc"), "a")),
                 DomainError);
}

TEST(Measure, ClosedMuStarMatchesEnumeration) {
    auto ensembles = registered_ensembles();
    ensembles.emplace_back("dbh_nu", dbh_nu());
    for (const auto& [name, mu] : ensembles)
        for (std::size_t n = 0; n <= 8; ++n)
            for_each_in_sphere(Alphabet::binary(), n, [&](const Word& x) {
                ASSERT_EQ(mu_star(mu, x), mu_star_oracle(mu, x)) << name << " x=" << x.to_string();
                if (is_lex_max(x)) ASSERT_EQ(hat_mu(mu, x), 1);
                else ASSERT_EQ(hat_mu(mu, x) - mu_star(mu, x), mu.mass(x)) << name << " x=" << x.to_string();
            });
}

TEST(Measure, MuStarIsMonotoneWithinSpheres) {
    const auto mu = spike_ensemble();
    for (std::size_t n = 1; n <= 6; ++n) {
        Rational prev = -1;
        for_each_in_sphere(Alphabet::binary(), n, [&](const Word& x) {
            const auto v = mu_star(mu, x);
            ASSERT_GE(v, prev);
            prev = v;
        });
    }
}

TEST(Measure, TransferExamples) {
    // a ↦ 0 on a unary source.
    const Alphabet unary = Alphabet::from_chars("a");
    DistProblem p{"unary", unary, [](const Word&) { return true; }, SphericalEnsemble::uniform(unary)};
    const auto img = to_binary(p);
    const auto& nu = img.image.mu;
    EXPECT_EQ(nu.mass(b("000")), 1);
    EXPECT_EQ(nu.mass(b("010")), 0);
    EXPECT_TRUE(verify_transfer(img.f, p.mu, nu, 8).passed());

    // Sizes outside the image of S_f get the uniform filler.
    Reduction::Declaration d;
    d.name = "double";
    d.size_growth = [](std::uint64_t n) { return 2 * n; };
    d.size_envelope = Polynomial({0, 2});
    d.time_bound = Polynomial({0, 2});
    Reduction dbl(Alphabet::binary(), Alphabet::binary(), [](const Word& x) { return x + x; }, d);
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    const auto t = transfer(dbl, u);
    EXPECT_EQ(t.mass(b("101")), Rational(1, 8));
    EXPECT_EQ(t.mass(b("0101")), Rational(1, 4));
    EXPECT_EQ(t.mass(b("0110")), 0);
    const auto rep = verify_transfer(dbl, u, t, 10);
    EXPECT_TRUE(rep.passed());
    for (std::size_t m = 0; m <= 10; m += 2) EXPECT_EQ(sphere_sum(t, m), 1);
}

TEST(Measure, CorruptedTransferHasExactlyOneViolation) {
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    const auto id = identity_reduction(Alphabet::binary());
    const auto bad = SphericalEnsemble::closed_form("corrupt", Alphabet::binary(), [](const Word& x) {
        if (x == Word::binary("0110")) return Rational(1, 8);
        return Rational(pow2_neg(x.size()));
    });
    const auto rep = verify_transfer(id, u, bad, 6);
    ASSERT_EQ(rep.violations.size(), 1u);
    EXPECT_EQ(rep.violations[0].witness, "0110");
}

TEST(Measure, InducedExamples) {
    const auto u = SphericalEnsemble::uniform(Alphabet::binary());
    WordSet s{"00|01", [](const Word& x) { return x.size() == 2 && x[0] == 0; }, {}};
    const auto ind = induce(u, s);
    EXPECT_EQ(ind.mass(b("00")), Rational(1, 2));
    EXPECT_EQ(ind.mass(b("10")), 0);
    EXPECT_EQ(ind.mass(b("101")), Rational(1, 8));  // S ∩ Σ³ = ∅ keeps μ
    EXPECT_EQ(induce(u, all_words()).mass(b("1101")), Rational(1, 16));
    EXPECT_TRUE(verify_induced(u, s, ind, 8).passed());
    EXPECT_TRUE(verify_induced(u, s.complement(), induce(u, s.complement()), 8).passed());
}

TEST(Measure, InducedClosedFormMatchesEnumeration) {
    for (const auto& g : {Polynomial({1, 2}), Polynomial({1, 1})}) {
        const auto guard = LongevityGuard::from_polynomial(g);
        const auto closed = nu_g(guard);
        auto s = c_of_g(guard);
        const auto rep = verify_induced(dbh_nu(), s, closed, 10);
        EXPECT_TRUE(rep.passed()) << g.to_string();
        s.sphere_mass = {};
        EXPECT_TRUE(verify_induced(dbh_nu(), s, induce(dbh_nu(), s), 10).passed());
    }
}
