#include "genlab/errors.hpp"
#include "genlab/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace genlab;

TEST(Polynomial, ParseForms) {
    EXPECT_EQ(Polynomial::parse("n^2 + n + 6"), Polynomial({6, 1, 1}));
    EXPECT_EQ(Polynomial::parse("2n+1"), Polynomial({1, 2}));
    EXPECT_EQ(Polynomial::parse("3"), Polynomial::constant(3));
    EXPECT_EQ(Polynomial::parse("4n^3"), Polynomial({0, 0, 0, 4}));
    EXPECT_THROW(Polynomial::parse(""), ParseError);
    EXPECT_THROW(Polynomial::parse("n^"), ParseError);
}

TEST(Polynomial, EvaluationMatchesHornerFreeOracle) {
    const Polynomial p({6, 1, 1});
    for (std::uint64_t n = 0; n < 50; ++n) EXPECT_EQ(p(n), n * n + n + 6);
}

TEST(Polynomial, ComposeAgreesPointwise) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial f({rng() % 5, rng() % 4, rng() % 3});
        Polynomial g({rng() % 7, rng() % 3});
        const Polynomial fg = f.compose(g);
        const Polynomial sum = f + g;
        const Polynomial prod = f * g;
        for (std::uint64_t n = 0; n < 20; ++n) {
            ASSERT_EQ(fg(n), f(g(n)));
            ASSERT_EQ(sum(n), f(n) + g(n));
            ASSERT_EQ(prod(n), f(n) * g(n));
        }
    }
}

TEST(Polynomial, StrictlyIncreasingFlag) {
    EXPECT_TRUE(Polynomial({0, 1}).strictly_increasing());
    EXPECT_FALSE(Polynomial::constant(4).strictly_increasing());
    EXPECT_TRUE(Polynomial({3, 0, 2}).strictly_increasing());
}

TEST(Polynomial, OverflowIsAnError) {
    const Polynomial p({0, 0, 0, 0, 0, 0, 0, 0, 1});
    EXPECT_THROW(p(1ULL << 10), DomainError);
}
