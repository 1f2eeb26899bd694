#include "genlab/bhp.hpp"
#include "genlab/corpus.hpp"
#include "genlab/errors.hpp"
#include "genlab/machine_io.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace genlab;

namespace {

std::shared_ptr<const TuringMachine> corpus(const std::string& name) {
    return load_machine(std::string(GENLAB_CORPUS_DIR) + "/machines/" + name + ".json");
}

Word b(const char* s) { return Word::binary(s); }

LongevityGuard roomy_guard(std::size_t mbar_length) {
    return LongevityGuard::from_polynomial(Polynomial({mbar_length + 6, 5}));
}

bool high_nu(const Word& y) { return nu_mass(y) > pow2_neg(y.size()); }

}  // namespace

TEST(Universal, FormOneRunsTheCodedMachine) {
    const auto u = universal_machine();
    const Word halt1 = machine_code(*corpus("halt1"));
    const Word loop = machine_code(*corpus("loop"));
    const auto first0 = corpus("first0");
    EXPECT_EQ(min_halting_steps(*u, halt1 + b("0") + b("101"), 50), 1u);
    EXPECT_FALSE(halts_within(*u, loop + b("0") + b("1"), 500));
    for (const char* w : {"", "0", "1", "110", "1110", "111"})
        EXPECT_EQ(min_halting_steps(*u, machine_code(*first0) + b("0") + b(w), 50),
                  min_halting_steps(*first0, b(w), 50))
            << w;
}

TEST(Universal, GarbageNeverHalts) {
    const auto u = universal_machine();
    for (std::size_t n = 0; n <= 10; ++n)
        for_each_in_sphere(Alphabet::binary(), n, [&](const Word& w) { ASSERT_FALSE(halts_within(*u, w, 1000)) << w; });
}

TEST(Universal, RegistryCodes) {
    const auto u = universal_machine({corpus("halt1"), corpus("loop")});
    EXPECT_TRUE(halts_within(*u, registry_code(0) + b("0") + b("11"), 1));
    EXPECT_FALSE(halts_within(*u, registry_code(1) + b("0") + b("11"), 100));
    EXPECT_FALSE(halts_within(*u, registry_code(2) + b("0") + b("11"), 100));
}

TEST(Red2BHU, GuardMustCoverUniversalOverhead) {
    const auto m = corpus("first0");
    const auto mbar = machine_code(*m);
    EXPECT_THROW(red2bhu(*m, LongevityGuard::from_polynomial(Polynomial({1, 2}))), ConstructionError);
    EXPECT_NO_THROW(red2bhu(*m, universal_guard(mbar.size())));
}

TEST(Red2BHU, PreservesBoundedHalting) {
    for (const char* name : {"first0", "halt1", "loop", "branch", "contains11"}) {
        const auto m = corpus(name);
        const auto r = red2bhu(*m, roomy_guard(machine_code(*m).size()));
        EXPECT_EQ(r.mbar, machine_code(*m));
        for (std::size_t n = 0; n <= 9; ++n)
            for_each_in_sphere(Alphabet::binary(), n, [&](const Word& y) {
                const Word z = r.f(y);
                ASSERT_EQ(z.size(), r.h(n));
                ASSERT_EQ(bh_member(*r.u, z), bh_member(*m, y)) << name << " y=" << y;
            });
    }
}

TEST(Red2BHU, RegistryVariantPreservesBoundedHalting) {
    const MachinePtr m = corpus("first0");
    const auto r = red2bhu(m, roomy_guard(registry_code(0).size()));
    for (std::size_t n = 0; n <= 9; ++n)
        for_each_in_sphere(Alphabet::binary(), n, [&](const Word& y) {
            ASSERT_EQ(bh_member(*r.u, r.f(y)), bh_member(*m, y)) << y;
        });
}

TEST(Red2BHU, MeasureFactorFailsOnlyOnHighWordsWithLongNumerals) {
    // Low-branch words need 2^{|n̄|} <= 4n², which always holds. High-branch
    // words need 2^{|n̄|} <= 2n², which fails when 2^k <= n < √2·2^k.
    const auto m = corpus("first0");
    const auto r = red2bhu(*m, roomy_guard(machine_code(*m).size()));
    const Rational two_m(pow2(r.mbar.size() + 1));
    auto factor = [&](std::size_t n) -> Rational {
        const auto k = std::max<std::size_t>(n, 1);
        return Rational(16) * Rational(Natural(static_cast<unsigned long>(k * k))) *
               Rational(Natural(static_cast<unsigned long>(r.h(n)))) * two_m;
    };
    const auto rep = verify_measure_factor(dbh_nu(), r.f, factor, 10, "universal measure factor");
    EXPECT_EQ(rep.checked, (std::uint64_t{1} << 11) - 1);
    for (const auto& v : rep.violations) {
        const Word y = Word::binary(v.witness);
        EXPECT_TRUE(high_nu(y)) << v.witness;
        const auto n = static_cast<double>(y.size());
        EXPECT_GT(std::pow(2.0, static_cast<double>(numeral_length(y.size()))), 2 * n * n) << v.witness;
    }
    // ν(1⁰0) = 1 at n = 1: x′ = 1 and the numeral costs 4 bits against 2n² = 2.
    EXPECT_FALSE(rep.passed());
}
