#include "genlab/bhp.hpp"
#include "genlab/corpus.hpp"
#include "genlab/genericity.hpp"
#include "genlab/machine_io.hpp"
#include "genlab/reductions.hpp"

#include <benchmark/benchmark.h>

using namespace genlab;

namespace {

MachinePtr corpus(const std::string& name) {
    return load_machine(std::string(GENLAB_CORPUS_DIR) + "/machines/" + name + ".json");
}

// Nondeterministic search over every word of a sphere.
void BM_NtmSphereSearch(benchmark::State& state) {
    const auto m = corpus("contains11");
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t halted = 0;
        for_each_in_sphere(Alphabet::binary(), n, [&](const Word& x) { halted += halts_within(*m, x, n + 2); });
        benchmark::DoNotOptimize(halted);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sphere_size(Alphabet::binary(), n)));
}
BENCHMARK(BM_NtmSphereSearch)->DenseRange(6, 12, 2);

void BM_NuSphereSum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sphere_sum(dbh_nu(), n));
}
BENCHMARK(BM_NuSphereSum)->DenseRange(8, 16, 4);

void BM_InvertMuStar(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto nu = dbh_nu();
    const Rational t(1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(invert_mu_star(nu, n, t));
}
BENCHMARK(BM_InvertMuStar)->RangeMultiplier(2)->Range(8, 128);

void BM_XDoublePrimeGeometric(benchmark::State& state) {
    const auto mu = geometric_ensemble();
    for (auto _ : state)
        for_each_in_sphere(Alphabet::binary(), 10, [&](const Word& x) { benchmark::DoNotOptimize(x_double_prime(mu, x)); });
}
BENCHMARK(BM_XDoublePrimeGeometric);

void BM_VerifyCsTernary(benchmark::State& state) {
    const Alphabet abc = Alphabet::from_chars("abc");
    DistProblem p{"all", abc, [](const Word&) { return true; }, SphericalEnsemble::uniform(abc)};
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const auto img = to_binary(p);
        benchmark::DoNotOptimize(verify_cs(img.f, p.mu, img.image.mu, n).passed());
    }
}
BENCHMARK(BM_VerifyCsTernary)->DenseRange(3, 6, 1);

void BM_SampledControl(benchmark::State& state) {
    const auto m = corpus("first1loop");
    const auto mu = spike_ensemble();
    for (auto _ : state) {
        ControlOptions opts;
        opts.mode = ControlMode::Sampled;
        opts.samples = static_cast<std::uint64_t>(state.range(0));
        opts.seed = 1;
        benchmark::DoNotOptimize(control_sequence(*m, Polynomial({1, 1}), mu, 10, opts));
    }
}
BENCHMARK(BM_SampledControl)->Arg(1000)->Arg(10000);

}  // namespace
BENCHMARK_MAIN();
