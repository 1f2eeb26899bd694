#include "cli_common.hpp"

#include "genlab/bhp.hpp"
#include "genlab/machine_io.hpp"
#include "genlab/reductions.hpp"

#include <CLI11.hpp>

namespace genlab::cli {

namespace {

struct ReduceArgs {
    Common common;
    std::string file;
    std::string guard;
    std::string emit_fixture;
};

LongevityGuard bundle_guard(const Bundle& b) {
    return b.guard ? *b.guard : LongevityGuard::from_polynomial(Polynomial({1, 2}));
}

const Decider& bundle_decider(const Bundle& b) {
    if (!b.decider) throw UsageError("bundle has no \"decider\" machine");
    return *b.decider;
}

int finish(const Common& c, nlohmann::json j, bool passed) {
    j["passed"] = passed;
    emit(c, dump(j));
    return passed ? kPass : kFail;
}

}  // namespace

void register_reduce(CLI::App& app, int& exit_code) {
    auto* reduce = app.add_subcommand("reduce", "Build a reduction and verify it on a finite horizon");
    reduce->require_subcommand(1);
    auto args = std::make_shared<ReduceArgs>();

    auto* to_bin = reduce->add_subcommand("to-binary", "Binary-alphabet reduction of a bundle's problem");
    to_bin->add_option("bundle", args->file, "Problem bundle")->required();
    to_bin->add_option("--emit", args->emit_fixture, "Also write the reduction as a JSON fixture");
    add_common(*to_bin, args->common);
    to_bin->callback([args, &exit_code] {
        require_within_cap(args->common, kSphereCap, "to-binary");
        const auto bundle = load_bundle(args->file);
        const auto img = to_binary(bundle.problem);
        const auto rep = verify_cs(img.f, bundle.problem.mu, img.image.mu, args->common.n_max);
        nlohmann::json sizes = nlohmann::json::array();
        for (std::uint64_t n = 0; n <= args->common.n_max; ++n) sizes.push_back({{"n", n}, {"S_f", img.f.size_growth(n)}});
        std::string sigma;
        for (std::size_t i = 0; i < bundle.problem.alphabet.size(); ++i)
            sigma += bundle.problem.alphabet.symbol(static_cast<Symbol>(i));
        const nlohmann::json fixture{{"kind", "bin_alph"}, {"sigma", sigma}};
        if (!args->emit_fixture.empty()) {
            Common to_file = args->common;
            to_file.out = args->emit_fixture;
            emit(to_file, dump(fixture));
        }
        exit_code = finish(args->common,
                           {{"reduction", img.f.name()}, {"fixture", fixture}, {"size_growth", sizes}, {"cs", rep.to_json()}},
                           rep.passed());
    });

    auto* bh = reduce->add_subcommand("bh", "Reduce a bundle's problem to bounded halting (red2bh)");
    bh->add_option("bundle", args->file, "Problem bundle with decider and guard")->required();
    add_common(*bh, args->common);
    bh->callback([args, &exit_code] {
        require_within_cap(args->common, kNtmCap, "reduce bh");
        const auto bundle = load_bundle(args->file);
        const auto r = red2bh(bundle.problem, bundle_decider(bundle), bundle_guard(bundle));
        CheckReport membership;
        membership.property = "x in D <=> f(x) in BH(M)";
        membership.horizon = args->common.n_max;
        for (std::size_t n = 0; n <= args->common.n_max; ++n)
            for_each_in_sphere(Alphabet::binary(), n, [&](const Word& x) {
                ++membership.checked;
                const bool left = bundle.problem.member(x);
                if (left != bh_member(*r.m, r.f(x)))
                    membership.add(x.to_string(), left ? "member" : "non-member", left ? "non-member" : "member");
            });
        const auto measure = verify_measure_decrease(bundle.problem.mu, r, args->common.n_max);
        nlohmann::json j{{"guard", r.g.label},
                         {"membership", membership.to_json()},
                         {"measure", measure.lemma.to_json()},
                         {"proof_bounds", measure.per_branch.to_json()}};
        if (measure.min_ratio) j["min_ratio"] = to_string(*measure.min_ratio);
        exit_code = finish(args->common, j, membership.passed() && measure.lemma.passed());
    });

    auto* uni = reduce->add_subcommand("universal", "Reduce DBH(M) to DBH(U,h) (red2bhu)");
    uni->add_option("machine", args->file, "Machine file over {0,1}")->required();
    uni->add_option("--guard", args->guard, "h(n); defaults to the smallest accepted guard");
    add_common(*uni, args->common);
    uni->callback([args, &exit_code] {
        const auto m = load_machine(args->file);
        require_within_cap(args->common, m->deterministic() ? kSphereCap : kNtmCap, "reduce universal");
        const Word mbar = machine_code(*m);
        const auto h = args->guard.empty() ? universal_guard(mbar.size())
                                           : LongevityGuard::from_polynomial(Polynomial::parse(args->guard));
        const auto r = red2bhu(*m, h);
        CheckReport membership;
        membership.property = "y in BH(M) <=> f(y) in BH(U)";
        membership.horizon = args->common.n_max;
        for (std::size_t n = 0; n <= args->common.n_max; ++n)
            for_each_in_sphere(Alphabet::binary(), n, [&](const Word& y) {
                ++membership.checked;
                const bool left = bh_member(*m, y);
                if (left != bh_member(*r.u, r.f(y)))
                    membership.add(y.to_string(), left ? "member" : "non-member", left ? "non-member" : "member");
            });
        const Rational two_m(pow2(mbar.size() + 1));
        auto factor = [&](std::size_t n) -> Rational {
            const auto k = std::max<std::size_t>(n, 1);
            return Rational(16) * Rational(Natural(static_cast<unsigned long>(k * k))) *
                   Rational(Natural(static_cast<unsigned long>(r.h(n)))) * two_m;
        };
        const auto measure =
            verify_measure_factor(dbh_nu(), r.f, factor, args->common.n_max, "nu(f(y)) 16|y|^2 h(|y|) 2^(|M|+1) >= nu(y)");
        exit_code = finish(args->common,
                           {{"mbar_length", mbar.size()},
                            {"h", r.h.label},
                            {"membership", membership.to_json()},
                            {"measure", measure.to_json()}},
                           membership.passed() && measure.passed());
    });

    auto* pipe = reduce->add_subcommand("pipeline", "red2bh, restriction, red2bhu, restriction");
    pipe->add_option("bundle", args->file, "Problem bundle with decider and guard")->required();
    add_common(*pipe, args->common);
    pipe->callback([args, &exit_code] {
        require_within_cap(args->common, kNtmCap, "reduce pipeline");
        const auto bundle = load_bundle(args->file);
        const auto rep = completeness_pipeline(bundle.problem, bundle_decider(bundle), bundle_guard(bundle),
                                               args->common.n_max);
        exit_code = finish(args->common, rep.to_json(), rep.passed());
    });
}

}  // namespace genlab::cli
