#include "cli_common.hpp"

#include "genlab/bhp.hpp"
#include "genlab/reductions.hpp"

#include <CLI11.hpp>

namespace genlab::cli {

namespace {

struct VerifyArgs {
    Common common;
    std::vector<std::string> files;
    std::string density;
};

int report(const Common& c, const CheckReport& r, nlohmann::json extra = nlohmann::json::object()) {
    extra["report"] = r.to_json();
    extra["passed"] = r.passed();
    emit(c, dump(extra));
    return r.passed() ? kPass : kFail;
}

void expect_files(const VerifyArgs& a, std::size_t n, const std::string& usage) {
    if (a.files.size() != n) throw UsageError("expected " + usage);
}

}  // namespace

void register_verify(CLI::App& app, int& exit_code) {
    auto* verify = app.add_subcommand("verify", "Check a claim against brute-force oracles");
    verify->require_subcommand(1);
    auto args = std::make_shared<VerifyArgs>();
    auto files = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("files", args->files, what);
        add_common(*sub, args->common);
    };

    auto* cs = verify->add_subcommand("cs", "Size invariance and transfer equation");
    files(cs, "REDUCTION SOURCE-ENSEMBLE TARGET-ENSEMBLE");
    cs->callback([args, &exit_code] {
        expect_files(*args, 3, "REDUCTION SOURCE-ENSEMBLE TARGET-ENSEMBLE");
        require_within_cap(args->common, kSphereCap, "verify cs");
        const auto f = load_reduction(args->files[0]);
        exit_code = report(args->common, verify_cs(f, load_ensemble(args->files[1]), load_ensemble(args->files[2]),
                                                   args->common.n_max));
    });

    auto* cm = verify->add_subcommand("cm", "Length preservation and nu(f(x)) >= mu(x)/d(|x|)");
    files(cm, "REDUCTION SOURCE-ENSEMBLE TARGET-ENSEMBLE");
    cm->add_option("--density", args->density, "d(n); defaults to the reduction's declared density");
    cm->callback([args, &exit_code] {
        expect_files(*args, 3, "REDUCTION SOURCE-ENSEMBLE TARGET-ENSEMBLE");
        require_within_cap(args->common, kSphereCap, "verify cm");
        const auto f = load_reduction(args->files[0]);
        std::optional<Polynomial> d = f.density();
        if (!args->density.empty()) d = Polynomial::parse(args->density);
        if (!d) throw UsageError("the reduction declares no density; pass --density");
        exit_code = report(args->common,
                           verify_cm(f, load_ensemble(args->files[1]), load_ensemble(args->files[2]), *d, args->common.n_max),
                           {{"density", d->to_string()}});
    });

    auto* transfer_cmd = verify->add_subcommand("transfer", "Recompute a transferred ensemble by direct summation");
    files(transfer_cmd, "ENSEMBLE (kind transferred)");
    transfer_cmd->callback([args, &exit_code] {
        expect_files(*args, 1, "one transferred-ensemble file");
        require_within_cap(args->common, kSphereCap, "verify transfer");
        const auto j = read_json_file(args->files[0]);
        if (j.value("kind", std::string()) != "transferred") throw UsageError("ensemble kind is not \"transferred\"");
        exit_code = report(args->common, verify_transfer(reduction_from_json(j.at("reduction")),
                                                         ensemble_from_json(j.at("base")), ensemble_from_json(j),
                                                         args->common.n_max));
    });

    auto* induced_cmd = verify->add_subcommand("induced", "Recompute an induced ensemble by direct summation");
    files(induced_cmd, "ENSEMBLE (kind induced)");
    induced_cmd->callback([args, &exit_code] {
        expect_files(*args, 1, "one induced-ensemble file");
        require_within_cap(args->common, kSphereCap, "verify induced");
        const auto j = read_json_file(args->files[0]);
        if (j.value("kind", std::string()) != "induced") throw UsageError("ensemble kind is not \"induced\"");
        exit_code = report(args->common, verify_induced(ensemble_from_json(j.at("base")), subset_from_json(j.at("subset")),
                                                        ensemble_from_json(j), args->common.n_max));
    });

    auto* bhm = verify->add_subcommand("bh-measure", "nu(f(x)) 16|x|^2 g(|x|) >= mu(x) for red2bh");
    files(bhm, "BUNDLE");
    bhm->callback([args, &exit_code] {
        expect_files(*args, 1, "one bundle file");
        require_within_cap(args->common, kSphereCap, "verify bh-measure");
        const auto bundle = load_bundle(args->files[0]);
        if (!bundle.decider) throw UsageError("bundle has no \"decider\" machine");
        const auto guard = bundle.guard ? *bundle.guard : LongevityGuard::from_polynomial(Polynomial({1, 2}));
        const auto r = red2bh(bundle.problem, *bundle.decider, guard);
        const auto rep = verify_measure_decrease(bundle.problem.mu, r, args->common.n_max);
        nlohmann::json extra{{"proof_bounds", rep.per_branch.to_json()}};
        if (rep.min_ratio) extra["min_ratio"] = to_string(*rep.min_ratio);
        exit_code = report(args->common, rep.lemma, extra);
    });

    auto* sums = verify->add_subcommand("nu-sums", "Sphere sums of the bounded-halting ensemble nu");
    files(sums, "(none)");
    sums->callback([args, &exit_code] {
        expect_files(*args, 0, "no files");
        require_within_cap(args->common, kSphereCap, "verify nu-sums");
        CheckReport r;
        r.property = "sum over {0,1}^n of nu_n = 1";
        r.horizon = args->common.n_max;
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t n = 0; n <= args->common.n_max; ++n) {
            const Rational s = sphere_sum(dbh_nu(), n);
            ++r.checked;
            rows.push_back({{"n", n}, {"sum", to_string(s)}});
            if (s != 1) r.add(std::to_string(n), "1", to_string(s));
        }
        exit_code = report(args->common, r, {{"sums", rows}});
    });
}

}  // namespace genlab::cli
