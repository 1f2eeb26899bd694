#include "cli_common.hpp"

#include "genlab/errors.hpp"
#include "genlab/genericity.hpp"
#include "genlab/machine_io.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace genlab::cli {

namespace {

struct SeqArgs {
    Common common;
    std::string ensemble;
    std::string target;  // subset for density, machine for control-seq
    std::string poly = "n";
    std::size_t n_min = 0;
};

nlohmann::json points_json(const std::vector<std::pair<std::size_t, double>>& pts,
                           const std::vector<std::pair<std::size_t, Rational>>& exact) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [n, v] : exact) rows.push_back({{"n", n}, {"value", to_string(v)}});
    nlohmann::json j{{"rows", rows}};
    try {
        j["decay"] = classify_decay(pts).summary();
    } catch (const DomainError&) {
        j["decay"] = "HEURISTIC: too few points to classify";
    }
    return j;
}

std::string render(const Common& c, const std::string& title, const std::vector<std::pair<std::size_t, double>>& pts,
                   const std::vector<std::pair<std::size_t, Rational>>& exact, const std::function<void(std::ostream&)>& csv) {
    std::ostringstream out;
    if (c.format == "svg") {
        write_svg(out, title, pts);
    } else if (c.format == "json") {
        auto j = points_json(pts, exact);
        j["title"] = title;
        out << dump(j);
    } else {
        csv(out);
    }
    return out.str();
}

// Sampled density: hits/K per sphere, written with the control-sequence CSV
// schema (mode "sampled", samples, seed).
ControlSequence sampled_density(const SphericalEnsemble& mu, const WordSet& s, const SeqArgs& a) {
    ControlSequence seq;
    seq.machine = s.label;
    seq.mode = ControlMode::Sampled;
    seq.seed = a.common.seed;
    seq.samples = a.common.sample;
    for (std::size_t n = a.n_min; n <= a.common.n_max; ++n) {
        std::uint64_t hits = 0;
        for (const auto& x : sample_sphere(mu, n, a.common.sample, a.common.seed)) hits += s.contains(x);
        Rational v(Natural(static_cast<unsigned long>(hits)), Natural(static_cast<unsigned long>(a.common.sample)));
        v.canonicalize();
        seq.points.push_back({n, v, a.common.sample, 0});
    }
    return seq;
}

std::vector<std::pair<std::size_t, Rational>> exact_rows(const ControlSequence& seq) {
    std::vector<std::pair<std::size_t, Rational>> rows;
    for (const auto& p : seq.points) rows.emplace_back(p.n, p.value);
    return rows;
}

}  // namespace

void register_sequences(CLI::App& app, int& exit_code) {
    auto args = std::make_shared<SeqArgs>();

    auto* density_cmd = app.add_subcommand("density", "Density sequence n -> mu_n(S ∩ Σⁿ)");
    density_cmd->add_option("ensemble", args->ensemble, "Ensemble file or name (uniform, dbh_nu, geometric, …)")->required();
    density_cmd->add_option("subset", args->target, "Subset file or all | contains11 | example41_image | cg:<poly>")
        ->required();
    density_cmd->add_option("--n-min", args->n_min, "First sphere")->capture_default_str();
    add_common(*density_cmd, args->common, true);
    density_cmd->callback([args, &exit_code] {
        const auto mu = load_ensemble(args->ensemble);
        const auto s = load_subset(args->target);
        const std::string title = "density of " + s.label + " under " + mu.describe();
        if (args->common.sample > 0) {
            const auto seq = sampled_density(mu, s, *args);
            emit(args->common, render(args->common, title, plot_points(seq), exact_rows(seq),
                                      [&](std::ostream& o) { write_csv(o, seq); }));
        } else {
            require_within_cap(args->common, kSphereCap, "density");
            const auto seq = density_sequence(mu, s, args->n_min, args->common.n_max);
            std::vector<std::pair<std::size_t, Rational>> rows;
            for (std::size_t i = 0; i < seq.values.size(); ++i) rows.emplace_back(seq.n_min + i, seq.values[i]);
            emit(args->common, render(args->common, title, plot_points(seq), rows,
                                      [&](std::ostream& o) { write_csv(o, seq); }));
        }
        exit_code = kPass;
    });

    auto* control = app.add_subcommand("control-seq", "Control sequence C_{M,p}(n) under an ensemble");
    control->add_option("machine", args->target, "Machine file")->required();
    control->add_option("ensemble", args->ensemble, "Ensemble file or name")->required();
    control->add_option("--poly", args->poly, "Time bound p(n)")->capture_default_str();
    control->add_option("--n-min", args->n_min, "First sphere")->capture_default_str();
    add_common(*control, args->common, true);
    control->callback([args, &exit_code] {
        const auto m = load_machine(args->target);
        const auto mu = load_ensemble(args->ensemble);
        const auto p = Polynomial::parse(args->poly);
        ControlOptions opts;
        opts.n_min = args->n_min;
        opts.seed = args->common.seed;
        if (args->common.sample > 0) {
            opts.mode = ControlMode::Sampled;
            opts.samples = args->common.sample;
        } else {
            require_within_cap(args->common, m->deterministic() ? kSphereCap : kNtmCap, "control-seq");
        }
        const auto seq = control_sequence(*m, p, mu, args->common.n_max, opts);
        const std::string title = "C_{" + m->name() + "," + p.to_string() + "} under " + mu.describe();
        emit(args->common, render(args->common, title, plot_points(seq), exact_rows(seq),
                                  [&](std::ostream& o) { write_csv(o, seq); }));
        exit_code = kPass;
    });
}

}  // namespace genlab::cli
