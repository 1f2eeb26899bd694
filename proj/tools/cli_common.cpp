#include "cli_common.hpp"

#include "genlab/corpus.hpp"
#include "genlab/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace genlab::cli {

namespace fs = std::filesystem;

void add_common(CLI::App& app, Common& c, bool with_sampling) {
    app.add_option("--n-max", c.n_max, "Largest sphere to enumerate")->capture_default_str();
    app.add_option("--budget", c.budget, "Step budget")->capture_default_str();
    app.add_option("--cap", c.cap, "Safety cap on --n-max (default 16, or 6 for exhaustive NTM search)");
    app.add_option("--out", c.out, "Write output to this file instead of stdout");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg", "text"}));
    app.add_option("--seed", c.seed, "Seed for sampled runs")->capture_default_str();
    if (with_sampling) app.add_option("--sample", c.sample, "Sample K words per sphere instead of enumerating");
}

void require_within_cap(const Common& c, std::size_t default_cap, const std::string& what) {
    const std::size_t cap = c.cap ? c.cap : default_cap;
    if (c.n_max > cap)
        throw UsageError(what + ": --n-max " + std::to_string(c.n_max) + " exceeds the safety cap " + std::to_string(cap) +
                         " (raise it with --cap, or use --sample where available)");
}

SphericalEnsemble load_ensemble(const std::string& arg) {
    if (fs::exists(arg)) return ensemble_from_json(read_json_file(arg));
    try {
        return ensemble_by_name(arg);
    } catch (const DomainError&) {
        throw UsageError("'" + arg + "' is neither an ensemble file nor a registered ensemble name");
    }
}

WordSet load_subset(const std::string& arg) {
    if (fs::exists(arg)) return subset_from_json(read_json_file(arg));
    if (arg.rfind("cg:", 0) == 0) return subset_from_json({{"name", "cg"}, {"g", arg.substr(3)}});
    return subset_from_json({{"name", arg}});
}

Reduction load_reduction(const std::string& path) { return reduction_from_json(read_json_file(path)); }

Bundle load_bundle(const std::string& path) {
    return bundle_from_json(read_json_file(path), fs::path(path).parent_path());
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    const fs::path target(c.out);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + tmp.string() + "'");
        f << text;
    }
    fs::rename(tmp, target);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace genlab::cli
