#pragma once

#include "genlab/bhp.hpp"
#include "genlab/measure.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/reduction.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>

namespace genlab {

/// "n^2+n+6" or a coefficient list [6, 1, 1].
Polynomial polynomial_from_json(const nlohmann::json& j);

/// {"kind":"uniform","alphabet":"01"} | {"kind":"dbh_nu"} |
/// {"kind":"table","alphabet":"01","entries":{"00":"1/2",…}} |
/// {"kind":"named","name":"geometric"} |
/// {"kind":"induced","base":…,"subset":…} | {"kind":"transferred","reduction":…,"base":…}
SphericalEnsemble ensemble_from_json(const nlohmann::json& j);

/// {"name":"all"} | {"name":"cg","g":"2n+1"} | {"name":"contains11"} |
/// {"name":"example41_image"} | {"name":"words","alphabet":"01","words":["00",…]}
WordSet subset_from_json(const nlohmann::json& j);

/// {"kind":"identity","alphabet":"01","density":"2"} | {"kind":"example41"} |
/// {"kind":"bin_alph","sigma":"abc"}
Reduction reduction_from_json(const nlohmann::json& j);

/// Problem bundle: {"problem":{"ensemble":…,"members":"contains11"}, members being
/// "contains11", "example41_image" or "starts_with_first",
/// "decider":"machines/contains11.json","decider_guard":"n+2","guard":[6,1,1]}.
/// Relative machine paths resolve against `base_dir`.
struct Bundle {
    DistProblem problem;
    std::optional<Decider> decider;
    std::optional<LongevityGuard> guard;
    nlohmann::json raw;
};

Bundle bundle_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace genlab
