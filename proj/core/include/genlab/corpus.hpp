#pragma once

#include "genlab/measure.hpp"
#include "genlab/reductions.hpp"

#include <string>
#include <utility>
#include <vector>

namespace genlab {

/// Horizon of the rule-generated table ensembles.
inline constexpr std::size_t kCorpusTableSpheres = 10;

/// Binary table: the k-th word of Σⁿ has mass 2^{-k}; the last word takes the
/// remainder 2^{-(2ⁿ-1)}. On n = 2 this is {00:1/2, 01:1/4, 10:1/8, 11:1/8}.
SphericalEnsemble geometric_ensemble(std::size_t n_max = kCorpusTableSpheres);
/// The mirror image of geometric_ensemble in lex order.
SphericalEnsemble reverse_geometric_ensemble(std::size_t n_max = kCorpusTableSpheres);
/// 0ⁿ has mass 2/3, the other words share 1/3 equally.
SphericalEnsemble spike_ensemble(std::size_t n_max = kCorpusTableSpheres);
/// (uniform + spike)/2; dominates uniform/2 pointwise.
SphericalEnsemble half_spike_ensemble(std::size_t n_max = kCorpusTableSpheres);

/// uniform, geometric, reverse-geometric and spike over {0,1}.
std::vector<std::pair<std::string, SphericalEnsemble>> registered_ensembles();

/// Lookup by name: "uniform", "dbh_nu", or any registered or half-spike name.
SphericalEnsemble ensemble_by_name(const std::string& name);

/// Binary words containing "11".
WordSet contains_11();

/// Image of 0 ↦ 00, 1 ↦ 1: words whose maximal runs of 0 have even length.
WordSet example41_image();

/// (contains-11, μ) over {0,1}.
DistProblem contains11_problem(const SphericalEnsemble& mu);

}  // namespace genlab
