#include "genlab/bhp.hpp"

#include "genlab/errors.hpp"

#include <algorithm>

namespace genlab {

bool PipelineReport::passed() const {
    return std::all_of(stages.begin(), stages.end(),
                       [](const StageReport& s) { return s.membership.passed() && s.measure.passed(); });
}

nlohmann::json PipelineReport::to_json() const {
    nlohmann::json j;
    j["passed"] = passed();
    j["stages"] = nlohmann::json::array();
    for (const auto& s : stages)
        j["stages"].push_back({{"stage", s.stage}, {"membership", s.membership.to_json()}, {"measure", s.measure.to_json()}});
    return j;
}

namespace {

const Alphabet& bin() { return Alphabet::binary(); }

Rational nat(std::uint64_t v) { return Rational(Natural(std::to_string(v))); }

// Identity restriction DBH(M, g) → DBH(M): same positive set, and
// ν(u) >= ν_g(u)/(n+1) checked on small spheres and on the given words. On
// C(g) ν_g = n·ν; the +1 covers sphere 0, where ν_g falls back to ν.
StageReport restriction_stage(const std::string& label, const LongevityGuard& g, const std::vector<Word>& words,
                              std::size_t sphere_horizon) {
    StageReport s;
    s.stage = label;
    s.membership.property = "membership (identity)";
    s.membership.horizon = sphere_horizon;
    s.membership.checked = words.size();
    s.membership.notes.push_back("identity map: positive sets coincide by definition");
    const SphericalEnsemble nug = nu_g(g);
    s.measure = verify_cm(identity_reduction(bin()), nug, dbh_nu(), Polynomial::linear(1, 1), sphere_horizon);
    s.measure.property = "CM density n+1";
    for (const auto& u : words) {
        ++s.measure.checked;
        const Rational lhs = nu_mass(u) * nat(u.size() + 1);
        const Rational rhs = nug.mass(u);
        if (lhs < rhs) s.measure.add(u.to_string(), ">= " + to_string(rhs), to_string(lhs), "nu(u)*(|u|+1) >= nu_g(u)");
    }
    return s;
}

}  // namespace

PipelineReport completeness_pipeline(const DistProblem& problem, const Decider& decider, const LongevityGuard& g,
                                     std::size_t n_max) {
    PipelineReport out;
    constexpr std::size_t kRestrictionSpheres = 10;

    Red2BH r1 = [&] {
        try {
            return red2bh(problem, decider, g);
        } catch (const ConstructionError& e) {
            throw ConstructionError(std::string("stage red2bh: ") + e.what());
        }
    }();

    // Stage 1: (D, μ) → DBH(M, g).
    StageReport s1;
    s1.stage = "red2bh";
    s1.membership.property = "x in D <=> f(x) in BH(M)";
    s1.membership.horizon = n_max;
    std::vector<Word> images;
    for (std::size_t n = 0; n <= n_max; ++n)
        for_each_in_sphere(bin(), n, [&](const Word& x) {
            ++s1.membership.checked;
            const Word y = r1.f.apply(x);
            images.push_back(y);
            const bool left = problem.member(x);
            const bool right = bh_member(*r1.m, y);
            if (left != right) s1.membership.add(x.to_string(), left ? "member" : "non-member", right ? "member" : "non-member");
        });
    s1.measure = verify_measure_decrease(problem.mu, r1, n_max).lemma;
    s1.measure.notes.push_back("checked against plain nu: f(x) lies outside C(g)");
    out.stages.push_back(std::move(s1));

    // Stage 2: DBH(M, g) → DBH(M).
    out.stages.push_back(restriction_stage("restrict(" + r1.g.label + ")", r1.g, images, kRestrictionSpheres));

    // Stage 3: DBH(M) → DBH(U, h), with M held in U's registry.
    const Word mbar = registry_code(0);
    const LongevityGuard need = universal_guard(mbar.size());
    LongevityGuard g3{r1.g.label + " + " + need.label,
                      [g1 = r1.g, need](std::uint64_t n) { return g1(n) + need(n); }, r1.g.envelope + need.envelope};
    Red2BHU r3 = [&] {
        try {
            return red2bhu(r1.m, g3);
        } catch (const ConstructionError& e) {
            throw ConstructionError(std::string("stage red2bhu: ") + e.what());
        }
    }();
    StageReport s3;
    s3.stage = "red2bhu";
    s3.membership.property = "y in BH(M) <=> f(y) in BH(U)";
    s3.membership.horizon = n_max;
    s3.measure.property = "measure factor 16|y|^2 h(|y|) 2^(|M|+1)";
    s3.measure.horizon = n_max;
    std::vector<Word> images3;
    std::vector<Word> inputs = images;
    for (std::size_t n = 0; n <= n_max; ++n) for_each_in_sphere(bin(), n, [&](const Word& y) { inputs.push_back(y); });
    const Rational two_m = Rational(pow2(mbar.size() + 1));
    for (const auto& y : inputs) {
        ++s3.membership.checked;
        ++s3.measure.checked;
        const Word z = r3.f.apply(y);
        images3.push_back(z);
        const bool left = bh_member(*r1.m, y);
        const bool right = bh_member(*r3.u, z);
        if (left != right) s3.membership.add(y.to_string(), left ? "member" : "non-member", right ? "member" : "non-member");
        const Rational factor = Rational(16) * nat(std::max<std::size_t>(y.size(), 1) * std::max<std::size_t>(y.size(), 1)) *
                                nat(r3.h(y.size())) * two_m;
        const Rational lhs = nu_mass(z) * factor;
        const Rational m = nu_mass(y);
        if (lhs < m) s3.measure.add(y.to_string(), ">= " + to_string(m), to_string(lhs));
    }
    out.stages.push_back(std::move(s3));

    // Stage 4: DBH(U, h) → DBH(U).
    out.stages.push_back(restriction_stage("restrict(" + r3.h.label + ")", r3.h, images3, kRestrictionSpheres));
    return out;
}

}  // namespace genlab
