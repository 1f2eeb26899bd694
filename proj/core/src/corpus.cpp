#include "genlab/corpus.hpp"

#include "genlab/bhp.hpp"
#include "genlab/errors.hpp"

namespace genlab {

namespace {

using Rule = std::function<Rational(std::uint64_t rank, std::uint64_t size)>;

SphericalEnsemble from_rule(std::size_t n_max, const Rule& rule) {
    std::map<Word, Rational> entries;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto size = sphere_size(Alphabet::binary(), n);
        std::uint64_t rank = 0;
        for_each_in_sphere(Alphabet::binary(), n, [&](const Word& x) {
            Rational q = rule(++rank, size);
            if (q != 0) entries.emplace(x, std::move(q));
        });
    }
    return SphericalEnsemble::table(Alphabet::binary(), entries);
}

Rational geometric_rule(std::uint64_t k, std::uint64_t size) {
    if (size == 1) return 1;
    return k < size ? pow2_neg(k) : pow2_neg(size - 1);
}

Rational spike_rule(std::uint64_t k, std::uint64_t size) {
    if (size == 1) return 1;
    if (k == 1) return Rational(2, 3);
    Rational r(Natural(1), Natural(3) * Natural(std::to_string(size - 1)));
    r.canonicalize();
    return r;
}

}  // namespace

SphericalEnsemble geometric_ensemble(std::size_t n_max) { return from_rule(n_max, geometric_rule); }

SphericalEnsemble reverse_geometric_ensemble(std::size_t n_max) {
    return from_rule(n_max, [](std::uint64_t k, std::uint64_t size) { return geometric_rule(size - k + 1, size); });
}

SphericalEnsemble spike_ensemble(std::size_t n_max) { return from_rule(n_max, spike_rule); }

SphericalEnsemble half_spike_ensemble(std::size_t n_max) {
    return from_rule(n_max, [](std::uint64_t k, std::uint64_t size) {
        Rational u(Natural(1), Natural(std::to_string(size)));
        u.canonicalize();
        return Rational((u + spike_rule(k, size)) / 2);
    });
}

std::vector<std::pair<std::string, SphericalEnsemble>> registered_ensembles() {
    return {{"uniform", SphericalEnsemble::uniform(Alphabet::binary())},
            {"geometric", geometric_ensemble()},
            {"reverse-geometric", reverse_geometric_ensemble()},
            {"spike", spike_ensemble()}};
}

SphericalEnsemble ensemble_by_name(const std::string& name) {
    if (name == "dbh_nu") return dbh_nu();
    if (name == "half-spike") return half_spike_ensemble();
    for (auto& [n, e] : registered_ensembles())
        if (n == name) return e;
    throw ParseError("unknown ensemble '" + name + "'");
}

WordSet contains_11() {
    return {"contains-11",
            [](const Word& x) { return x.letters().find(std::string("\x01\x01", 2)) != std::string::npos; },
            {}};
}

WordSet example41_image() {
    return {"image(0->00,1->1)",
            [](const Word& x) {
                std::size_t run = 0;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (x[i] == 0) {
                        ++run;
                    } else {
                        if (run % 2) return false;
                        run = 0;
                    }
                }
                return run % 2 == 0;
            },
            {}};
}

DistProblem contains11_problem(const SphericalEnsemble& mu) {
    auto s = contains_11();
    return {"contains-11/" + mu.describe(), Alphabet::binary(), s.contains, mu};
}

}  // namespace genlab
