#include "genlab/formats.hpp"

#include "genlab/corpus.hpp"
#include "genlab/errors.hpp"
#include "genlab/machine_io.hpp"
#include "genlab/reductions.hpp"

#include <fstream>
#include <set>

namespace genlab {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(const char* what, F&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

Alphabet alphabet_field(const json& j, const char* key, const char* fallback) {
    return Alphabet::from_chars(j.value(key, std::string(fallback)));
}

}  // namespace

Polynomial polynomial_from_json(const json& j) {
    return guarded("polynomial", [&] {
        if (j.is_string()) return Polynomial::parse(j.get<std::string>());
        return Polynomial(j.get<std::vector<std::uint64_t>>());
    });
}

SphericalEnsemble ensemble_from_json(const json& j) {
    return guarded("ensemble", [&] {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "uniform") return SphericalEnsemble::uniform(alphabet_field(j, "alphabet", "01"));
        if (kind == "dbh_nu") return dbh_nu();
        if (kind == "named") return ensemble_by_name(j.at("name").get<std::string>());
        if (kind == "table") {
            const Alphabet a = alphabet_field(j, "alphabet", "01");
            std::map<Word, Rational> entries;
            for (const auto& [w, q] : j.at("entries").items())
                entries.emplace(Word::parse(a, w), parse_rational(q.get<std::string>()));
            return SphericalEnsemble::table(a, entries);
        }
        if (kind == "induced") return induce(ensemble_from_json(j.at("base")), subset_from_json(j.at("subset")));
        if (kind == "transferred")
            return transfer(reduction_from_json(j.at("reduction")), ensemble_from_json(j.at("base")));
        throw ParseError("unknown ensemble kind '" + kind + "'");
    });
}

WordSet subset_from_json(const json& j) {
    return guarded("subset", [&] {
        const auto name = j.at("name").get<std::string>();
        if (name == "all") return all_words();
        if (name == "cg") {
            const Polynomial g = polynomial_from_json(j.at("g"));
            return c_of_g(LongevityGuard::from_polynomial(g));
        }
        if (name == "contains11") return contains_11();
        if (name == "example41_image") return example41_image();
        if (name == "words") {
            const Alphabet a = alphabet_field(j, "alphabet", "01");
            auto words = std::make_shared<std::set<std::string>>();
            for (const auto& w : j.at("words")) words->insert(Word::parse(a, w.get<std::string>()).letters());
            return WordSet{"listed", [words](const Word& x) { return words->contains(x.letters()); }, {}};
        }
        throw ParseError("unknown subset '" + name + "'");
    });
}

Reduction reduction_from_json(const json& j) {
    return guarded("reduction", [&] {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "identity") {
            Reduction id = identity_reduction(alphabet_field(j, "alphabet", "01"));
            if (!j.contains("density")) return id;
            auto d = id.declaration();
            d.kind = ReductionKind::CM;
            d.density = polynomial_from_json(j.at("density"));
            return Reduction(id.source(), id.target(), [](const Word& x) { return x; }, d);
        }
        if (kind == "example41") return example41();
        if (kind == "bin_alph") {
            const Alphabet sigma = Alphabet::from_chars(j.at("sigma").get<std::string>());
            DistProblem p{"bin_alph", sigma, [](const Word&) { return false; }, SphericalEnsemble::uniform(sigma)};
            return to_binary(p).f;
        }
        throw ParseError("unknown reduction kind '" + kind + "'");
    });
}

Bundle bundle_from_json(const json& j, const std::filesystem::path& base_dir) {
    return guarded("bundle", [&] {
        const json& pj = j.at("problem");
        SphericalEnsemble mu = ensemble_from_json(pj.at("ensemble"));
        const auto members = pj.value("members", std::string("contains11"));
        Bundle b{DistProblem{members, mu.alphabet(), {}, mu}, std::nullopt, std::nullopt, j};
        if (members == "contains11") {
            b.problem.member = contains_11().contains;
        } else if (members == "example41_image") {
            b.problem.member = example41_image().contains;
        } else if (members == "starts_with_first") {
            b.problem.member = [](const Word& x) { return !x.empty() && x[0] == 0; };
        } else {
            throw ParseError("unknown membership predicate '" + members + "'");
        }
        b.problem.name = members + "/" + mu.describe();
        if (j.contains("decider")) {
            auto path = std::filesystem::path(j.at("decider").get<std::string>());
            if (path.is_relative()) path = base_dir / path;
            Decider d{load_machine(path), polynomial_from_json(j.at("decider_guard"))};
            b.decider = std::move(d);
        }
        if (j.contains("guard")) b.guard = LongevityGuard::from_polynomial(polynomial_from_json(j.at("guard")));
        return b;
    });
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

}  // namespace genlab
