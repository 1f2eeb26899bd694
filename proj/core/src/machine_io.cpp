#include "genlab/machine_io.hpp"

#include "genlab/errors.hpp"

#include <fstream>

namespace genlab {

using nlohmann::json;

std::string to_string(Determinism d) {
    switch (d) {
        case Determinism::Total: return "total";
        case Determinism::Partial: return "partial";
        case Determinism::Nondeterministic: return "nondeterministic";
    }
    return "?";
}

MachineSpec machine_spec_from_json(const json& j) {
    try {
        MachineSpec spec;
        spec.name = j.value("name", std::string("machine"));
        spec.states = j.at("states").get<std::vector<std::string>>();
        spec.initial = j.at("initial").get<std::string>();
        spec.final_state = j.at("final").get<std::string>();
        spec.tape_alphabet = j.at("tape_alphabet").get<std::vector<std::string>>();
        spec.blank = j.value("blank", std::string("_"));
        const auto tape = j.value("tape", std::string("two-way"));
        if (tape == "two-way") spec.tape = TapeMode::TwoWay;
        else if (tape == "one-way") spec.tape = TapeMode::OneWay;
        else throw ParseError("tape must be 'two-way' or 'one-way'");
        spec.yes_symbol = j.value("yes_symbol", std::string());
        spec.no_symbol = j.value("no_symbol", std::string());
        for (const auto& t : j.at("delta")) {
            if (!t.is_array() || t.size() != 5) throw ParseError("delta entries must be 5-element arrays");
            spec.delta.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>(),
                                  t[3].get<std::string>(), t[4].get<std::string>()});
        }
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("machine file: ") + e.what());
    }
}

std::shared_ptr<const TuringMachine> machine_from_json(const json& j) {
    try {
        return std::make_shared<const TuringMachine>(machine_spec_from_json(j));
    } catch (const DomainError& e) {
        throw ParseError(std::string("machine file: ") + e.what());
    }
}

json machine_to_json(const TuringMachine& m) {
    const auto spec = m.to_spec();
    json j;
    j["name"] = spec.name;
    j["states"] = spec.states;
    j["initial"] = spec.initial;
    j["final"] = spec.final_state;
    j["tape_alphabet"] = spec.tape_alphabet;
    j["blank"] = spec.blank;
    j["tape"] = spec.tape == TapeMode::TwoWay ? "two-way" : "one-way";
    j["yes_symbol"] = spec.yes_symbol;
    j["no_symbol"] = spec.no_symbol;
    j["deterministic"] = to_string(m.determinism());
    j["delta"] = json::array();
    for (const auto& t : spec.delta) j["delta"].push_back(t);
    return j;
}

std::shared_ptr<const TuringMachine> load_machine(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open machine file '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("machine file '" + path.string() + "': " + e.what());
    }
    auto spec = machine_spec_from_json(j);
    if (!j.contains("name")) spec.name = path.stem().string();
    try {
        return std::make_shared<const TuringMachine>(spec);
    } catch (const DomainError& e) {
        throw ParseError("machine file '" + path.string() + "': " + e.what());
    }
}

}  // namespace genlab
