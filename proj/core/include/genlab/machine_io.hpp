#pragma once

#include "genlab/machine.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <memory>

namespace genlab {

/// Parses the machine file format:
/// {"states":[...], "initial":"q0", "final":"q1", "tape_alphabet":["0","1"],
///  "blank":"_", "tape":"two-way", "yes_symbol":"1", "no_symbol":"0",
///  "delta":[["q0","0","q1","1","R"], ...]}
/// Throws ParseError on malformed input; the deterministic flag is inferred.
MachineSpec machine_spec_from_json(const nlohmann::json& j);
nlohmann::json machine_to_json(const TuringMachine& m);

std::shared_ptr<const TuringMachine> load_machine(const std::filesystem::path& path);
std::shared_ptr<const TuringMachine> machine_from_json(const nlohmann::json& j);

std::string to_string(Determinism d);

}  // namespace genlab
