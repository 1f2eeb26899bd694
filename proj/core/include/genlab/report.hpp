#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace genlab {

struct Violation {
    std::string witness;
    std::string expected;
    std::string actual;
    std::string note;
};

/// Outcome of a finite-horizon verifier. Empty `violations` means pass.
struct CheckReport {
    std::string property;
    std::size_t horizon = 0;
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool passed() const { return violations.empty(); }
    void add(std::string witness, std::string expected, std::string actual, std::string note = {});
    /// Appends another report's violations and notes, prefixing notes with its property.
    void absorb(const CheckReport& other);

    nlohmann::json to_json() const;
};

}  // namespace genlab
