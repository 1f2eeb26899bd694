#include "genlab/report.hpp"

namespace genlab {

void CheckReport::add(std::string witness, std::string expected, std::string actual, std::string note) {
    violations.push_back({std::move(witness), std::move(expected), std::move(actual), std::move(note)});
}

void CheckReport::absorb(const CheckReport& other) {
    checked += other.checked;
    for (const auto& v : other.violations)
        violations.push_back({v.witness, v.expected, v.actual, other.property + (v.note.empty() ? "" : ": " + v.note)});
    for (const auto& n : other.notes) notes.push_back(other.property + ": " + n);
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["property"] = property;
    j["horizon"] = horizon;
    j["checked"] = checked;
    j["passed"] = passed();
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) {
        nlohmann::json e{{"witness", v.witness}, {"expected", v.expected}, {"actual", v.actual}};
        if (!v.note.empty()) e["note"] = v.note;
        j["violations"].push_back(std::move(e));
    }
    j["notes"] = notes;
    return j;
}

}  // namespace genlab
