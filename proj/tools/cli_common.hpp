#pragma once

#include "genlab/formats.hpp"
#include "genlab/measure.hpp"
#include "genlab/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

namespace CLI {
class App;
}

namespace genlab::cli {

/// Exit-code contract.
enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Default safety caps: sphere enumeration and exhaustive NTM search.
inline constexpr std::size_t kSphereCap = 16;
inline constexpr std::size_t kNtmCap = 6;

/// Flags shared by every subcommand.
struct Common {
    std::size_t n_max = 8;
    std::uint64_t budget = 1000;
    std::uint64_t seed = 0;
    std::uint64_t sample = 0;  // 0 = exact
    std::size_t cap = 0;  // 0: the default cap for the operation
    std::string out;
    std::string format;
};

/// Thrown for anything that maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App& app, Common& c, bool with_sampling = false);

/// Enforces n_max <= cap (c.cap when set, else `default_cap`).
void require_within_cap(const Common& c, std::size_t default_cap, const std::string& what);

/// A file path or a registered name ("uniform", "dbh_nu", "geometric", …).
SphericalEnsemble load_ensemble(const std::string& arg);
/// A file path or "all", "contains11", "example41_image", "cg:<poly>".
WordSet load_subset(const std::string& arg);
Reduction load_reduction(const std::string& path);
Bundle load_bundle(const std::string& path);

/// Writes `text` to --out (via a temporary file and rename) or to stdout.
void emit(const Common& c, const std::string& text);

/// JSON dump with a trailing newline.
std::string dump(const nlohmann::json& j);

/// Registers the subcommand groups.
void register_tm(CLI::App& app, int& exit_code);
void register_sequences(CLI::App& app, int& exit_code);
void register_reduce(CLI::App& app, int& exit_code);
void register_verify(CLI::App& app, int& exit_code);

}  // namespace genlab::cli
