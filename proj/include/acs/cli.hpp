#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "acs/search.hpp"

namespace acs::cli {

enum class Command { Verify, Witness, Search, Table, Selftest };
enum class Format { Text, Json, Csv };

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kVerdictFalse = 1,
    kUsageError = 2,
    kInternalError = 3,
};

struct CommandConfig {
    Command command = Command::Selftest;
    std::optional<int> m;
    std::optional<int> n;
    int bound = 1;
    int m_max = 5;
    int n_max = 4;
    std::optional<std::string> coeffs_path;
    Format format = Format::Text;
    std::optional<std::string> output_path;
    SearchMode mode = SearchMode::Decomposed;
    unsigned workers = 1;
    std::optional<std::uint64_t> ceiling;
    int samples = 100;
    std::uint64_t seed = 20260417;
};

/// Name of the environment variable overriding the brute-force ceiling.
inline constexpr const char* kCeilingEnv = "ACS_SEARCH_CEILING";

/// Checks per-command required fields. Throws InvalidInput.
void validate(const CommandConfig& config);

/// Runs one command, writing the report to `out` (or the configured output
/// file) and diagnostics to `err`. Returns an ExitCode.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors return kUsageError.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace acs::cli
