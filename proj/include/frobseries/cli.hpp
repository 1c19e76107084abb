#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <frobseries/congruence.hpp>

namespace frobseries::cli {

// The process exit status is always one of these.
enum ExitCode : int {
    exit_ok = 0,
    exit_refuted = 1,
    exit_usage = 2,
    exit_guard = 3,
};

/// Largest truncation `expand` accepts without the guard override.
struct ExpandGuards {
    std::size_t max_phi_truncation = 5000;
    std::size_t max_cphi_truncation = 200;
    int max_cphi_k = 64;
};

struct Environment {
    std::ostream &out;
    std::ostream &err;
    // Replaces the series provider used by `verify`; tests inject fakes here.
    std::optional<SeriesProvider> provider = std::nullopt;
    // Lifts every computation guard. Unset: read FROBSERIES_GUARD_OVERRIDE.
    std::optional<bool> guard_override = std::nullopt;
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, Environment &env);

} // namespace frobseries::cli
