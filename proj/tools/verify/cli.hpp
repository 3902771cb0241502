#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "suites.hpp"

namespace g2s6::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
/// 3 numerical-infrastructure failure.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// `args` excludes the program name: e.g. {"verify", "all", "--seed", "42"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs the named suites concurrently; results sorted by check name.
std::vector<verify::SuiteReport> run_suites(const std::vector<std::string>& suites, const verify::SuiteOptions& options);

std::string to_json(const std::vector<verify::SuiteReport>& reports, std::uint64_t seed);

}  // namespace g2s6::cli
