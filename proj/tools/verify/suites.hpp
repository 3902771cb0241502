#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2s6/report.hpp"

namespace g2s6::verify {

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Overrides every randomized sample count.
  std::optional<std::size_t> samples;
  /// Overrides every float pass threshold (exact checks always require 0).
  std::optional<double> tol;
};

/// One check of a suite, named "suite/check".
struct SuiteReport {
  CheckReport check;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs every check of the suite in order. ConsistencyError and DomainError
/// raised by a check count as one failed case; NumericalError propagates.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace g2s6::verify
