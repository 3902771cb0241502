#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

#include "g2s6/scalar.hpp"

namespace g2s6 {

/// Outcome of one named check: how many cases ran, how many failed, and the
/// worst residual seen. Exact checks pass only with residual 0.
struct CheckReport {
  std::string name;
  Backend backend = Backend::exact;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;

  bool passed() const { return failures == 0; }

  void record(double residual, bool ok) {
    ++cases;
    if (!ok) ++failures;
    max_residual = std::max(max_residual, residual);
  }
  /// Exact: ok iff residual is 0. Float: ok iff residual <= tol.
  void record(double residual, double tol) { record(residual, backend == Backend::exact ? residual == 0.0 : residual <= tol); }

  void merge(const CheckReport& o) {
    cases += o.cases;
    failures += o.failures;
    max_residual = std::max(max_residual, o.max_residual);
  }
};

}  // namespace g2s6
