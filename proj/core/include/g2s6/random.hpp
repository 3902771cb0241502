#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "g2s6/matrix.hpp"

namespace g2s6 {

/// Seedable generator with platform-independent output.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
/// derives doubles, normals and integers from raw 64-bit draws by hand. The
/// standard distributions are implementation-defined and are not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for a named task. Same (seed, name) gives the same stream.
  static Rng for_task(std::uint64_t seed, std::string_view name);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller).
  double normal();
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Gaussian rational with numerators in [-range, range] and denominators in [1, max_den].
Exact random_gaussian_rational(Rng& rng, long range = 5, long max_den = 3);

/// Complex normal entries.
Float random_complex(Rng& rng, double scale = 1.0);

template <Scalar S>
CMatrix<S> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  CMatrix<S> m(rows, cols);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if constexpr (is_exact_v<S>) {
      m[k] = random_gaussian_rational(rng);
    } else {
      m[k] = random_complex(rng);
    }
  }
  return m;
}

/// Real-valued random matrix (standard normal entries).
CMatrix<Float> random_real_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0);

/// Uniform point on the unit sphere in R^n (n x 1, real entries).
CMatrix<Float> random_unit_vector(Rng& rng, std::size_t n);

}  // namespace g2s6
