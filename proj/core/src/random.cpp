#include "g2s6/random.hpp"

#include <cmath>
#include <numbers>

namespace g2s6 {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng Rng::for_task(std::uint64_t seed, std::string_view name) { return Rng(splitmix64(seed ^ splitmix64(fnv1a(name)))); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Exact random_gaussian_rational(Rng& rng, long range, long max_den) {
  const long re_num = rng.integer(-range, range);
  const long re_den = rng.integer(1, max_den);
  const long im_num = rng.integer(-range, range);
  const long im_den = rng.integer(1, max_den);
  return Exact::from_ratio(re_num, re_den, im_num, im_den);
}

Float random_complex(Rng& rng, double scale) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {scale * re, scale * im};
}

CMatrix<Float> random_real_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale) {
  CMatrix<Float> m(rows, cols);
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = Float(scale * rng.normal(), 0.0);
  return m;
}

CMatrix<Float> random_unit_vector(Rng& rng, std::size_t n) {
  CMatrix<Float> v(n, 1);
  double norm2 = 0.0;
  while (norm2 < 1e-12) {
    norm2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double x = rng.normal();
      v[k] = Float(x, 0.0);
      norm2 += x * x;
    }
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (std::size_t k = 0; k < n; ++k) v[k] *= inv;
  return v;
}

}  // namespace g2s6
