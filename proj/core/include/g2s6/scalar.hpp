#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string_view>

#include "g2s6/gaussian_rational.hpp"

namespace g2s6 {

enum class Backend { exact, floating };

constexpr std::string_view backend_name(Backend b) {
  return b == Backend::exact ? "exact" : "float";
}

using Exact = GaussianRational;
using Float = std::complex<double>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Exact> {
  static constexpr Backend backend = Backend::exact;
  static constexpr bool is_exact = true;
};

template <>
struct ScalarTraits<Float> {
  static constexpr Backend backend = Backend::floating;
  static constexpr bool is_exact = false;
};

/// One of the two scalar backends. The backend is part of the type, so an
/// expression mixing Exact and Float does not compile.
template <class S>
concept Scalar = requires { ScalarTraits<S>::backend; };

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::is_exact;

template <Scalar S>
inline constexpr Backend backend_of = ScalarTraits<S>::backend;

inline Exact conj(const Exact& z) { return z.conj(); }
inline Float conj(const Float& z) { return std::conj(z); }

/// |z| as a double; used for residual reporting in both backends.
inline double magnitude(const Exact& z) { return z.is_zero() ? 0.0 : std::sqrt(z.norm().get_d()); }
inline double magnitude(const Float& z) { return std::abs(z); }

inline double real_double(const Exact& z) { return z.real().get_d(); }
inline double real_double(const Float& z) { return z.real(); }
inline double imag_double(const Exact& z) { return z.imag().get_d(); }
inline double imag_double(const Float& z) { return z.imag(); }

/// Exact backend: literal zero. Float backend: |z| <= tol.
inline bool is_zero(const Exact& z, double /*tol*/ = 0.0) { return z.is_zero(); }
inline bool is_zero(const Float& z, double tol = 0.0) { return std::abs(z) <= tol; }

template <Scalar S>
S from_ratio(long num, long den = 1) {
  if constexpr (is_exact_v<S>) {
    return Exact::from_ratio(num, den);
  } else {
    return Float(static_cast<double>(num) / static_cast<double>(den), 0.0);
  }
}

template <Scalar S>
S imag_unit() {
  if constexpr (is_exact_v<S>) {
    return Exact::i();
  } else {
    return Float(0.0, 1.0);
  }
}

template <Scalar S>
S real_part(const S& z) {
  if constexpr (is_exact_v<S>) {
    return Exact(z.real(), mpq_class(0));
  } else {
    return Float(z.real(), 0.0);
  }
}

}  // namespace g2s6
