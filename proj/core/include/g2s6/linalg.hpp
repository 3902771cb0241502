#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "g2s6/matrix.hpp"

namespace g2s6 {

/// Float tolerances. Exact-backend computations ignore them.
struct Tolerances {
  /// Max-norm residual allowed for structural identities.
  double identity = 1e-9;
  /// Margin a quantity must clear for a strict inequality to count.
  double strict = 1e-10;
  /// Eigenvalues closer to zero than this make a form degenerate.
  double degeneracy = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Number of positive and negative eigenvalues.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Determinant. Exact: fraction-free Bareiss elimination. Float: LU with partial pivoting.
template <Scalar S>
S det(const CMatrix<S>& m);

/// Throws DomainError when singular (float: pivot below 1e-14 relative to the input scale).
template <Scalar S>
CMatrix<S> inverse(const CMatrix<S>& m);

/// Solves a x = b for x (b may have several columns).
template <Scalar S>
CMatrix<S> solve(const CMatrix<S>& a, const CMatrix<S>& b);

template <Scalar S>
std::size_t rank(const CMatrix<S>& m, double tol = 1e-10);

template <Scalar S>
bool is_hermitian(const CMatrix<S>& m, double tol = kDefaultTolerances.identity);

/// Leading principal minors det(M[0..k,0..k]) for k = 1..n.
template <Scalar S>
std::vector<S> leading_minors(const CMatrix<S>& m);

/// Sylvester criterion. Float minors must exceed tol.strict. Throws on non-Hermitian input.
template <Scalar S>
bool is_positive_definite(const CMatrix<S>& m, const Tolerances& tol = kDefaultTolerances);

/// A > B in the Hermitian order, i.e. A - B positive definite.
template <Scalar S>
bool hermitian_order_gt(const CMatrix<S>& a, const CMatrix<S>& b, const Tolerances& tol = kDefaultTolerances);

/// det A > det B > 0 for A > B > 0. Throws DomainError when the order premises
/// fail; returns false only if the determinant inequality itself fails.
template <Scalar S>
bool det_order_check(const CMatrix<S>& a, const CMatrix<S>& b, const Tolerances& tol = kDefaultTolerances);

/// Eigenvalue form of the same lemma for A > B >= 0: the spectrum of
/// A^{-1/2} B A^{-1/2} lies in [0, 1). Returns the largest such eigenvalue
/// (so the lemma holds iff the result is < 1). Float only.
double det_ratio_spectrum_max(const CMatrix<Float>& a, const CMatrix<Float>& b, const Tolerances& tol = kDefaultTolerances);

/// Scaling-and-squaring exponential; float only (the exponential is not
/// defined over Gaussian rationals).
CMatrix<Float> matrix_exp(const CMatrix<Float>& m);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const CMatrix<Float>& m, double hermitian_tol = kDefaultTolerances.identity);

/// Inertia. Exact: congruence diagonalization. Float: eigenvalues.
/// Throws DomainError when degenerate.
template <Scalar S>
Signature signature(const CMatrix<S>& m, const Tolerances& tol = kDefaultTolerances);

/// 2-norm style scale used for singularity thresholds.
double frobenius_norm(const CMatrix<Float>& m);

}  // namespace g2s6
