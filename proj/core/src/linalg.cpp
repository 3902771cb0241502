#include "g2s6/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace g2s6 {
namespace {

template <Scalar S>
void require_square(const CMatrix<S>& m, const char* what) {
  if (!m.is_square()) throw DomainError(std::string(what) + ": square matrix required, got " + m.shape());
}

Eigen::MatrixXcd to_eigen(const CMatrix<Float>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}


double singular_threshold(const CMatrix<Float>& m) { return 1e-14 * std::max(1.0, max_abs(m)); }

template <Scalar S>
bool usable_pivot(const S& p, double threshold) {
  if constexpr (is_exact_v<S>) {
    (void)threshold;
    return !p.is_zero();
  } else {
    return std::abs(p) > threshold;
  }
}

// Index of the pivot row in column k at or below row r: first nonzero for
// exact, largest magnitude for float. Returns rows() when nothing usable.
template <Scalar S>
std::size_t pick_pivot(const CMatrix<S>& m, std::size_t r, std::size_t k, double threshold) {
  std::size_t best = m.rows();
  double best_mag = -1.0;
  for (std::size_t i = r; i < m.rows(); ++i) {
    if (!usable_pivot(m(i, k), threshold)) continue;
    if constexpr (is_exact_v<S>) {
      return i;
    } else {
      const double mag = std::abs(m(i, k));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
  }
  return best;
}

template <Scalar S>
void swap_rows(CMatrix<S>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <Scalar S>
double threshold_for(const CMatrix<S>& m) {
  if constexpr (is_exact_v<S>) {
    (void)m;
    return 0.0;
  } else {
    return singular_threshold(m);
  }
}

Exact bareiss_det(CMatrix<Exact> m) {
  const std::size_t n = m.rows();
  if (n == 0) return Exact(1);
  bool negate = false;
  Exact prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Exact(0);
      swap_rows(m, k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Exact(0);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Float lu_det(CMatrix<Float> m) {
  const std::size_t n = m.rows();
  Float d(1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == Float(0.0)) return Float(0.0);
    if (p != k) {
      swap_rows(m, k, p);
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Float f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

// Hermitian congruence diagonalization over Q(i). Pivots are real.
Signature exact_signature(CMatrix<Exact> m) {
  const std::size_t n = m.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, p).is_zero()) ++p;
      if (p < n) {
        swap_rows(m, k, p);
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, p));
      } else {
        std::size_t j = k + 1;
        while (j < n && m(k, j).is_zero()) ++j;
        if (j == n) throw DomainError("signature: degenerate form");
        // e_k <- e_k + m_kj e_j makes the new diagonal 2|m_kj|^2.
        const Exact t = m(k, j);
        for (std::size_t c = 0; c < n; ++c) m(k, c) += t * m(j, c);
        const Exact tc = t.conj();
        for (std::size_t r = 0; r < n; ++r) m(r, k) += tc * m(r, j);
      }
    }
    const Exact pivot = m(k, k);
    if (!pivot.is_real()) throw DomainError("signature: input is not Hermitian");
    if (sgn(pivot.real()) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Exact f = m(i, k) / pivot;
      const Exact fc = f.conj();
      for (std::size_t c = k; c < n; ++c) m(i, c) -= f * m(k, c);
      for (std::size_t r = k; r < n; ++r) m(r, i) -= fc * m(r, k);
    }
  }
  return sig;
}

}  // namespace

template <Scalar S>
S det(const CMatrix<S>& m) {
  require_square(m, "det");
  if constexpr (is_exact_v<S>) {
    return bareiss_det(m);
  } else {
    return lu_det(m);
  }
}

template <Scalar S>
CMatrix<S> solve(const CMatrix<S>& a, const CMatrix<S>& b) {
  require_square(a, "solve");
  if (a.rows() != b.rows()) throw DomainError("solve: right-hand side has " + b.shape() + ", system is " + a.shape());
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  const double thr = threshold_for(a);
  CMatrix<S> aug(n, n + m);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = pick_pivot(aug, k, k, thr);
    if (p == n) throw DomainError("solve: singular matrix");
    swap_rows(aug, k, p);
    const S inv = S(1) / aug(k, k);
    for (std::size_t j = k; j < n + m; ++j) aug(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(aug(i, k))) continue;
      const S f = aug(i, k);
      for (std::size_t j = k; j < n + m; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  return aug.block(0, n, n, m);
}

template <Scalar S>
CMatrix<S> inverse(const CMatrix<S>& m) {
  require_square(m, "inverse");
  return solve(m, CMatrix<S>::identity(m.rows()));
}

template <Scalar S>
std::size_t rank(const CMatrix<S>& m, double tol) {
  CMatrix<S> w = m;
  double thr = 0.0;
  if constexpr (!is_exact_v<S>) thr = tol * std::max(1.0, max_abs(m));
  std::size_t r = 0;
  for (std::size_t k = 0; k < w.cols() && r < w.rows(); ++k) {
    const std::size_t p = pick_pivot(w, r, k, thr);
    if (p == w.rows()) continue;
    swap_rows(w, r, p);
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      if (is_zero(w(i, k))) continue;
      const S f = w(i, k) / w(r, k);
      for (std::size_t j = k; j < w.cols(); ++j) w(i, j) -= f * w(r, j);
    }
    ++r;
  }
  return r;
}

template <Scalar S>
bool is_hermitian(const CMatrix<S>& m, double tol) {
  if (!m.is_square()) return false;
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return m == m.adjoint();
  } else {
    return max_abs_diff(m, m.adjoint()) <= tol;
  }
}

template <Scalar S>
std::vector<S> leading_minors(const CMatrix<S>& m) {
  require_square(m, "leading_minors");
  std::vector<S> minors;
  minors.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) minors.push_back(det(m.block(0, 0, k, k)));
  return minors;
}

template <Scalar S>
bool is_positive_definite(const CMatrix<S>& m, const Tolerances& tol) {
  if (!is_hermitian(m, tol.identity)) throw DomainError("is_positive_definite: input is not Hermitian");
  for (const S& minor : leading_minors(m)) {
    if constexpr (is_exact_v<S>) {
      if (!minor.is_real() || sgn(minor.real()) <= 0) return false;
    } else {
      if (minor.real() <= tol.strict) return false;
    }
  }
  return true;
}

template <Scalar S>
bool hermitian_order_gt(const CMatrix<S>& a, const CMatrix<S>& b, const Tolerances& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("hermitian_order_gt: size mismatch " + a.shape() + " vs " + b.shape());
  }
  return is_positive_definite(CMatrix<S>(a - b), tol);
}

template <Scalar S>
bool det_order_check(const CMatrix<S>& a, const CMatrix<S>& b, const Tolerances& tol) {
  if (!hermitian_order_gt(a, b, tol)) throw DomainError("det_order_check: A > B does not hold");
  if (!is_positive_definite(b, tol)) throw DomainError("det_order_check: B > 0 does not hold");
  const S da = det(a);
  const S db = det(b);
  if constexpr (is_exact_v<S>) {
    if (!da.is_real() || !db.is_real()) return false;
    return da.real() > db.real() && sgn(db.real()) > 0;
  } else {
    const double scale = std::max({1.0, std::abs(da), std::abs(db)});
    if (std::abs(da.imag()) > tol.identity * scale || std::abs(db.imag()) > tol.identity * scale) return false;
    return da.real() - db.real() > tol.strict && db.real() > tol.strict;
  }
}

double det_ratio_spectrum_max(const CMatrix<Float>& a, const CMatrix<Float>& b, const Tolerances& tol) {
  if (a.rows() != b.rows() || !a.is_square() || !b.is_square()) throw DomainError("det_ratio_spectrum_max: size mismatch");
  if (!is_hermitian(a, tol.identity) || !is_hermitian(b, tol.identity)) {
    throw DomainError("det_ratio_spectrum_max: inputs must be Hermitian");
  }
  const Eigen::MatrixXcd ea = to_eigen(a);
  const Eigen::MatrixXcd eb = to_eigen(b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sa(ea);
  if (sa.eigenvalues().minCoeff() <= tol.strict) throw DomainError("det_ratio_spectrum_max: A is not positive definite");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(eb);
  if (sb.eigenvalues().minCoeff() < -tol.identity) throw DomainError("det_ratio_spectrum_max: B is not positive semidefinite");
  const Eigen::MatrixXcd inv_sqrt = sa.operatorInverseSqrt();
  const Eigen::MatrixXcd c = inv_sqrt * eb * inv_sqrt;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sc(0.5 * (c + c.adjoint()), Eigen::EigenvaluesOnly);
  return sc.eigenvalues().maxCoeff();
}

CMatrix<Float> matrix_exp(const CMatrix<Float>& m) {
  require_square(m, "matrix_exp");
  const std::size_t n = m.rows();
  double norm1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += std::abs(m(i, j));
    norm1 = std::max(norm1, c);
  }
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const CMatrix<Float> x = m * Float(std::ldexp(1.0, -squarings), 0.0);

  // Taylor series of exp(x) with ||x||_1 <= 1/2; degree 20 is far below double epsilon.
  CMatrix<Float> result = CMatrix<Float>::identity(n);
  CMatrix<Float> term = CMatrix<Float>::identity(n);
  for (int k = 1; k <= 20; ++k) {
    term = term * x;
    term *= Float(1.0 / k, 0.0);
    result += term;
    if (max_abs(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

std::vector<double> hermitian_eigenvalues(const CMatrix<Float>& m, double hermitian_tol) {
  require_square(m, "hermitian_eigenvalues");
  if (!is_hermitian(m, hermitian_tol)) throw DomainError("hermitian_eigenvalues: input is not Hermitian");
  const Eigen::MatrixXcd e = to_eigen(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (e + e.adjoint()), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

template <Scalar S>
Signature signature(const CMatrix<S>& m, const Tolerances& tol) {
  require_square(m, "signature");
  if (!is_hermitian(m, tol.identity)) throw DomainError("signature: input is not Hermitian");
  if constexpr (is_exact_v<S>) {
    return exact_signature(m);
  } else {
    Signature sig;
    for (double lambda : hermitian_eigenvalues(m, tol.identity)) {
      if (std::abs(lambda) <= tol.degeneracy) throw DomainError("signature: eigenvalue within tolerance of zero");
      if (lambda > 0) {
        ++sig.positive;
      } else {
        ++sig.negative;
      }
    }
    return sig;
  }
}

double frobenius_norm(const CMatrix<Float>& m) {
  double s = 0.0;
  for (const auto& e : m.data()) s += std::norm(e);
  return std::sqrt(s);
}

#define G2S6_INSTANTIATE_LINALG(S)                                                         \
  template S det<S>(const CMatrix<S>&);                                                    \
  template CMatrix<S> inverse<S>(const CMatrix<S>&);                                       \
  template CMatrix<S> solve<S>(const CMatrix<S>&, const CMatrix<S>&);                      \
  template std::size_t rank<S>(const CMatrix<S>&, double);                                 \
  template bool is_hermitian<S>(const CMatrix<S>&, double);                                \
  template std::vector<S> leading_minors<S>(const CMatrix<S>&);                            \
  template bool is_positive_definite<S>(const CMatrix<S>&, const Tolerances&);             \
  template bool hermitian_order_gt<S>(const CMatrix<S>&, const CMatrix<S>&, const Tolerances&); \
  template bool det_order_check<S>(const CMatrix<S>&, const CMatrix<S>&, const Tolerances&);    \
  template Signature signature<S>(const CMatrix<S>&, const Tolerances&);

G2S6_INSTANTIATE_LINALG(Exact)
G2S6_INSTANTIATE_LINALG(Float)

#undef G2S6_INSTANTIATE_LINALG

}  // namespace g2s6
