#pragma once

#include <cstdint>

#include "g2s6/sphere.hpp"

namespace g2s6 {

/// An omega-compatible complex structure on T_y S^6, in the witness frame
/// (ambient operator: frame * j * frame^t). index = signature of g_J = omega(., J.).
template <Scalar S>
struct CompatibleJ {
  SpherePoint<S> base;
  CMatrix<S> j;
  Signature index;
};

/// max |J^2 + I| and max |J^t Omega J - Omega| for Omega = J_can^t.
template <Scalar S>
double compatibility_residual(const CMatrix<S>& j);

/// Signature of g_J = Omega J. Throws DomainError when J is not compatible
/// (g_J not symmetric beyond tol) or g_J is degenerate.
template <Scalar S>
Signature omega_index(const CMatrix<S>& j, double tol = kDefaultTolerances.identity);

/// Validates J^2 = -I and compatibility (exact, or within tol) and computes the index.
template <Scalar S>
CompatibleJ<S> make_compatible(const SpherePoint<S>& p, CMatrix<S> j, double tol = kDefaultTolerances.identity);

/// J_can with the last q complex lines conjugated: index (6 - 2q, 2q).
template <Scalar S>
CMatrix<S> stratum_representative(std::size_t q);

/// Representative of the requested stratum conjugated by exp(Omega^{-1} Sym) for a
/// random symmetric Sym with entries of size `scale`. scale = 0 returns the representative.
/// Throws ConsistencyError if the result misses the requested index.
CompatibleJ<Float> sample_compatible_J(const SpherePoint<Float>& p, Signature index, Rng& rng, double scale = 0.5);
CompatibleJ<Float> sample_compatible_J(const SpherePoint<Float>& p, Signature index, std::uint64_t seed,
                                       double scale = 0.5);

/// u: (T_y, J) -> C^3, stored as a 3 x 6 matrix on frame coordinates.
template <Scalar S>
struct PointFrame {
  CMatrix<S> u;
  CMatrix<S> u_bar() const { return u.conjugate(); }
};

/// Checks u J = i u and that (u; conj u) is invertible.
template <Scalar S>
PointFrame<S> make_frame(const CompatibleJ<S>& j, CMatrix<S> u, double tol = kDefaultTolerances.identity);

/// Three independent rows of (zeta; conj zeta)(I - iJ)/2, chosen to maximize
/// |det(u; conj u)|. Gives u = zeta for J_can and u = conj zeta for -J_can.
template <Scalar S>
PointFrame<S> default_frame(const CompatibleJ<S>& j);

/// (P u) for P in GL(3, C). Throws DomainError when P is singular.
template <Scalar S>
PointFrame<S> change_frame(const PointFrame<S>& frame, const CMatrix<S>& p);

template <Scalar S>
struct ChernData {
  CMatrix<S> r;
  CMatrix<S> s;
  CMatrix<S> h;
  /// det of the 6 x 6 block matrix (r, s; conj s, conj r).
  S blockdet;
  /// max residual of theta = r eta + s conj eta and its conjugate relation.
  double residual = 0.0;
};

/// Solves theta = r eta + s conj eta for eta = u. Throws ConsistencyError when
/// (u; conj u) is singular, blockdet vanishes or the conjugate relation fails.
template <Scalar S>
ChernData<S> solve_rs(const PointFrame<S>& frame, double tol = kDefaultTolerances.strict);

/// r^t conj r - conj s^t s.
template <Scalar S>
CMatrix<S> h_matrix(const ChernData<S>& cd);

/// max |2i eta^t ^ H conj eta - omega| over all frame-coordinate pairs.
template <Scalar S>
double omega_reconstruction_residual(const ChernData<S>& cd, const PointFrame<S>& frame);

template <Scalar S>
struct UpsilonComponents {
  S c30;
  S c03;
};

/// Type components of 8 theta^1 ^ theta^2 ^ theta^3 for theta = r eta + s conj eta on
/// an abstract R^6 with eta^a = e^{2a} + i e^{2a+1}. Throws ConsistencyError unless
/// c30 = 8 det r and c03 = 8 det s (exactly, or within tol).
template <Scalar S>
UpsilonComponents<S> upsilon_components(const ChernData<S>& cd, double tol = kDefaultTolerances.strict);

/// det(conj s) - det(r).
template <Scalar S>
S chern_defect(const ChernData<S>& cd);

/// Coefficient of ((3 / 2i)(U - conj U))^{3,0} on eta_1 ^ eta_2 ^ eta_3, divided by 12i.
template <Scalar S>
S reconstruct_defect(const ChernData<S>& cd);

/// Coefficient of (-3 Im U)^{3,0} on eta_1 ^ eta_2 ^ eta_3.
template <Scalar S>
S domega_30_coefficient(const ChernData<S>& cd);

struct WitnessReport {
  bool positive = true;
  double det_r = 0.0;
  double det_s = 0.0;
  double defect = 0.0;
  /// |det r| - |det s| (positive H) or |det s| - |det r| (negative H).
  double margin = 0.0;
  /// Largest eigenvalue of A^{-1/2} B A^{-1/2}; < 1 for A > B >= 0.
  double spectral_max = 0.0;
  /// det A vs |det r|^2 and det B vs |det s|^2, relative.
  double consistency = 0.0;
  bool ok = false;
};

/// For definite H: A = r^t conj r > B = conj s^t s >= 0 (roles swapped for negative H),
/// so |det r| > |det s| and the defect cannot vanish. Throws DomainError if H is not definite.
WitnessReport theorem_witness(const ChernData<Float>& cd, const Tolerances& tol = kDefaultTolerances);

}  // namespace g2s6
