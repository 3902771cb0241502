#pragma once

#include <vector>

#include "g2s6/exterior.hpp"
#include "g2s6/g2.hpp"
#include "g2s6/report.hpp"

namespace g2s6 {

/// A point y of S^6 with a witness g, rho_g e1 = y.
template <Scalar S>
struct SpherePoint {
  CMatrix<S> y;
  G2GroupElem<S> witness;
};

/// x(g) = rho_g e1, with g as witness.
template <Scalar S>
SpherePoint<S> x_map(const G2GroupElem<S>& g);

/// Lifts y (unit, real) and checks |rho_g e1 - y| < tol.
SpherePoint<Float> sphere_point(const CMatrix<Float>& y, double tol = 1e-8);

/// Tangent vector at p: horizontal coordinates a at the witness and the
/// ambient vector dx_g(E(a, 0)).
template <Scalar S>
struct TangentVector {
  CMatrix<S> coords;
  CMatrix<S> ambient;
};

/// dx_g(A) = -2i f.a + 2i conj(f).conj(a) in R^7 (vertical part of A is ignored by construction).
template <Scalar S>
CMatrix<S> dx(const G2GroupElem<S>& g, const G2AlgebraElem<S>& el);

template <Scalar S>
TangentVector<S> tangent_vector(const SpherePoint<S>& p, const CMatrix<S>& a);

/// Inverse of tangent_vector. Throws DomainError if v is not tangent at y.
template <Scalar S>
TangentVector<S> tangent_from_ambient(const SpherePoint<S>& p, const CMatrix<S>& v, double tol = kDefaultTolerances.identity);

/// Coordinates i * a at the same witness.
template <Scalar S>
TangentVector<S> jcan_apply(const SpherePoint<S>& p, const TangentVector<S>& v);

/// Orthonormal tangent frame b_j = dx_g(E_j) / 2, j < 6, as a 7 x 6 matrix.
template <Scalar S>
CMatrix<S> tangent_frame(const G2GroupElem<S>& g);

/// theta o dx^{-1} in the frame b: row k has 1/2 at column 2k and i/2 at 2k+1.
template <Scalar S>
const CMatrix<S>& theta_coframe();

/// J_can in the frame b: J b_{2k} = b_{2k+1}.
template <Scalar S>
const CMatrix<S>& jcan_frame();

/// J_can as an endomorphism of R^7 (zero on the normal line).
template <Scalar S>
CMatrix<S> jcan_ambient(const SpherePoint<S>& p);

/// Canonical structures at p, expressed in the witness frame b (columns of `frame`).
template <Scalar S>
struct CanonicalStructures {
  CMatrix<S> frame;
  CMatrix<S> j;
  CMatrix<S> metric;
  /// omega(u, v) = g(J u, v) = u^t omega v in frame coordinates.
  CMatrix<S> omega;
  /// 8 zeta^1 ^ zeta^2 ^ zeta^3 on frame coordinates.
  MultiForm<S> upsilon;
  /// Largest residual of the pullback identities for g and omega.
  double pullback_residual = 0.0;
};

/// Computes g, J, omega, Upsilon at p and checks, on all pairs of basis14,
/// x^*g = 4 sym(theta^t conj theta) and x^*omega = 2i theta^t ^ conj theta.
/// Throws ConsistencyError on a nonzero (exact) or > tol (float) residual.
template <Scalar S>
CanonicalStructures<S> canonical_structures(const SpherePoint<S>& p, double tol = 1e-8);

/// Upsilon as a 3-form on frame coordinates.
template <Scalar S>
MultiForm<S> upsilon(const SpherePoint<S>& p);

/// Upsilon on three ambient tangent vectors.
template <Scalar S>
S upsilon_ambient(const SpherePoint<S>& p, const CMatrix<S>& u, const CMatrix<S>& v, const CMatrix<S>& w);

/// The splitting of the frame-coordinate tangent space by (zeta, conj zeta).
template <Scalar S>
Splitting<S> jcan_splitting();

/// dtheta, dkappa and dphi against their structure equations on all 91 basis pairs.
template <Scalar S>
std::vector<CheckReport> verify_structure_equations();

/// Central differences (step h) of the frame along g exp(tA) at `points` random
/// g, compared with (x, f, conj f) * phi(A); also the Maurer-Cartan form and dx.
std::vector<CheckReport> verify_first_structure_equation(Rng& rng, std::size_t points = 20, double h = 1e-6,
                                                         double tol = 1e-6);

/// d(2i theta^t ^ conj theta) = -3 Im(8 theta^1 ^ theta^2 ^ theta^3) on all 364 basis triples.
template <Scalar S>
std::vector<CheckReport> verify_nearly_kahler();

}  // namespace g2s6
