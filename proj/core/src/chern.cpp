#include "g2s6/chern.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace g2s6 {
namespace {

template <Scalar S>
bool within(double residual, double tol) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return residual == 0.0;
  } else {
    return residual <= tol;
  }
}

template <Scalar S>
const CMatrix<S>& omega_frame() {
  static const CMatrix<S> omega = jcan_frame<S>().transpose();
  return omega;
}

template <Scalar S>
CMatrix<S> stack(const CMatrix<S>& top, const CMatrix<S>& bottom) {
  CMatrix<S> m(top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

template <Scalar S>
CMatrix<S> block2x2(const CMatrix<S>& a, const CMatrix<S>& b, const CMatrix<S>& c, const CMatrix<S>& d) {
  CMatrix<S> m(a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

/// eta^a = e^{2a} + i e^{2a+1} on an abstract R^6.
template <Scalar S>
const CMatrix<S>& abstract_eta() {
  static const CMatrix<S> eta = [] {
    CMatrix<S> m(3, 6);
    for (std::size_t a = 0; a < 3; ++a) {
      m(a, 2 * a) = S(1);
      m(a, 2 * a + 1) = imag_unit<S>();
    }
    return m;
  }();
  return eta;
}

template <Scalar S>
MultiForm<S> upsilon_of(const ChernData<S>& cd) {
  const CMatrix<S>& eta = abstract_eta<S>();
  const MultiForm<S> theta = MultiForm<S>::from_covectors(CMatrix<S>(cd.r * eta + cd.s * eta.conjugate()));
  return from_ratio<S>(8) * wedge(wedge(theta.component(0), theta.component(1)), theta.component(2));
}

/// Value of the (p, q) component of a 3-form on (z_1, z_2, z_3) or (conj z_1, ...).
template <Scalar S>
S type_coefficient(const MultiForm<S>& form, std::size_t p, std::size_t q) {
  const Splitting<S> split = Splitting<S>::from_coframe(abstract_eta<S>());
  const MultiForm<S> part = type_project(form, split, p, q);
  const std::size_t offset = p == 3 ? 0 : 3;
  const CMatrix<S>& z = split.vector_basis();
  return part.evaluate({z.col(offset), z.col(offset + 1), z.col(offset + 2)})[0];
}

}  // namespace

template <Scalar S>
double compatibility_residual(const CMatrix<S>& j) {
  if (j.rows() != kHorizontalDim || j.cols() != kHorizontalDim) throw DomainError("compatibility_residual: J must be 6 x 6");
  const CMatrix<S>& omega = omega_frame<S>();
  const double square = max_abs(CMatrix<S>(j * j + CMatrix<S>::identity(kHorizontalDim)));
  const double compat = max_abs_diff(CMatrix<S>(j.transpose() * omega * j), omega);
  return std::max(square, compat);
}

template <Scalar S>
Signature omega_index(const CMatrix<S>& j, double tol) {
  if (j.rows() != kHorizontalDim || j.cols() != kHorizontalDim) throw DomainError("omega_index: J must be 6 x 6");
  const CMatrix<S> g = omega_frame<S>() * j;
  const double asym = max_abs_diff(g, g.transpose());
  if (!within<S>(asym, tol)) throw DomainError("omega_index: g_J is not symmetric; J is not compatible");
  const CMatrix<S> sym = (g + g.transpose()) * from_ratio<S>(1, 2);
  try {
    return signature(sym);
  } catch (const DomainError&) {
    throw DomainError("omega_index: g_J is degenerate");
  }
}

template <Scalar S>
CompatibleJ<S> make_compatible(const SpherePoint<S>& p, CMatrix<S> j, double tol) {
  const double residual = compatibility_residual(j);
  if (!within<S>(residual, tol)) {
    throw DomainError("make_compatible: J^2 = -I or omega-compatibility fails (residual " + std::to_string(residual) + ")");
  }
  const Signature index = omega_index(j, tol);
  return {p, std::move(j), index};
}

template <Scalar S>
CMatrix<S> stratum_representative(std::size_t q) {
  if (q > 3) throw DomainError("stratum_representative: q must be at most 3");
  CMatrix<S> j = jcan_frame<S>();
  for (std::size_t k = 3 - q; k < 3; ++k) {
    j(2 * k + 1, 2 * k) = S(-1);
    j(2 * k, 2 * k + 1) = S(1);
  }
  return j;
}

CompatibleJ<Float> sample_compatible_J(const SpherePoint<Float>& p, Signature index, Rng& rng, double scale) {
  if (index.positive + index.negative != kHorizontalDim || index.positive % 2 != 0) {
    throw DomainError("sample_compatible_J: index must be (2p, 2q) with p + q = 3");
  }
  CMatrix<Float> j = stratum_representative<Float>(index.negative / 2);
  if (scale != 0.0) {
    CMatrix<Float> sym(kHorizontalDim, kHorizontalDim);
    for (std::size_t a = 0; a < kHorizontalDim; ++a)
      for (std::size_t b = a; b < kHorizontalDim; ++b) {
        sym(a, b) = Float(scale * rng.normal(), 0.0);
        sym(b, a) = sym(a, b);
      }
    // Omega S symmetric makes exp(S) symplectic; Omega^{-1} = -Omega.
    const CMatrix<Float> t = matrix_exp(CMatrix<Float>(-omega_frame<Float>() * sym));
    j = t * j * inverse(t);
    CMatrix<Float> real_j(kHorizontalDim, kHorizontalDim);
    for (std::size_t k = 0; k < j.size(); ++k) real_j[k] = Float(j[k].real(), 0.0);
    j = real_j;
  }
  CompatibleJ<Float> out = make_compatible(p, std::move(j), kDefaultTolerances.identity);
  if (!(out.index == index)) throw ConsistencyError("sample_compatible_J: requested index not achieved");
  return out;
}

CompatibleJ<Float> sample_compatible_J(const SpherePoint<Float>& p, Signature index, std::uint64_t seed, double scale) {
  Rng rng = Rng::for_task(seed, "sample_compatible_J");
  return sample_compatible_J(p, index, rng, scale);
}

template <Scalar S>
PointFrame<S> make_frame(const CompatibleJ<S>& j, CMatrix<S> u, double tol) {
  if (u.rows() != 3 || u.cols() != kHorizontalDim) throw DomainError("make_frame: u must be 3 x 6");
  const double linear = max_abs_diff(CMatrix<S>(u * j.j), CMatrix<S>(u * imag_unit<S>()));
  if (!within<S>(linear, tol)) throw DomainError("make_frame: u is not complex linear for J");
  const S d = det(stack(u, u.conjugate()));
  if (is_zero(d, tol)) throw DomainError("make_frame: (u, conj u) is not a basis");
  return {std::move(u)};
}

template <Scalar S>
PointFrame<S> default_frame(const CompatibleJ<S>& j) {
  const CMatrix<S>& zeta = theta_coframe<S>();
  const CMatrix<S> projector =
      (CMatrix<S>::identity(kHorizontalDim) - j.j * imag_unit<S>()) * from_ratio<S>(1, 2);
  const CMatrix<S> candidates = stack(zeta, zeta.conjugate()) * projector;

  double best = -1.0;
  CMatrix<S> best_u;
  for (const auto& rows : subsets(kHorizontalDim, 3)) {
    CMatrix<S> u(3, kHorizontalDim);
    for (std::size_t k = 0; k < 3; ++k) u.set_block(k, 0, candidates.row(rows[k]));
    const double size = magnitude(det(stack(u, u.conjugate())));
    if (size > best) {
      best = size;
      best_u = std::move(u);
    }
  }
  return make_frame(j, std::move(best_u), std::max(kDefaultTolerances.identity, 1e-8));
}

template <Scalar S>
PointFrame<S> change_frame(const PointFrame<S>& frame, const CMatrix<S>& p) {
  if (p.rows() != 3 || p.cols() != 3) throw DomainError("change_frame: P must be 3 x 3");
  if (is_zero(det(p), kDefaultTolerances.degeneracy)) throw DomainError("change_frame: P is singular");
  return {p * frame.u};
}

template <Scalar S>
ChernData<S> solve_rs(const PointFrame<S>& frame, double tol) {
  const CMatrix<S>& zeta = theta_coframe<S>();
  const CMatrix<S> u_bar = frame.u_bar();
  const CMatrix<S> w = stack(frame.u, u_bar);
  CMatrix<S> w_inv;
  try {
    w_inv = inverse(w);
  } catch (const DomainError&) {
    throw ConsistencyError("solve_rs: (u, conj u) is singular");
  }
  const CMatrix<S> rs = zeta * w_inv;
  ChernData<S> cd;
  cd.r = rs.block(0, 0, 3, 3);
  cd.s = rs.block(0, 3, 3, 3);
  cd.h = h_matrix(cd);
  const double direct = max_abs_diff(CMatrix<S>(cd.r * frame.u + cd.s * u_bar), zeta);
  const double conjugate =
      max_abs_diff(CMatrix<S>(cd.s.conjugate() * frame.u + cd.r.conjugate() * u_bar), zeta.conjugate());
  cd.residual = std::max(direct, conjugate);
  if (!within<S>(cd.residual, tol)) {
    throw ConsistencyError("solve_rs: theta = r eta + s conj eta fails (residual " + std::to_string(cd.residual) + ")");
  }
  cd.blockdet = det(block2x2(cd.r, cd.s, CMatrix<S>(cd.s.conjugate()), CMatrix<S>(cd.r.conjugate())));
  if (is_zero(cd.blockdet, kDefaultTolerances.degeneracy)) throw ConsistencyError("solve_rs: block matrix (r, s; conj s, conj r) is singular");
  return cd;
}

template <Scalar S>
CMatrix<S> h_matrix(const ChernData<S>& cd) {
  return cd.r.transpose() * cd.r.conjugate() - cd.s.conjugate().transpose() * cd.s;
}

template <Scalar S>
double omega_reconstruction_residual(const ChernData<S>& cd, const PointFrame<S>& frame) {
  const MultiForm<S> eta = MultiForm<S>::from_covectors(frame.u);
  const MultiForm<S> rebuilt =
      (from_ratio<S>(2) * imag_unit<S>()) * wedge(eta.transpose_values(), multiply(h_matrix(cd), eta.conjugate()));
  return max_abs_diff(rebuilt, MultiForm<S>::from_antisymmetric(omega_frame<S>()));
}

template <Scalar S>
UpsilonComponents<S> upsilon_components(const ChernData<S>& cd, double tol) {
  const MultiForm<S> ups = upsilon_of(cd);
  UpsilonComponents<S> out{type_coefficient(ups, 3, 0), type_coefficient(ups, 0, 3)};
  const S eight = from_ratio<S>(8);
  const double residual =
      std::max(magnitude(S(out.c30 - eight * det(cd.r))), magnitude(S(out.c03 - eight * det(cd.s))));
  if (!within<S>(residual, tol)) {
    throw ConsistencyError("upsilon_components: coefficients differ from 8 det r, 8 det s (residual " +
                           std::to_string(residual) + ")");
  }
  return out;
}

template <Scalar S>
S chern_defect(const ChernData<S>& cd) {
  return det(CMatrix<S>(cd.s.conjugate())) - det(cd.r);
}

template <Scalar S>
S reconstruct_defect(const ChernData<S>& cd) {
  const MultiForm<S> ups = upsilon_of(cd);
  const S i = imag_unit<S>();
  const MultiForm<S> im_part = (from_ratio<S>(3) / (S(2) * i)) * (ups - ups.conjugate());
  return type_coefficient(im_part, 3, 0) / (from_ratio<S>(12) * i);
}

template <Scalar S>
S domega_30_coefficient(const ChernData<S>& cd) {
  const MultiForm<S> ups = upsilon_of(cd);
  const MultiForm<S> d_omega = (from_ratio<S>(-3) / (S(2) * imag_unit<S>())) * (ups - ups.conjugate());
  return type_coefficient(d_omega, 3, 0);
}

WitnessReport theorem_witness(const ChernData<Float>& cd, const Tolerances& tol) {
  WitnessReport w;
  const CMatrix<Float> h = h_matrix(cd);
  if (is_positive_definite(h, tol)) {
    w.positive = true;
  } else if (is_positive_definite(CMatrix<Float>(-h), tol)) {
    w.positive = false;
  } else {
    throw DomainError("theorem_witness: H is not definite");
  }
  const CMatrix<Float> rr = cd.r.transpose() * cd.r.conjugate();
  const CMatrix<Float> ss = cd.s.conjugate().transpose() * cd.s;
  const CMatrix<Float>& a = w.positive ? rr : ss;
  const CMatrix<Float>& b = w.positive ? ss : rr;

  w.det_r = std::abs(det(cd.r));
  w.det_s = std::abs(det(cd.s));
  w.defect = std::abs(chern_defect(cd));
  w.spectral_max = det_ratio_spectrum_max(a, b, tol);

  const double det_a = std::abs(det(a));
  const double det_b = std::abs(det(b));
  const double big = w.positive ? w.det_r : w.det_s;
  const double small = w.positive ? w.det_s : w.det_r;
  const double scale_a = std::max(1.0, det_a);
  const double scale_b = std::max(1.0, det_b);
  w.consistency = std::max(std::abs(det_a - big * big) / scale_a, std::abs(det_b - small * small) / scale_b);
  w.margin = big - small;
  // |det(conj s) - det r| >= ||det r| - |det s||.
  w.ok = w.spectral_max < 1.0 && w.margin > 0.0 && w.defect >= w.margin * (1.0 - 1e-12) && w.defect > 0.0 &&
         w.consistency <= tol.identity;
  return w;
}

#define G2S6_INSTANTIATE_CHERN(S)                                                                 \
  template double compatibility_residual<S>(const CMatrix<S>&);                                   \
  template Signature omega_index<S>(const CMatrix<S>&, double);                                   \
  template CompatibleJ<S> make_compatible<S>(const SpherePoint<S>&, CMatrix<S>, double);          \
  template CMatrix<S> stratum_representative<S>(std::size_t);                                     \
  template PointFrame<S> make_frame<S>(const CompatibleJ<S>&, CMatrix<S>, double);                \
  template PointFrame<S> default_frame<S>(const CompatibleJ<S>&);                                 \
  template PointFrame<S> change_frame<S>(const PointFrame<S>&, const CMatrix<S>&);                \
  template ChernData<S> solve_rs<S>(const PointFrame<S>&, double);                                \
  template CMatrix<S> h_matrix<S>(const ChernData<S>&);                                           \
  template double omega_reconstruction_residual<S>(const ChernData<S>&, const PointFrame<S>&);    \
  template UpsilonComponents<S> upsilon_components<S>(const ChernData<S>&, double);               \
  template S chern_defect<S>(const ChernData<S>&);                                                \
  template S reconstruct_defect<S>(const ChernData<S>&);                                          \
  template S domega_30_coefficient<S>(const ChernData<S>&);

G2S6_INSTANTIATE_CHERN(Exact)
G2S6_INSTANTIATE_CHERN(Float)

#undef G2S6_INSTANTIATE_CHERN

}  // namespace g2s6
