#include "g2s6/sphere.hpp"

#include <algorithm>
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
double imag_max(const CMatrix<S>& m) {
  double r = 0.0;
  for (const auto& e : m.data()) r = std::max(r, std::abs(imag_double(e)));
  return r;
}

template <Scalar S>
MultiForm<S> cross_form(const MultiForm<S>& theta_like) {
  std::vector<CMatrix<S>> values;
  for (std::size_t j = 0; j < theta_like.dim(); ++j) values.push_back(cross_matrix(theta_like.coefficient(j)));
  return MultiForm<S>::one_form(theta_like.dim(), values);
}

template <Scalar S>
MultiForm<S> upsilon_from(const MultiForm<S>& theta) {
  return from_ratio<S>(8) * wedge(wedge(theta.component(0), theta.component(1)), theta.component(2));
}

template <Scalar S>
CheckReport compare_coefficients(std::string name, const MultiForm<S>& lhs, const MultiForm<S>& rhs) {
  CheckReport report{std::move(name), backend_of<S>};
  for (std::size_t r = 0; r < lhs.coefficient_count(); ++r) {
    const double residual = max_abs_diff(lhs.coefficient(r), rhs.coefficient(r));
    report.record(residual, is_exact_v<S> ? 0.0 : 1e-10);
  }
  return report;
}

}  // namespace

template <Scalar S>
SpherePoint<S> x_map(const G2GroupElem<S>& g) {
  return {g.real().col(0), g};
}

SpherePoint<Float> sphere_point(const CMatrix<Float>& y, double tol) {
  G2GroupElem<Float> g = lift_point(y, tol);
  const double residual = max_abs_diff(g.real().col(0), y);
  if (residual >= tol) throw NumericalError("sphere_point: witness residual " + std::to_string(residual));
  return {y, std::move(g)};
}

template <Scalar S>
CMatrix<S> dx(const G2GroupElem<S>& g, const G2AlgebraElem<S>& el) {
  const S two_i = S(2) * imag_unit<S>();
  const CMatrix<S> fm = g.frame_matrix();
  const CMatrix<S> a_bar = el.a().conjugate();
  CMatrix<S> v(7, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    v += fm.col(1 + k) * (-two_i * el.a()[k]);
    v += fm.col(4 + k) * (two_i * a_bar[k]);
  }
  return v;
}

template <Scalar S>
TangentVector<S> tangent_vector(const SpherePoint<S>& p, const CMatrix<S>& a) {
  return {a, dx(p.witness, G2AlgebraElem<S>::horizontal(a))};
}

template <Scalar S>
TangentVector<S> tangent_from_ambient(const SpherePoint<S>& p, const CMatrix<S>& v, double tol) {
  if (v.rows() != 7 || v.cols() != 1) throw DomainError("tangent_from_ambient: expected a 7 x 1 vector");
  const CMatrix<S> b = tangent_frame(p.witness);
  const CMatrix<S> c = b.transpose() * v;
  const double normal = magnitude(bilinear_dot(p.y, v));
  const double off = std::max(imag_max(v), max_abs_diff(CMatrix<S>(b * c), v));
  if (!within<S>(std::max(normal, off), tol)) throw DomainError("tangent_from_ambient: vector is not tangent at y");
  // v = sum_j 2 c'_j b_j with c' the horizontal algebra coordinates.
  const S half = from_ratio<S>(1, 2);
  CMatrix<S> a(3, 1);
  for (std::size_t k = 0; k < 3; ++k) a[k] = half * (c[2 * k] + imag_unit<S>() * c[2 * k + 1]);
  return {a, v};
}

template <Scalar S>
TangentVector<S> jcan_apply(const SpherePoint<S>& p, const TangentVector<S>& v) {
  return tangent_vector(p, CMatrix<S>(v.coords * imag_unit<S>()));
}

template <Scalar S>
CMatrix<S> tangent_frame(const G2GroupElem<S>& g) {
  const auto& basis = basis14<S>();
  const S half = from_ratio<S>(1, 2);
  CMatrix<S> b(7, kHorizontalDim);
  for (std::size_t j = 0; j < kHorizontalDim; ++j) b.set_block(0, j, dx(g, basis[j]) * half);
  return b;
}

template <Scalar S>
const CMatrix<S>& theta_coframe() {
  static const CMatrix<S> zeta = [] {
    CMatrix<S> z(3, kHorizontalDim);
    const S half = from_ratio<S>(1, 2);
    for (std::size_t k = 0; k < 3; ++k) {
      z(k, 2 * k) = half;
      z(k, 2 * k + 1) = half * imag_unit<S>();
    }
    return z;
  }();
  return zeta;
}

template <Scalar S>
const CMatrix<S>& jcan_frame() {
  static const CMatrix<S> j = [] {
    CMatrix<S> m(kHorizontalDim, kHorizontalDim);
    for (std::size_t k = 0; k < 3; ++k) {
      m(2 * k + 1, 2 * k) = S(1);
      m(2 * k, 2 * k + 1) = S(-1);
    }
    return m;
  }();
  return j;
}

template <Scalar S>
CMatrix<S> jcan_ambient(const SpherePoint<S>& p) {
  const CMatrix<S> b = tangent_frame(p.witness);
  return b * jcan_frame<S>() * b.transpose();
}

template <Scalar S>
MultiForm<S> upsilon(const SpherePoint<S>& /*p*/) {
  // In the witness frame the canonical structures have constant coefficients.
  return upsilon_from(MultiForm<S>::from_covectors(theta_coframe<S>()));
}

template <Scalar S>
S upsilon_ambient(const SpherePoint<S>& p, const CMatrix<S>& u, const CMatrix<S>& v, const CMatrix<S>& w) {
  const CMatrix<S> bt = tangent_frame(p.witness).transpose();
  for (const CMatrix<S>* vec : {&u, &v, &w}) tangent_from_ambient(p, *vec, 1e-8);
  return upsilon(p).evaluate({CMatrix<S>(bt * u), CMatrix<S>(bt * v), CMatrix<S>(bt * w)})[0];
}

template <Scalar S>
Splitting<S> jcan_splitting() {
  return Splitting<S>::from_coframe(theta_coframe<S>());
}

template <Scalar S>
CanonicalStructures<S> canonical_structures(const SpherePoint<S>& p, double tol) {
  CanonicalStructures<S> cs;
  cs.frame = tangent_frame(p.witness);
  cs.metric = cs.frame.transpose() * cs.frame;
  cs.j = jcan_frame<S>();
  cs.omega = cs.j.transpose() * cs.metric;
  cs.upsilon = upsilon(p);

  // Pullbacks along dx, computed from the ambient metric and J, against theta.
  const auto& basis = basis14<S>();
  const MultiForm<S> theta = theta_form<S>();
  const MultiForm<S> omega_theta = (from_ratio<S>(2) * imag_unit<S>()) * wedge(theta.transpose_values(), theta.conjugate());
  const CMatrix<S> j_amb = cs.frame * cs.j * cs.frame.transpose();
  std::vector<CMatrix<S>> pushed;
  for (const auto& e : basis) pushed.push_back(dx(p.witness, e));
  const S two = S(2);
  double residual = 0.0;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    for (std::size_t j = i; j < kAlgebraDim; ++j) {
      const S g_val = bilinear_dot(pushed[i], pushed[j]);
      const CMatrix<S>& ti = basis[i].a();
      const CMatrix<S>& tj = basis[j].a();
      const S g_expected = two * (bilinear_dot(ti, tj.conjugate()) + bilinear_dot(ti.conjugate(), tj));
      residual = std::max(residual, magnitude(S(g_val - g_expected)));
      if (i == j) continue;
      const S omega_val = bilinear_dot(CMatrix<S>(j_amb * pushed[i]), pushed[j]);
      residual = std::max(residual, magnitude(S(omega_val - omega_theta.on_basis({i, j})[0])));
    }
  }
  cs.pullback_residual = residual;
  if (!within<S>(residual, tol)) {
    throw ConsistencyError("canonical_structures: pullback residual " + std::to_string(residual));
  }
  return cs;
}

template <Scalar S>
std::vector<CheckReport> verify_structure_equations() {
  const auto& sc = g2_structure_constants<S>();
  const MultiForm<S> theta = theta_form<S>();
  const MultiForm<S> kappa = kappa_form<S>();
  const MultiForm<S> phi = phi_form<S>();
  const MultiForm<S> theta_bar = theta.conjugate();
  const MultiForm<S> cross_theta = cross_form(theta);
  const MultiForm<S> cross_theta_bar = cross_form(theta_bar);
  const MultiForm<S> theta_star = theta_bar.transpose_values();

  std::vector<CheckReport> out;
  out.push_back(compare_coefficients("dtheta", left_invariant_d(theta, sc),
                                     MultiForm<S>(-wedge(kappa, theta) + wedge(cross_theta_bar, theta_bar))));
  out.push_back(compare_coefficients(
      "dkappa", left_invariant_d(kappa, sc),
      MultiForm<S>(-wedge(kappa, kappa) + from_ratio<S>(2) * wedge(theta, theta_star) - wedge(cross_theta_bar, cross_theta))));
  out.push_back(compare_coefficients("dphi", left_invariant_d(phi, sc), MultiForm<S>(-wedge(phi, phi))));
  return out;
}

std::vector<CheckReport> verify_first_structure_equation(Rng& rng, std::size_t points, double h, double tol) {
  CheckReport frame_report{"first-structure", Backend::floating};
  CheckReport mc_report{"maurer-cartan-fd", Backend::floating};
  for (std::size_t n = 0; n < points; ++n) {
    const G2GroupElem<Float> g = exp_group(random_algebra_element(rng));
    const G2AlgebraElem<Float> a = random_algebra_element(rng);
    const G2GroupElem<Float> plus = g * exp_group(a, h);
    const G2GroupElem<Float> minus = g * exp_group(a, -h);
    const Float inv_2h(1.0 / (2.0 * h), 0.0);

    const CMatrix<Float> frame_derivative = (plus.frame_matrix() - minus.frame_matrix()) * inv_2h;
    const CMatrix<Float> predicted = g.frame_matrix() * embed_algebra(a);
    // The x-column is dx_g(A); compare it with the moving-frame formula too.
    const double dx_residual = max_abs_diff(frame_derivative.col(0), dx(g, a));
    frame_report.record(std::max(max_abs_diff(frame_derivative, predicted), dx_residual), tol);

    const CMatrix<Float> split_derivative = (plus.split() - minus.split()) * inv_2h;
    try {
      const G2AlgebraElem<Float> recovered = maurer_cartan_raw(g, split_derivative, tol);
      mc_report.record(max_abs_diff(embed_algebra(recovered), embed_algebra(a)), tol);
    } catch (const DomainError&) {
      mc_report.record(project_algebra(CMatrix<Float>(inverse(g.split()) * split_derivative)).residual, false);
    }
  }
  return {frame_report, mc_report};
}

template <Scalar S>
std::vector<CheckReport> verify_nearly_kahler() {
  const auto& sc = g2_structure_constants<S>();
  const MultiForm<S> theta = theta_form<S>();
  const MultiForm<S> pairing = wedge(theta.transpose_values(), theta.conjugate());
  const MultiForm<S> omega = (from_ratio<S>(2) * imag_unit<S>()) * pairing;
  const MultiForm<S> ups = upsilon_from(theta);
  // Im(U) = (U - conj U) / 2i.
  const S inv_2i = S(1) / (S(2) * imag_unit<S>());
  const MultiForm<S> im_ups = inv_2i * (ups - ups.conjugate());
  const MultiForm<S> triple = wedge(wedge(theta.component(0), theta.component(1)), theta.component(2));
  const MultiForm<S> im_triple = inv_2i * (triple - triple.conjugate());

  std::vector<CheckReport> out;
  out.push_back(compare_coefficients("domega", left_invariant_d(omega, sc), MultiForm<S>(from_ratio<S>(-3) * im_ups)));
  out.push_back(compare_coefficients("dpairing", left_invariant_d(pairing, sc),
                                     MultiForm<S>((from_ratio<S>(12) * imag_unit<S>()) * im_triple)));
  return out;
}

#define G2S6_INSTANTIATE_SPHERE(S)                                                                             \
  template SpherePoint<S> x_map<S>(const G2GroupElem<S>&);                                                     \
  template CMatrix<S> dx<S>(const G2GroupElem<S>&, const G2AlgebraElem<S>&);                                   \
  template TangentVector<S> tangent_vector<S>(const SpherePoint<S>&, const CMatrix<S>&);                       \
  template TangentVector<S> tangent_from_ambient<S>(const SpherePoint<S>&, const CMatrix<S>&, double);         \
  template TangentVector<S> jcan_apply<S>(const SpherePoint<S>&, const TangentVector<S>&);                     \
  template CMatrix<S> tangent_frame<S>(const G2GroupElem<S>&);                                                 \
  template const CMatrix<S>& theta_coframe<S>();                                                               \
  template const CMatrix<S>& jcan_frame<S>();                                                                  \
  template CMatrix<S> jcan_ambient<S>(const SpherePoint<S>&);                                                  \
  template CanonicalStructures<S> canonical_structures<S>(const SpherePoint<S>&, double);                      \
  template MultiForm<S> upsilon<S>(const SpherePoint<S>&);                                                     \
  template S upsilon_ambient<S>(const SpherePoint<S>&, const CMatrix<S>&, const CMatrix<S>&, const CMatrix<S>&); \
  template Splitting<S> jcan_splitting<S>();                                                                   \
  template std::vector<CheckReport> verify_structure_equations<S>();                                           \
  template std::vector<CheckReport> verify_nearly_kahler<S>();

G2S6_INSTANTIATE_SPHERE(Exact)
G2S6_INSTANTIATE_SPHERE(Float)

#undef G2S6_INSTANTIATE_SPHERE

}  // namespace g2s6
