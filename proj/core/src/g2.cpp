#include "g2s6/g2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace g2s6 {
namespace {

template <Scalar S>
S real_scalar_of_real_part(const S& z) {
  if constexpr (is_exact_v<S>) {
    return Exact(z.real(), mpq_class(0));
  } else {
    return Float(z.real(), 0.0);
  }
}

template <Scalar S>
S real_scalar_of_imag_part(const S& z) {
  if constexpr (is_exact_v<S>) {
    return Exact(z.imag(), mpq_class(0));
  } else {
    return Float(z.imag(), 0.0);
  }
}

template <Scalar S>
double exact_or_float_residual(const CMatrix<S>& m) {
  return max_abs(m);
}

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
CMatrix<S> su3_basis_matrix(std::size_t j) {
  const S i = imag_unit<S>();
  CMatrix<S> d(3, 3);
  switch (j) {
    case 0:
      d(0, 0) = i;
      d(1, 1) = -i;
      break;
    case 1:
      d(1, 1) = i;
      d(2, 2) = -i;
      break;
    default: {
      // Off-diagonal pairs (0,1), (0,2), (1,2); even slot real antisymmetric, odd slot i * symmetric.
      static constexpr std::size_t rows[3] = {0, 0, 1};
      static constexpr std::size_t cols[3] = {1, 2, 2};
      const std::size_t pair = (j - 2) / 2;
      const std::size_t r = rows[pair];
      const std::size_t c = cols[pair];
      if ((j - 2) % 2 == 0) {
        d(r, c) = S(1);
        d(c, r) = S(-1);
      } else {
        d(r, c) = i;
        d(c, r) = i;
      }
    }
  }
  return d;
}

// dx_g(E_j) for the six horizontal basis elements, as a 7 x 6 real matrix.
CMatrix<Float> horizontal_dx(const G2GroupElem<Float>& g) {
  const CMatrix<Float> frame = g.frame_matrix();
  const auto& basis = basis14<Float>();
  CMatrix<Float> out(7, kHorizontalDim);
  for (std::size_t j = 0; j < kHorizontalDim; ++j) {
    const CMatrix<Float> col = frame * embed_algebra(basis[j]).col(0);
    for (std::size_t i = 0; i < 7; ++i) out(i, j) = Float(col[i].real(), 0.0);
  }
  return out;
}

double real_dot(const CMatrix<Float>& a, const CMatrix<Float>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k].real() * b[k].real();
  return s;
}

}  // namespace

template <Scalar S>
G2AlgebraElem<S>::G2AlgebraElem(CMatrix<S> a, CMatrix<S> d, double tol) : a_(std::move(a)), d_(std::move(d)) {
  if (a_.rows() != 3 || a_.cols() != 1) throw DomainError("G2AlgebraElem: a must be 3 x 1, got " + a_.shape());
  if (d_.rows() != 3 || d_.cols() != 3) throw DomainError("G2AlgebraElem: D must be 3 x 3, got " + d_.shape());
  const CMatrix<S> skew = d_ + d_.adjoint();
  const S tr = d_.trace();
  if constexpr (is_exact_v<S>) {
    if (!is_zero_matrix(skew) || !tr.is_zero()) throw DomainError("G2AlgebraElem: D is not in su(3)");
  } else {
    if (max_abs(skew) > tol || std::abs(tr) > tol) throw DomainError("G2AlgebraElem: D is not in su(3)");
  }
}

template <Scalar S>
CMatrix<S> cross_matrix(const CMatrix<S>& a) {
  if (a.size() != 3) throw DomainError("cross_matrix: a must have 3 entries");
  return CMatrix<S>(3, 3, {S(0), a[2], -a[1], -a[2], S(0), a[0], a[1], -a[0], S(0)});
}

template <Scalar S>
CMatrix<S> embed_algebra(const G2AlgebraElem<S>& el) {
  const S i = imag_unit<S>();
  const S two_i = S(2) * i;
  const CMatrix<S>& a = el.a();
  const CMatrix<S> a_bar = a.conjugate();
  CMatrix<S> m(7, 7);
  for (std::size_t k = 0; k < 3; ++k) {
    m(0, 1 + k) = -i * a_bar[k];
    m(0, 4 + k) = i * a[k];
    m(1 + k, 0) = -two_i * a[k];
    m(4 + k, 0) = two_i * a_bar[k];
  }
  m.set_block(1, 1, el.d());
  m.set_block(1, 4, cross_matrix(a_bar));
  m.set_block(4, 1, cross_matrix(a));
  m.set_block(4, 4, el.d().conjugate());
  return m;
}

template <Scalar S>
AlgebraProjection<S> project_algebra(const CMatrix<S>& x) {
  if (x.rows() != 7 || x.cols() != 7) throw DomainError("project_algebra: expected 7 x 7, got " + x.shape());
  const S minus_two_i = -S(2) * imag_unit<S>();
  CMatrix<S> a(3, 1);
  for (std::size_t k = 0; k < 3; ++k) a[k] = x(1 + k, 0) / minus_two_i;
  const CMatrix<S> d_raw = x.block(1, 1, 3, 3);
  CMatrix<S> d = (d_raw - d_raw.adjoint()) * from_ratio<S>(1, 2);
  const S shift = d.trace() * from_ratio<S>(1, 3);
  for (std::size_t k = 0; k < 3; ++k) d(k, k) -= shift;
  G2AlgebraElem<S> el(std::move(a), std::move(d));
  const double residual = max_abs_diff(x, embed_algebra(el));
  return {std::move(el), residual};
}

template <Scalar S>
G2AlgebraElem<S> bracket(const G2AlgebraElem<S>& x, const G2AlgebraElem<S>& y, double tol) {
  const CMatrix<S> mx = embed_algebra(x);
  const CMatrix<S> my = embed_algebra(y);
  auto proj = project_algebra(CMatrix<S>(mx * my - my * mx));
  if (!within<S>(proj.residual, tol)) {
    throw ConsistencyError("bracket: commutator left g2 (residual " + std::to_string(proj.residual) + ")");
  }
  return std::move(proj.element);
}

template <Scalar S>
const std::vector<G2AlgebraElem<S>>& basis14() {
  static const std::vector<G2AlgebraElem<S>> basis = [] {
    std::vector<G2AlgebraElem<S>> b;
    b.reserve(kAlgebraDim);
    for (std::size_t k = 0; k < 3; ++k) {
      CMatrix<S> re(3, 1);
      re[k] = S(1);
      CMatrix<S> im(3, 1);
      im[k] = imag_unit<S>();
      b.push_back(G2AlgebraElem<S>::horizontal(re));
      b.push_back(G2AlgebraElem<S>::horizontal(im));
    }
    for (std::size_t j = 0; j < 8; ++j) b.push_back(G2AlgebraElem<S>::vertical(su3_basis_matrix<S>(j)));
    return b;
  }();
  return basis;
}

template <Scalar S>
CMatrix<S> coordinates(const G2AlgebraElem<S>& el) {
  CMatrix<S> c(kAlgebraDim, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    c[2 * k] = real_scalar_of_real_part(el.a()[k]);
    c[2 * k + 1] = real_scalar_of_imag_part(el.a()[k]);
  }
  const CMatrix<S>& d = el.d();
  c[6] = real_scalar_of_imag_part(d(0, 0));
  c[7] = -real_scalar_of_imag_part(d(2, 2));
  c[8] = real_scalar_of_real_part(d(0, 1));
  c[9] = real_scalar_of_imag_part(d(0, 1));
  c[10] = real_scalar_of_real_part(d(0, 2));
  c[11] = real_scalar_of_imag_part(d(0, 2));
  c[12] = real_scalar_of_real_part(d(1, 2));
  c[13] = real_scalar_of_imag_part(d(1, 2));
  return c;
}

template <Scalar S>
G2AlgebraElem<S> from_coordinates(const CMatrix<S>& c) {
  if (c.rows() != kAlgebraDim || c.cols() != 1) throw DomainError("from_coordinates: expected 14 x 1, got " + c.shape());
  const auto& basis = basis14<S>();
  CMatrix<S> a(3, 1);
  CMatrix<S> d(3, 3);
  for (std::size_t j = 0; j < kAlgebraDim; ++j) {
    if (is_zero(c[j])) continue;
    a += basis[j].a() * c[j];
    d += basis[j].d() * c[j];
  }
  return G2AlgebraElem<S>(std::move(a), std::move(d));
}

template <Scalar S>
const StructureConstants<S>& g2_structure_constants() {
  static const StructureConstants<S> constants(kAlgebraDim, [](std::size_t i, std::size_t j) {
    const auto& basis = basis14<S>();
    return coordinates(bracket(basis[i], basis[j]));
  });
  return constants;
}

template <Scalar S>
CMatrix<S> ad_matrix(const G2AlgebraElem<S>& x) {
  const auto& c = g2_structure_constants<S>();
  const CMatrix<S> cx = coordinates(x);
  CMatrix<S> ad(kAlgebraDim, kAlgebraDim);
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    if (is_zero(cx[i])) continue;
    for (std::size_t j = 0; j < kAlgebraDim; ++j)
      for (std::size_t m = 0; m < kAlgebraDim; ++m) {
        if (is_zero(c(i, j, m))) continue;
        ad(m, j) += cx[i] * c(i, j, m);
      }
  }
  return ad;
}

template <Scalar S>
S killing_form(const G2AlgebraElem<S>& x, const G2AlgebraElem<S>& y) {
  return (ad_matrix(x) * ad_matrix(y)).trace();
}

template <Scalar S>
CMatrix<S> killing_gram() {
  const auto& basis = basis14<S>();
  std::vector<CMatrix<S>> ads;
  ads.reserve(kAlgebraDim);
  for (const auto& e : basis) ads.push_back(ad_matrix(e));
  CMatrix<S> k(kAlgebraDim, kAlgebraDim);
  for (std::size_t i = 0; i < kAlgebraDim; ++i)
    for (std::size_t j = i; j < kAlgebraDim; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

template <Scalar S>
const CMatrix<S>& basis_change() {
  static const CMatrix<S> p = [] {
    CMatrix<S> m(7, 7);
    const S half = from_ratio<S>(1, 2);
    const S half_i = half * imag_unit<S>();
    m(0, 0) = S(1);
    for (std::size_t k = 0; k < 3; ++k) {
      m(1 + 2 * k, 1 + k) = half;
      m(2 + 2 * k, 1 + k) = -half_i;
      m(1 + 2 * k, 4 + k) = half;
      m(2 + 2 * k, 4 + k) = half_i;
    }
    return m;
  }();
  return p;
}

template <Scalar S>
const CMatrix<S>& basis_change_inverse() {
  static const CMatrix<S> inv = inverse(basis_change<S>());
  return inv;
}

template <Scalar S>
const CMatrix<S>& split_gram() {
  static const CMatrix<S> g = basis_change<S>().adjoint() * basis_change<S>();
  return g;
}

template <Scalar S>
double skew_hermitian_residual(const CMatrix<S>& x) {
  const CMatrix<S>& g = split_gram<S>();
  return max_abs(CMatrix<S>(x.adjoint() * g + g * x));
}

// ---------------------------------------------------------------------------
// Group elements

template <Scalar S>
G2GroupElem<S>::G2GroupElem(CMatrix<S> split)
    : split_(std::move(split)), real_(basis_change<S>() * split_ * basis_change_inverse<S>()) {}

template <Scalar S>
G2GroupElem<S> G2GroupElem<S>::identity() {
  return G2GroupElem(CMatrix<S>::identity(7));
}

template <Scalar S>
G2GroupElem<S> G2GroupElem<S>::from_split(const CMatrix<S>& m, double tol) {
  if (m.rows() != 7 || m.cols() != 7) throw DomainError("G2GroupElem: expected 7 x 7, got " + m.shape());
  G2GroupElem g(m);
  const double orth = g.orthogonality_residual();
  if (!within<S>(orth, tol)) {
    throw DomainError("G2GroupElem: rho_g is not in SO(7) (residual " + std::to_string(orth) + ")");
  }
  const double ad = g.ad_invariance_residual();
  if (!within<S>(ad, tol)) {
    throw DomainError("G2GroupElem: conjugation does not preserve g2 (residual " + std::to_string(ad) + ")");
  }
  return g;
}

template <Scalar S>
CMatrix<S> G2GroupElem<S>::frame_matrix() const {
  return basis_change<S>() * split_;
}

template <Scalar S>
MovingFrame<S> G2GroupElem<S>::frame() const {
  const CMatrix<S> f = frame_matrix();
  return {f.col(0), f.col(1), f.col(2), f.col(3)};
}

template <Scalar S>
G2GroupElem<S> G2GroupElem<S>::inverse() const {
  return G2GroupElem(g2s6::inverse(split_));
}

template <Scalar S>
double G2GroupElem<S>::orthogonality_residual() const {
  double r = 0.0;
  for (const auto& e : real_.data()) r = std::max(r, std::abs(imag_double(e)));
  r = std::max(r, max_abs_diff(CMatrix<S>(real_.transpose() * real_), CMatrix<S>::identity(7)));
  r = std::max(r, magnitude(S(det(real_) - S(1))));
  return r;
}

template <Scalar S>
double G2GroupElem<S>::ad_invariance_residual() const {
  const CMatrix<S> inv = g2s6::inverse(split_);
  double r = 0.0;
  for (const auto& e : basis14<S>()) r = std::max(r, project_algebra(CMatrix<S>(split_ * embed_algebra(e) * inv)).residual);
  return r;
}

template <Scalar S>
G2GroupElem<S> su3_embed_group(const CMatrix<S>& a, double tol) {
  if (a.rows() != 3 || a.cols() != 3) throw DomainError("su3_embed_group: A must be 3 x 3");
  const double unitary = max_abs_diff(CMatrix<S>(a.adjoint() * a), CMatrix<S>::identity(3));
  const double unimodular = magnitude(S(det(a) - S(1)));
  if (!within<S>(std::max(unitary, unimodular), tol)) throw DomainError("su3_embed_group: A is not in SU(3)");
  CMatrix<S> m(7, 7);
  m(0, 0) = S(1);
  m.set_block(1, 1, a);
  m.set_block(4, 4, a.conjugate());
  return G2GroupElem<S>::from_split(m, std::max(tol, 1e-8));
}

G2GroupElem<Float> exp_group(const G2AlgebraElem<Float>& el, double t, double tol) {
  return G2GroupElem<Float>::from_split(matrix_exp(embed_algebra(el) * Float(t, 0.0)), tol);
}

template <Scalar S>
G2AlgebraElem<S> maurer_cartan(const G2GroupElem<S>& /*g*/, const G2AlgebraElem<S>& left_translated) {
  return left_translated;
}

template <Scalar S>
G2AlgebraElem<S> maurer_cartan_raw(const G2GroupElem<S>& g, const CMatrix<S>& tangent, double tol) {
  auto proj = project_algebra(CMatrix<S>(inverse(g.split()) * tangent));
  if (!within<S>(proj.residual, tol)) {
    throw DomainError("maurer_cartan_raw: g^{-1} X is not in g2 (residual " + std::to_string(proj.residual) + ")");
  }
  return std::move(proj.element);
}

template <Scalar S>
MultiForm<S> phi_form() {
  std::vector<CMatrix<S>> values;
  for (const auto& e : basis14<S>()) values.push_back(embed_algebra(e));
  return MultiForm<S>::one_form(kAlgebraDim, values);
}

template <Scalar S>
MultiForm<S> theta_form() {
  std::vector<CMatrix<S>> values;
  for (const auto& e : basis14<S>()) values.push_back(theta(e));
  return MultiForm<S>::one_form(kAlgebraDim, values);
}

template <Scalar S>
MultiForm<S> kappa_form() {
  std::vector<CMatrix<S>> values;
  for (const auto& e : basis14<S>()) values.push_back(kappa(e));
  return MultiForm<S>::one_form(kAlgebraDim, values);
}

template <Scalar S>
CMatrix<S> adjoint_coordinates(const G2GroupElem<S>& g, double tol) {
  const CMatrix<S> inv = inverse(g.split());
  CMatrix<S> ad(kAlgebraDim, kAlgebraDim);
  const auto& basis = basis14<S>();
  for (std::size_t j = 0; j < kAlgebraDim; ++j) {
    const auto proj = project_algebra(CMatrix<S>(g.split() * embed_algebra(basis[j]) * inv));
    if (!within<S>(proj.residual, tol)) throw ConsistencyError("adjoint_coordinates: Ad_g left g2");
    ad.set_block(0, j, coordinates(proj.element));
  }
  return ad;
}

template <Scalar S>
RightTranslation<S> right_translate(const CMatrix<S>& a, const MultiForm<S>& form, double tol) {
  if (form.dim() != kAlgebraDim || form.degree() != 1 || form.value_rows() != 3 || form.value_cols() != 1) {
    throw DomainError("right_translate: expected a C^3-valued 1-form on g2");
  }
  const G2GroupElem<S> embedded = su3_embed_group(a, tol);
  // (R_A^* phi)(X) = A^{-1} phi(X) A, i.e. the pullback along Ad_{A^{-1}}.
  const CMatrix<S> ad_inv = adjoint_coordinates(embedded.inverse(), std::max(tol, 1e-8));
  RightTranslation<S> out{pullback(form, ad_inv), multiply(inverse(a), form), 0.0};
  out.residual = max_abs_diff(out.pulled_back, out.expected);
  if (!within<S>(out.residual, tol)) {
    throw ConsistencyError("right_translate: R_A^* theta != A^{-1} theta (residual " + std::to_string(out.residual) + ")");
  }
  return out;
}

G2GroupElem<Float> lift_point(const CMatrix<Float>& y, double tol, const G2GroupElem<Float>* start) {
  if (y.rows() != 7 || y.cols() != 1) throw DomainError("lift_point: y must be 7 x 1");
  double norm2 = 0.0;
  for (const auto& e : y.data()) {
    if (std::abs(e.imag()) > kDefaultTolerances.identity) throw DomainError("lift_point: y must be real");
    norm2 += e.real() * e.real();
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) throw DomainError("lift_point: y must be a unit vector");

  G2GroupElem<Float> g = start ? *start : G2GroupElem<Float>::identity();
  auto residual_of = [&y](const G2GroupElem<Float>& h) { return max_abs_diff(h.real().col(0), y); };

  double residual = residual_of(g);
  constexpr int kMaxSteps = 60;
  for (int step = 0; step < kMaxSteps && residual > 1e-14; ++step) {
    const CMatrix<Float> x = g.real().col(0);
    const double cos_angle = real_dot(x, y);
    CMatrix<Float> w = y - x * Float(cos_angle, 0.0);
    double w_norm = std::sqrt(real_dot(w, w));
    const CMatrix<Float> dx = horizontal_dx(g);
    double angle = std::atan2(w_norm, cos_angle);
    if (w_norm < 1e-15) {
      if (cos_angle > 0) break;
      // Antipode: any tangent direction is a geodesic to y.
      w = dx.col(0);
      w_norm = std::sqrt(real_dot(w, w));
      angle = std::numbers::pi;
    }
    // Horizontal coordinates delta with dx_g(E(delta)) = angle * w / |w|; dx_g scales lengths by 2.
    CMatrix<Float> coords(kAlgebraDim, 1);
    for (std::size_t j = 0; j < kHorizontalDim; ++j) {
      coords[j] = Float(angle * real_dot(dx.col(j), w) / (4.0 * w_norm), 0.0);
    }
    G2AlgebraElem<Float> delta = from_coordinates(coords);

    // Damped step: halve until the residual decreases.
    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving) {
      G2GroupElem<Float> candidate = g * exp_group(delta, scale, 1e-6);
      const double r = residual_of(candidate);
      if (r < residual) {
        g = candidate;
        residual = r;
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) break;
  }
  if (residual > tol) {
    throw NumericalError("lift_point: residual " + std::to_string(residual) + " above tolerance");
  }
  return g;
}

CMatrix<Float> random_su3_algebra(Rng& rng, double scale) {
  const CMatrix<Float> x = random_matrix<Float>(rng, 3, 3);
  CMatrix<Float> d = (x - x.adjoint()) * Float(0.5 * scale, 0.0);
  const Float shift = d.trace() / 3.0;
  for (std::size_t k = 0; k < 3; ++k) d(k, k) -= shift;
  return d;
}

CMatrix<Float> random_su3(Rng& rng, double scale) { return matrix_exp(random_su3_algebra(rng, scale)); }

G2AlgebraElem<Float> random_algebra_element(Rng& rng, double scale) {
  CMatrix<Float> a = random_matrix<Float>(rng, 3, 1) * Float(scale, 0.0);
  CMatrix<Float> d = random_su3_algebra(rng, scale);
  return G2AlgebraElem<Float>(std::move(a), std::move(d));
}

G2AlgebraElem<Exact> random_exact_algebra_element(Rng& rng) {
  CMatrix<Exact> c(kAlgebraDim, 1);
  for (std::size_t j = 0; j < kAlgebraDim; ++j) {
    const long num = rng.integer(-4, 4);
    const long den = rng.integer(1, 3);
    c[j] = Exact::from_ratio(num, den);
  }
  return from_coordinates(c);
}

#define G2S6_INSTANTIATE_G2(S)                                                                         \
  template class G2AlgebraElem<S>;                                                                     \
  template class G2GroupElem<S>;                                                                       \
  template CMatrix<S> cross_matrix<S>(const CMatrix<S>&);                                              \
  template CMatrix<S> embed_algebra<S>(const G2AlgebraElem<S>&);                                       \
  template AlgebraProjection<S> project_algebra<S>(const CMatrix<S>&);                                 \
  template G2AlgebraElem<S> bracket<S>(const G2AlgebraElem<S>&, const G2AlgebraElem<S>&, double);      \
  template const std::vector<G2AlgebraElem<S>>& basis14<S>();                                          \
  template CMatrix<S> coordinates<S>(const G2AlgebraElem<S>&);                                         \
  template G2AlgebraElem<S> from_coordinates<S>(const CMatrix<S>&);                                    \
  template const StructureConstants<S>& g2_structure_constants<S>();                                   \
  template CMatrix<S> ad_matrix<S>(const G2AlgebraElem<S>&);                                           \
  template S killing_form<S>(const G2AlgebraElem<S>&, const G2AlgebraElem<S>&);                        \
  template CMatrix<S> killing_gram<S>();                                                               \
  template const CMatrix<S>& basis_change<S>();                                                        \
  template const CMatrix<S>& basis_change_inverse<S>();                                                \
  template const CMatrix<S>& split_gram<S>();                                                          \
  template double skew_hermitian_residual<S>(const CMatrix<S>&);                                       \
  template G2GroupElem<S> su3_embed_group<S>(const CMatrix<S>&, double);                               \
  template G2AlgebraElem<S> maurer_cartan<S>(const G2GroupElem<S>&, const G2AlgebraElem<S>&);          \
  template G2AlgebraElem<S> maurer_cartan_raw<S>(const G2GroupElem<S>&, const CMatrix<S>&, double);    \
  template MultiForm<S> phi_form<S>();                                                                 \
  template MultiForm<S> theta_form<S>();                                                               \
  template MultiForm<S> kappa_form<S>();                                                               \
  template CMatrix<S> adjoint_coordinates<S>(const G2GroupElem<S>&, double);                           \
  template RightTranslation<S> right_translate<S>(const CMatrix<S>&, const MultiForm<S>&, double);

G2S6_INSTANTIATE_G2(Exact)
G2S6_INSTANTIATE_G2(Float)

#undef G2S6_INSTANTIATE_G2

}  // namespace g2s6
