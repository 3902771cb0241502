#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "g2s6/chern.hpp"
#include "g2s6/errors.hpp"
#include "g2s6/g2.hpp"
#include "g2s6/linalg.hpp"
#include "g2s6/random.hpp"
#include "g2s6/sphere.hpp"

namespace g2s6::verify {
namespace {

struct Context {
  const SuiteOptions& options;
  Rng rng;

  std::size_t samples(std::size_t fallback) const { return options.samples.value_or(fallback); }
  double tol(double fallback) const { return options.tol.value_or(fallback); }
};

using CheckFn = std::function<CheckReport(Context&)>;

struct CheckDef {
  std::string name;
  Backend backend;
  CheckFn run;
};

CheckReport exact_report() { return {"", Backend::exact}; }
CheckReport float_report() { return {"", Backend::floating}; }

// ---------------------------------------------------------------------------
// Shared sampling

SpherePoint<Float> random_point(Rng& rng) { return sphere_point(random_unit_vector(rng, 7)); }

G2GroupElem<Float> random_group(Rng& rng) { return exp_group(random_algebra_element(rng)); }

/// Exact elements of SU(3): signed permutations, a diagonal phase and two
/// Pythagorean rotations.
std::vector<CMatrix<Exact>> exact_su3() {
  const Exact i = Exact::i();
  const Exact c = Exact::from_ratio(3, 5);
  const Exact s = Exact::from_ratio(4, 5);
  std::vector<CMatrix<Exact>> out = {
      CMatrix<Exact>::diagonal({i, -i, 1}),
      CMatrix<Exact>(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0}),
      CMatrix<Exact>(3, 3, {0, -1, 0, 1, 0, 0, 0, 0, 1}),
      CMatrix<Exact>(3, 3, {c, -s, 0, s, c, 0, 0, 0, 1}),
      CMatrix<Exact>(3, 3, {c, s * i, 0, s * i, c, 0, 0, 0, 1}),
  };
  const std::size_t base = out.size();
  for (std::size_t a = 0; a < base; ++a)
    for (std::size_t b = 0; b < base; ++b) out.push_back(out[a] * out[b]);
  return out;
}

CMatrix<Float> random_tangent(const SpherePoint<Float>& p, Rng& rng) {
  return tangent_vector(p, random_matrix<Float>(rng, 3, 1)).ambient;
}

double g2_embed_residual(const G2AlgebraElem<Exact>& x) { return max_abs(embed_algebra(x)); }

// ---------------------------------------------------------------------------
// algebra

CheckReport algebra_closure(Context&) {
  CheckReport r = exact_report();
  const auto& basis = basis14<Exact>();
  for (std::size_t i = 0; i < kAlgebraDim; ++i)
    for (std::size_t j = i + 1; j < kAlgebraDim; ++j) {
      const CMatrix<Exact> x = embed_algebra(basis[i]);
      const CMatrix<Exact> y = embed_algebra(basis[j]);
      r.record(project_algebra(CMatrix<Exact>(x * y - y * x)).residual, 0.0);
    }
  return r;
}

CheckReport algebra_jacobi(Context& ctx) {
  CheckReport r = exact_report();
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const auto x = random_exact_algebra_element(ctx.rng);
    const auto y = random_exact_algebra_element(ctx.rng);
    const auto z = random_exact_algebra_element(ctx.rng);
    const auto sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    r.record(g2_embed_residual(sum), 0.0);
  }
  return r;
}

CheckReport algebra_killing(Context&) {
  CheckReport r = exact_report();
  const CMatrix<Exact> k = killing_gram<Exact>();
  const Signature sig = signature(k);
  r.record(0.0, sig.positive == 0 && sig.negative == kAlgebraDim);
  return r;
}

CheckReport algebra_skew_hermitian(Context&) {
  CheckReport r = exact_report();
  for (const auto& e : basis14<Exact>()) {
    const CMatrix<Exact> m = embed_algebra(e);
    const CMatrix<Exact> real = basis_change<Exact>() * m * basis_change_inverse<Exact>();
    double imag = 0.0;
    for (const auto& z : real.data()) imag = std::max(imag, std::abs(imag_double(z)));
    const double skew = max_abs(CMatrix<Exact>(real + real.transpose()));
    r.record(std::max({skew_hermitian_residual(m), imag, skew}), 0.0);
  }
  return r;
}

CheckReport algebra_exp_group(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-9);
  for (std::size_t n = 0; n < ctx.samples(100); ++n) {
    const auto el = random_algebra_element(ctx.rng, 2.0);
    // Validate loosely here and measure the residuals against tol below.
    const auto g = G2GroupElem<Float>::from_split(matrix_exp(embed_algebra(el)), 1.0);
    r.record(std::max(g.orthogonality_residual(), g.ad_invariance_residual()), tol);
  }
  return r;
}

// ---------------------------------------------------------------------------
// structure-equations

CheckReport pick(std::vector<CheckReport> reports, std::string_view name) {
  for (auto& rep : reports)
    if (rep.name == name) return rep;
  throw ConsistencyError("missing report " + std::string(name));
}

CheckReport first_structure(Context& ctx, std::string_view which) {
  return pick(verify_first_structure_equation(ctx.rng, ctx.samples(20), 1e-6, ctx.tol(1e-6)), which);
}

// ---------------------------------------------------------------------------
// nearly-kahler

CheckReport nk_pullback_exact(Context&) {
  CheckReport r = exact_report();
  std::vector<G2GroupElem<Exact>> witnesses = {G2GroupElem<Exact>::identity()};
  for (const auto& a : exact_su3()) witnesses.push_back(su3_embed_group(a));
  for (const auto& g : witnesses) {
    const auto cs = canonical_structures(x_map(g), 0.0);
    r.record(cs.pullback_residual, 0.0);
  }
  return r;
}

CheckReport nk_pullback_float(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-8);
  for (std::size_t n = 0; n < ctx.samples(100); ++n) {
    const auto cs = canonical_structures(random_point(ctx.rng), 1.0);
    r.record(cs.pullback_residual, tol);
  }
  return r;
}

CheckReport nk_dx_norm_exact(Context& ctx) {
  CheckReport r = exact_report();
  const auto g = G2GroupElem<Exact>::identity();
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const auto el = random_exact_algebra_element(ctx.rng);
    const CMatrix<Exact> v = dx(g, el);
    const Exact lhs = bilinear_dot(v, v);
    const Exact rhs = Exact(4) * hermitian_dot(el.a(), el.a());
    r.record(magnitude(Exact(lhs - rhs)), 0.0);
  }
  return r;
}

CheckReport nk_dx_norm_float(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-8);
  for (std::size_t n = 0; n < ctx.samples(100); ++n) {
    const auto g = random_group(ctx.rng);
    const auto el = random_algebra_element(ctx.rng);
    const CMatrix<Float> v = dx(g, el);
    const double lhs = std::real(bilinear_dot(v, v));
    const double rhs = 4.0 * std::real(hermitian_dot(el.a(), el.a()));
    double orth = std::abs(bilinear_dot(g.real().col(0), v));
    r.record(std::max(std::abs(lhs - rhs) / std::max(1.0, rhs), orth), tol);
  }
  return r;
}

CheckReport nk_upsilon_type(Context&) {
  CheckReport r = exact_report();
  const auto p = x_map(G2GroupElem<Exact>::identity());
  const auto split = jcan_splitting<Exact>();
  const auto ups = upsilon(p);
  r.record(max_abs_diff(type_project(ups, split, 3, 0), ups), 0.0);
  for (std::size_t q = 1; q <= 3; ++q) r.record(type_project(ups, split, 3 - q, q).max_abs(), 0.0);
  const auto e = [&p](long a, long b, long c) { return tangent_vector(p, CMatrix<Exact>::column({a, b, c})).ambient; };
  const Exact value = upsilon_ambient(p, e(1, 0, 0), e(0, 1, 0), e(0, 0, 1));
  r.record(magnitude(Exact(value - Exact(8))), 0.0);
  return r;
}

template <Scalar S>
double compatibility_at(const SpherePoint<S>& p, const CMatrix<S>& u, const CMatrix<S>& v) {
  const CMatrix<S> j = jcan_ambient(p);
  const auto omega = [&j](const CMatrix<S>& a, const CMatrix<S>& b) { return bilinear_dot(CMatrix<S>(j * a), b); };
  const CMatrix<S> ju = j * u;
  const CMatrix<S> jv = j * v;
  double res = magnitude(S(omega(ju, jv) - omega(u, v)));
  res = std::max(res, magnitude(S(bilinear_dot(ju, jv) - bilinear_dot(u, v))));
  res = std::max(res, max_abs(CMatrix<S>(j * ju + u)));
  res = std::max(res, magnitude(S(omega(u, v) + omega(v, u))));
  return res;
}

CheckReport nk_jcan_exact(Context&) {
  CheckReport r = exact_report();
  const auto p = x_map(G2GroupElem<Exact>::identity());
  const auto cs = canonical_structures(p, 0.0);
  r.record(max_abs_diff(CMatrix<Exact>(cs.j * cs.j), CMatrix<Exact>(-CMatrix<Exact>::identity(6))), 0.0);
  r.record(max_abs_diff(CMatrix<Exact>(cs.j.transpose() * cs.omega * cs.j), cs.omega), 0.0);
  r.record(magnitude(Exact(det(cs.omega) - Exact(1))), 0.0);
  const auto& basis = basis14<Exact>();
  for (std::size_t i = 0; i < kHorizontalDim; ++i)
    for (std::size_t j = 0; j < kHorizontalDim; ++j) {
      r.record(compatibility_at(p, dx(p.witness, basis[i]), dx(p.witness, basis[j])), 0.0);
    }
  return r;
}

CheckReport nk_jcan_float(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-9);
  for (std::size_t n = 0; n < ctx.samples(100); ++n) {
    const auto p = random_point(ctx.rng);
    const auto cs = canonical_structures(p, 1.0);
    double res = compatibility_at(p, random_tangent(p, ctx.rng), random_tangent(p, ctx.rng));
    // omega nondegenerate: |det omega| = 1 in an orthonormal frame.
    res = std::max(res, std::abs(std::abs(det(cs.omega)) - 1.0));
    r.record(res, tol);
  }
  return r;
}

// ---------------------------------------------------------------------------
// equivariance

CheckReport eq_right_translation_exact(Context&) {
  CheckReport r = exact_report();
  const auto theta = theta_form<Exact>();
  for (const auto& a : exact_su3()) r.record(right_translate(a, theta, 0.0).residual, 0.0);
  return r;
}

CheckReport eq_right_translation_float(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-9);
  const auto theta = theta_form<Float>();
  for (std::size_t n = 0; n < ctx.samples(100); ++n) {
    r.record(right_translate(random_su3(ctx.rng), theta, 1.0).residual, tol);
  }
  return r;
}

SpherePoint<Float> rewitness(const SpherePoint<Float>& p, const CMatrix<Float>& a) {
  return {p.y, p.witness * su3_embed_group(a, 1e-9)};
}

CheckReport eq_witness_independence(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-8);
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const auto p = random_point(ctx.rng);
    const auto q = rewitness(p, random_su3(ctx.rng));
    const CMatrix<Float> v = random_tangent(p, ctx.rng);
    const CMatrix<Float> jp = jcan_apply(p, tangent_from_ambient(p, v)).ambient;
    const CMatrix<Float> jq = jcan_apply(q, tangent_from_ambient(q, v)).ambient;
    r.record(std::max(max_abs_diff(jp, jq), max_abs_diff(jcan_ambient(p), jcan_ambient(q))), tol);
  }
  return r;
}

CheckReport eq_upsilon_invariance(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-8);
  for (std::size_t n = 0; n < ctx.samples(100); ++n) {
    const auto p = random_point(ctx.rng);
    const auto q = rewitness(p, random_su3(ctx.rng));
    const CMatrix<Float> u = random_tangent(p, ctx.rng);
    const CMatrix<Float> v = random_tangent(p, ctx.rng);
    const CMatrix<Float> w = random_tangent(p, ctx.rng);
    r.record(std::abs(upsilon_ambient(p, u, v, w) - upsilon_ambient(q, u, v, w)), tol);
  }
  return r;
}

CheckReport eq_lift_stabilizer(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-8);
  for (std::size_t n = 0; n < ctx.samples(50); ++n) {
    const CMatrix<Float> y = random_unit_vector(ctx.rng, 7);
    const auto start = random_group(ctx.rng);
    const auto g1 = lift_point(y);
    const auto g2 = lift_point(y, 1e-8, &start);
    // g1^{-1} g2 fixes e1, so its split matrix is diag(1, A, conj A) with A in SU(3).
    const CMatrix<Float> m = (g1.inverse() * g2).split();
    CMatrix<Float> expected(7, 7);
    expected(0, 0) = Float(1.0, 0.0);
    const CMatrix<Float> a = m.block(1, 1, 3, 3);
    expected.set_block(1, 1, a);
    expected.set_block(4, 4, a.conjugate());
    double res = max_abs_diff(m, expected);
    res = std::max(res, max_abs_diff(CMatrix<Float>(a.adjoint() * a), CMatrix<Float>::identity(3)));
    res = std::max(res, std::abs(det(a) - Float(1.0, 0.0)));
    res = std::max({res, max_abs_diff(g1.real().col(0), y), max_abs_diff(g2.real().col(0), y)});
    r.record(res, tol);
  }
  return r;
}

// ---------------------------------------------------------------------------
// linear-algebra

template <Scalar S>
CMatrix<S> gram_plus(const CMatrix<S>& c, const S& shift) {
  return c.adjoint() * c + CMatrix<S>::identity(c.rows()) * shift;
}

CheckReport la_det_order_exact(Context& ctx) {
  CheckReport r = exact_report();
  for (std::size_t n = 0; n < ctx.samples(1000); ++n) {
    const std::size_t dim = 2 + static_cast<std::size_t>(ctx.rng.integer(0, 2));
    const CMatrix<Exact> b = gram_plus(random_matrix<Exact>(ctx.rng, dim, dim), Exact::from_ratio(1, 7));
    const CMatrix<Exact> a = b + gram_plus(random_matrix<Exact>(ctx.rng, dim, dim), Exact::from_ratio(1, 11));
    r.record(0.0, det_order_check(a, b));
  }
  return r;
}

CheckReport la_det_order_float(Context& ctx) {
  CheckReport r = float_report();
  for (std::size_t n = 0; n < ctx.samples(1000); ++n) {
    const std::size_t dim = 2 + static_cast<std::size_t>(ctx.rng.integer(0, 3));
    const CMatrix<Float> b = gram_plus(random_matrix<Float>(ctx.rng, dim, dim), Float(0.1, 0.0));
    const CMatrix<Float> a = b + gram_plus(random_matrix<Float>(ctx.rng, dim, dim), Float(0.1, 0.0));
    const double margin = std::real(det(a)) - std::real(det(b));
    r.record(0.0, det_order_check(a, b) && margin > 1e-10);
  }
  return r;
}

CheckReport la_det_multiplicative(Context& ctx) {
  CheckReport r = exact_report();
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const std::size_t dim = 3 + static_cast<std::size_t>(ctx.rng.integer(0, 1));
    const auto m = random_matrix<Exact>(ctx.rng, dim, dim);
    const auto k = random_matrix<Exact>(ctx.rng, dim, dim);
    r.record(magnitude(Exact(det(CMatrix<Exact>(m * k)) - det(m) * det(k))), 0.0);
  }
  return r;
}

CheckReport la_signature_congruence(Context& ctx) {
  CheckReport r = exact_report();
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const std::size_t dim = 3;
    CMatrix<Exact> d(dim, dim);
    Signature expected;
    for (std::size_t k = 0; k < dim; ++k) {
      const bool positive = ctx.rng.integer(0, 1) == 1;
      d(k, k) = Exact::from_ratio(positive ? ctx.rng.integer(1, 5) : -ctx.rng.integer(1, 5), ctx.rng.integer(1, 3));
      ++(positive ? expected.positive : expected.negative);
    }
    CMatrix<Exact> p = random_matrix<Exact>(ctx.rng, dim, dim);
    while (det(p).is_zero()) p = random_matrix<Exact>(ctx.rng, dim, dim);
    r.record(0.0, signature(CMatrix<Exact>(p.adjoint() * d * p)) == expected);
  }
  return r;
}

CheckReport la_splitting_exact(Context&) {
  CheckReport r = exact_report();
  const auto p = x_map(G2GroupElem<Exact>::identity());
  for (std::size_t q = 0; q <= 3; ++q) {
    const auto j = make_compatible(p, stratum_representative<Exact>(q));
    const auto frame = default_frame(j);
    const auto split = Splitting<Exact>::from_coframe(frame.u);
    r.record(max_abs_diff(from_splitting(split), j.j), 0.0);
    // omega = i h z^a ^ conj z^b with h = 2H.
    const auto cd = solve_rs(frame);
    const auto omega = omega_from_hermitian(CMatrix<Exact>(cd.h * Exact(2)), split);
    r.record(max_abs_diff(omega, MultiForm<Exact>::from_antisymmetric(jcan_frame<Exact>().transpose())), 0.0);
  }
  return r;
}

Signature stratum(std::size_t q) { return {6 - 2 * q, 2 * q}; }

CheckReport la_splitting_float(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-9);
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const auto p = random_point(ctx.rng);
    const auto j = sample_compatible_J(p, stratum(n % 4), ctx.rng);
    const auto frame = default_frame(j);
    const auto split = Splitting<Float>::from_coframe(frame.u);
    const auto cd = solve_rs(frame);
    const auto omega = omega_from_hermitian(CMatrix<Float>(cd.h * Float(2.0, 0.0)), split, 1e-8);
    const double res = std::max(max_abs_diff(from_splitting(split, 1e-8), j.j),
                                max_abs_diff(omega, MultiForm<Float>::from_antisymmetric(jcan_frame<Float>().transpose())));
    r.record(res, tol);
  }
  return r;
}

// ---------------------------------------------------------------------------
// chern

CheckReport chern_index_strata(Context& ctx) {
  CheckReport r = float_report();
  r.record(0.0, omega_index(jcan_frame<Exact>()) == stratum(0));
  r.record(0.0, omega_index(CMatrix<Exact>(-jcan_frame<Exact>())) == stratum(3));
  r.record(0.0, omega_index(stratum_representative<Exact>(1)) == stratum(1));
  const auto p = random_point(ctx.rng);
  const std::size_t seeds = ctx.samples(100);
  for (std::size_t seed = 0; seed < seeds; ++seed) {
    for (std::size_t q = 0; q <= 3; ++q) {
      const std::uint64_t s = ctx.options.seed * 1000003u + seed;
      bool ok = false;
      try {
        const auto j = sample_compatible_J(p, stratum(q), s);
        const auto cd = solve_rs(default_frame(j));
        const Signature h = signature(cd.h);
        ok = omega_index(j.j) == stratum(q) && h.positive == 3 - q && h.negative == q;
      } catch (const ConsistencyError&) {
        ok = false;
      }
      r.record(0.0, ok);
    }
  }
  return r;
}

CheckReport chern_solve_rs(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-10);
  {
    const auto p = x_map(G2GroupElem<Exact>::identity());
    const auto plus = solve_rs(default_frame(make_compatible(p, jcan_frame<Exact>())));
    const auto minus = solve_rs(default_frame(make_compatible(p, CMatrix<Exact>(-jcan_frame<Exact>()))));
    const auto id = CMatrix<Exact>::identity(3);
    const auto zero = CMatrix<Exact>(3, 3);
    r.record(0.0, plus.r == id && plus.s == zero && minus.r == zero && minus.s == id);
  }
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const auto p = random_point(ctx.rng);
    const auto j = sample_compatible_J(p, stratum(n % 4), ctx.rng);
    const auto cd = solve_rs(default_frame(j), 1.0);
    r.record(cd.residual, cd.residual <= tol && std::abs(cd.blockdet) > 1e-12);
  }
  return r;
}

CheckReport chern_h_omega(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-9);
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const auto p = random_point(ctx.rng);
    const std::size_t q = n % 4;
    const auto j = sample_compatible_J(p, stratum(q), ctx.rng);
    const auto frame = default_frame(j);
    const auto cd = solve_rs(frame);
    const double res = std::max(omega_reconstruction_residual(cd, frame), max_abs_diff(cd.h, cd.h.adjoint()));
    const Signature h = signature(cd.h);
    r.record(res, res <= tol && h.positive == 3 - q && h.negative == q);
  }
  return r;
}

ChernData<Exact> random_exact_rs(Rng& rng) {
  ChernData<Exact> cd;
  cd.r = random_matrix<Exact>(rng, 3, 3);
  cd.s = random_matrix<Exact>(rng, 3, 3);
  cd.h = h_matrix(cd);
  return cd;
}

CheckReport chern_upsilon_components(Context& ctx) {
  CheckReport r = exact_report();
  const Exact eight(8);
  for (std::size_t n = 0; n < ctx.samples(500); ++n) {
    const auto cd = random_exact_rs(ctx.rng);
    const auto c = upsilon_components(cd, 0.0);
    r.record(std::max(magnitude(Exact(c.c30 - eight * det(cd.r))), magnitude(Exact(c.c03 - eight * det(cd.s)))), 0.0);
  }
  return r;
}

CheckReport chern_defect_reconstruction(Context& ctx) {
  CheckReport r = exact_report();
  const Exact minus_12i = Exact(-12) * Exact::i();
  for (std::size_t n = 0; n < ctx.samples(500); ++n) {
    const auto cd = random_exact_rs(ctx.rng);
    const Exact defect = chern_defect(cd);
    r.record(std::max(magnitude(Exact(reconstruct_defect(cd) - defect)),
                      magnitude(Exact(domega_30_coefficient(cd) - minus_12i * defect))),
             0.0);
  }
  return r;
}

CheckReport chern_theorem_witness(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-9);
  const std::size_t per_stratum = ctx.samples(1000);
  for (const std::size_t q : {std::size_t{0}, std::size_t{3}}) {
    for (std::size_t n = 0; n < per_stratum; ++n) {
      const auto p = random_point(ctx.rng);
      const auto j = sample_compatible_J(p, stratum(q), ctx.rng);
      const auto frame = default_frame(j);
      const auto cd = solve_rs(frame);
      const double omega_res = omega_reconstruction_residual(cd, frame);
      const WitnessReport w = theorem_witness(cd);
      const bool sign_ok = w.positive == (q == 0);
      const bool det_ok = q == 0 ? w.det_r > w.det_s : w.det_s > w.det_r;
      r.record(omega_res, w.ok && sign_ok && det_ok && omega_res <= tol && w.defect != 0.0);
    }
  }
  return r;
}

CheckReport chern_frame_covariance(Context& ctx) {
  CheckReport r = float_report();
  const double tol = ctx.tol(1e-9);
  for (std::size_t n = 0; n < ctx.samples(200); ++n) {
    const auto p = random_point(ctx.rng);
    const auto j = sample_compatible_J(p, stratum(n % 4), ctx.rng);
    const auto frame = default_frame(j);
    const auto cd = solve_rs(frame);
    CMatrix<Float> pm = random_matrix<Float>(ctx.rng, 3, 3) + CMatrix<Float>::identity(3) * Float(1.5, 0.0);
    const auto moved = solve_rs(change_frame(frame, pm));
    const CMatrix<Float> p_inv = inverse(pm);
    const Float det_p = det(pm);

    double res = max_abs_diff(moved.r, CMatrix<Float>(cd.r * p_inv));
    res = std::max(res, max_abs_diff(moved.s, CMatrix<Float>(cd.s * p_inv.conjugate())));
    // defect' = defect / det P, so vanishing of the defect is frame-invariant.
    res = std::max(res, std::abs(chern_defect(moved) - chern_defect(cd) / det_p) / std::max(1.0, std::abs(chern_defect(cd))));
    const bool signature_ok = signature(moved.h) == signature(cd.h);
    const double before = std::abs(det(cd.r)) - std::abs(det(cd.s));
    const double after = std::abs(det(moved.r)) - std::abs(det(moved.s));
    const bool sign_ok = std::abs(before) < 1e-12 || (before > 0) == (after > 0);
    r.record(res, res <= tol && signature_ok && sign_ok);

    // A defect-free (r, s) pair, moved by a frame with real determinant, stays defect-free.
    ChernData<Float> flat;
    flat.r = random_matrix<Float>(ctx.rng, 3, 3);
    const CMatrix<Float> unimodular = random_su3(ctx.rng);
    flat.s = CMatrix<Float>(flat.r * unimodular).conjugate();
    CMatrix<Float> real_p = random_real_matrix(ctx.rng, 3, 3) + CMatrix<Float>::identity(3) * Float(1.5, 0.0);
    ChernData<Float> flat_moved;
    flat_moved.r = flat.r * inverse(real_p);
    flat_moved.s = flat.s * inverse(real_p).conjugate();
    const double flat_res = std::max(std::abs(chern_defect(flat)), std::abs(chern_defect(flat_moved)));
    r.record(flat_res, tol);
  }
  return r;
}

// ---------------------------------------------------------------------------

const std::map<std::string, std::vector<CheckDef>, std::less<>>& registry() {
  static const std::map<std::string, std::vector<CheckDef>, std::less<>> table = [] {
    std::map<std::string, std::vector<CheckDef>, std::less<>> t;
    const auto exact_struct = [](std::string_view which) {
      return [which](Context&) { return pick(verify_structure_equations<Exact>(), which); };
    };
    const auto exact_nk = [](std::string_view which) {
      return [which](Context&) { return pick(verify_nearly_kahler<Exact>(), which); };
    };
    t["algebra"] = {
        {"closure", Backend::exact, algebra_closure},
        {"jacobi", Backend::exact, algebra_jacobi},
        {"killing-signature", Backend::exact, algebra_killing},
        {"skew-hermitian", Backend::exact, algebra_skew_hermitian},
        {"exp-group", Backend::floating, algebra_exp_group},
    };
    t["structure-equations"] = {
        {"dtheta", Backend::exact, exact_struct("dtheta")},
        {"dkappa", Backend::exact, exact_struct("dkappa")},
        {"dphi", Backend::exact, exact_struct("dphi")},
        {"first-structure", Backend::floating, [](Context& c) { return first_structure(c, "first-structure"); }},
        {"maurer-cartan-fd", Backend::floating, [](Context& c) { return first_structure(c, "maurer-cartan-fd"); }},
    };
    t["nearly-kahler"] = {
        {"domega", Backend::exact, exact_nk("domega")},
        {"dpairing", Backend::exact, exact_nk("dpairing")},
        {"pullback-exact", Backend::exact, nk_pullback_exact},
        {"pullback-float", Backend::floating, nk_pullback_float},
        {"dx-norm-exact", Backend::exact, nk_dx_norm_exact},
        {"dx-norm-float", Backend::floating, nk_dx_norm_float},
        {"upsilon-type", Backend::exact, nk_upsilon_type},
        {"jcan-compatibility-exact", Backend::exact, nk_jcan_exact},
        {"jcan-compatibility-float", Backend::floating, nk_jcan_float},
    };
    t["equivariance"] = {
        {"right-translation-exact", Backend::exact, eq_right_translation_exact},
        {"right-translation-float", Backend::floating, eq_right_translation_float},
        {"witness-independence", Backend::floating, eq_witness_independence},
        {"upsilon-invariance", Backend::floating, eq_upsilon_invariance},
        {"lift-stabilizer", Backend::floating, eq_lift_stabilizer},
    };
    t["linear-algebra"] = {
        {"det-order-exact", Backend::exact, la_det_order_exact},
        {"det-order-float", Backend::floating, la_det_order_float},
        {"det-multiplicative", Backend::exact, la_det_multiplicative},
        {"signature-congruence", Backend::exact, la_signature_congruence},
        {"splitting-exact", Backend::exact, la_splitting_exact},
        {"splitting-float", Backend::floating, la_splitting_float},
    };
    t["chern"] = {
        {"index-strata", Backend::floating, chern_index_strata},
        {"solve-rs", Backend::floating, chern_solve_rs},
        {"h-omega", Backend::floating, chern_h_omega},
        {"upsilon-components", Backend::exact, chern_upsilon_components},
        {"defect-reconstruction", Backend::exact, chern_defect_reconstruction},
        {"theorem-witness", Backend::floating, chern_theorem_witness},
        {"frame-covariance", Backend::floating, chern_frame_covariance},
    };
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, checks] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite(std::string_view name) { return registry().contains(name); }

std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown suite: " + std::string(name));
  std::vector<SuiteReport> out;
  for (const CheckDef& def : it->second) {
    const std::string full = std::string(name) + "/" + def.name;
    Context ctx{options, Rng::for_task(options.seed, full)};
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    try {
      report = def.run(ctx);
    } catch (const ConsistencyError&) {
      report = CheckReport{};
      report.record(0.0, false);
    } catch (const DomainError&) {
      report = CheckReport{};
      report.record(0.0, false);
    }
    report.name = full;
    report.backend = def.backend;
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back({std::move(report), options.seed, ms});
  }
  return out;
}

}  // namespace g2s6::verify
