#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "g2s6/errors.hpp"
#include "g2s6/g2.hpp"
#include "g2s6/linalg.hpp"
#include "g2s6/random.hpp"

using namespace g2s6;

namespace {

// Plain triple loop, independent of CMatrix::operator*.
CMatrix<Exact> commutator_by_hand(const CMatrix<Exact>& x, const CMatrix<Exact>& y) {
  CMatrix<Exact> c(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      Exact acc(0);
      for (std::size_t k = 0; k < 7; ++k) acc += x(i, k) * y(k, j) - y(i, k) * x(k, j);
      c(i, j) = acc;
    }
  return c;
}

CMatrix<Exact> col3(long a, long b, long c) { return CMatrix<Exact>::column({a, b, c}); }

Eigen::MatrixXcd to_eigen(const CMatrix<Float>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

TEST(G2Algebra, ValidatesSu3Part) {
  EXPECT_THROW(G2AlgebraElem<Exact>(col3(0, 0, 0), CMatrix<Exact>::identity(3)), DomainError);
  // Skew-Hermitian but not traceless.
  EXPECT_THROW(G2AlgebraElem<Exact>(col3(0, 0, 0), CMatrix<Exact>::diagonal({Exact::i(), 0, 0})), DomainError);
  EXPECT_THROW(G2AlgebraElem<Exact>(CMatrix<Exact>(2, 1), CMatrix<Exact>(3, 3)), DomainError);
}

TEST(G2Algebra, CrossMatrixIsCrossProduct) {
  const auto a = col3(1, 2, 3);
  const auto b = col3(-2, 5, 7);
  // [a] b = b x a.
  const auto bxa = col3(5 * 3 - 7 * 2, 7 * 1 - (-2) * 3, (-2) * 2 - 5 * 1);
  EXPECT_EQ(cross_matrix(a) * b, bxa);
}

TEST(G2Algebra, EmbeddingEntriesForFirstBasisVector) {
  const auto m = embed_algebra(G2AlgebraElem<Exact>::horizontal(col3(1, 0, 0)));
  const Exact i = Exact::i();
  EXPECT_EQ(m(0, 4), i);
  EXPECT_EQ(m(0, 1), Exact(0) - i);
  EXPECT_EQ(m(1, 0), Exact(-2) * i);
  EXPECT_EQ(m(4, 0), Exact(2) * i);
  // [conj a] in the (F, conj F) block, [a] in the (conj F, F) block.
  EXPECT_EQ(m(2, 6), Exact(1));
  EXPECT_EQ(m(3, 5), Exact(-1));
  EXPECT_EQ(m(5, 3), Exact(1));
  EXPECT_EQ(m(6, 2), Exact(-1));
}

TEST(G2Algebra, RealRepresentationIsSkew) {
  for (const auto& e : basis14<Exact>()) {
    const CMatrix<Exact> real = basis_change<Exact>() * embed_algebra(e) * basis_change_inverse<Exact>();
    for (const auto& z : real.data()) EXPECT_TRUE(z.is_real());
    EXPECT_EQ(real.transpose(), CMatrix<Exact>(-real));
    EXPECT_EQ(skew_hermitian_residual(embed_algebra(e)), 0.0);
  }
}

TEST(G2Algebra, BasisChangeHasExpectedGram) {
  const auto& g = split_gram<Exact>();
  EXPECT_EQ(g, CMatrix<Exact>::diagonal({1, Exact::from_ratio(1, 2), Exact::from_ratio(1, 2), Exact::from_ratio(1, 2),
                                         Exact::from_ratio(1, 2), Exact::from_ratio(1, 2), Exact::from_ratio(1, 2)}));
  EXPECT_EQ(basis_change<Exact>() * basis_change_inverse<Exact>(), CMatrix<Exact>::identity(7));
}

TEST(G2Algebra, BracketMatchesHandCommutatorOnAllPairs) {
  const auto& basis = basis14<Exact>();
  for (std::size_t i = 0; i < kAlgebraDim; ++i)
    for (std::size_t j = 0; j < kAlgebraDim; ++j) {
      const auto c = commutator_by_hand(embed_algebra(basis[i]), embed_algebra(basis[j]));
      const auto proj = project_algebra(c);
      EXPECT_EQ(proj.residual, 0.0) << i << "," << j;
      EXPECT_EQ(embed_algebra(bracket(basis[i], basis[j])), c);
    }
}

TEST(G2Algebra, ProjectionDetectsMatricesOutsideG2) {
  CMatrix<Exact> m(7, 7);
  m(1, 4) = Exact(1);  // symmetric-looking entry with no partner
  EXPECT_GT(project_algebra(m).residual, 0.0);
}

TEST(G2Algebra, CoordinatesRoundTrip) {
  Rng rng(1);
  for (int n = 0; n < 30; ++n) {
    const auto x = random_exact_algebra_element(rng);
    EXPECT_EQ(from_coordinates(coordinates(x)), x);
  }
  const auto f = random_algebra_element(rng);
  EXPECT_LT(max_abs_diff(embed_algebra(from_coordinates(coordinates(f))), embed_algebra(f)), 1e-14);
}

TEST(G2Algebra, JacobiExact) {
  Rng rng(2);
  for (int n = 0; n < 20; ++n) {
    const auto x = random_exact_algebra_element(rng);
    const auto y = random_exact_algebra_element(rng);
    const auto z = random_exact_algebra_element(rng);
    const auto sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    EXPECT_EQ(sum, G2AlgebraElem<Exact>());
  }
}

TEST(G2Algebra, AdjointActionMatchesBracket) {
  Rng rng(3);
  const auto x = random_exact_algebra_element(rng);
  const auto y = random_exact_algebra_element(rng);
  EXPECT_EQ(ad_matrix(x) * coordinates(y), coordinates(bracket(x, y)));
}

TEST(G2Algebra, KillingFormIsFourTimesTraceForm) {
  // g2 is simple, so every invariant form is a multiple of the trace form of
  // the 7-dimensional representation; the factor is 4.
  Rng rng(4);
  for (int n = 0; n < 10; ++n) {
    const auto x = random_exact_algebra_element(rng);
    const auto y = random_exact_algebra_element(rng);
    const Exact trace = (embed_algebra(x) * embed_algebra(y)).trace();
    EXPECT_EQ(killing_form(x, y), Exact(4) * trace);
  }
  const Signature sig = signature(killing_gram<Exact>());
  EXPECT_EQ(sig, (Signature{0, 14}));
}

TEST(G2Group, ExpMatchesEigenAndIsSpecialOrthogonal) {
  Rng rng(5);
  for (int n = 0; n < 10; ++n) {
    const auto el = random_algebra_element(rng, 1.5);
    const auto g = exp_group(el);
    const CMatrix<Float> real_alg = basis_change<Float>() * embed_algebra(el) * basis_change_inverse<Float>();
    const Eigen::MatrixXd a = to_eigen(real_alg).real();
    const Eigen::MatrixXd oracle = a.exp();
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) EXPECT_NEAR(g.real()(i, j).real(), oracle(i, j), 1e-11);
    EXPECT_LT(g.orthogonality_residual(), 1e-12);
    EXPECT_LT(g.ad_invariance_residual(), 1e-12);
    EXPECT_LT(max_abs_diff((g * g.inverse()).split(), CMatrix<Float>::identity(7)), 1e-12);
  }
}

TEST(G2Group, RejectsUnitaryThatIsNotSpecial) {
  // diag(1, A, conj A) with A in U(3) \ SU(3) is orthogonal but not in G2.
  const Exact i = Exact::i();
  CMatrix<Exact> m = CMatrix<Exact>::diagonal({1, i, i, i, Exact(0) - i, Exact(0) - i, Exact(0) - i});
  EXPECT_THROW(G2GroupElem<Exact>::from_split(m), DomainError);
  EXPECT_THROW(su3_embed_group(CMatrix<Exact>::diagonal({i, i, i})), DomainError);
  EXPECT_THROW(G2GroupElem<Exact>::from_split(CMatrix<Exact>::diagonal({2, 1, 1, 1, 1, 1, 1})), DomainError);
}

TEST(G2Group, StabilizerFixesBasePoint) {
  const Exact c = Exact::from_ratio(3, 5);
  const Exact s = Exact::from_ratio(4, 5);
  const auto a = CMatrix<Exact>(3, 3, {c, s * Exact::i(), 0, s * Exact::i(), c, 0, 0, 0, 1});
  const auto g = su3_embed_group(a);
  EXPECT_EQ(g.real().col(0), CMatrix<Exact>::column({1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(g.orthogonality_residual(), 0.0);
}

TEST(G2Group, MovingFrameColumns) {
  const auto f = G2GroupElem<Exact>::identity().frame();
  const Exact half = Exact::from_ratio(1, 2);
  EXPECT_EQ(f.x, CMatrix<Exact>::column({1, 0, 0, 0, 0, 0, 0}));
  // F1 = (e2 - i e3) / 2.
  EXPECT_EQ(f.f1, CMatrix<Exact>::column({0, half, Exact(0) - half * Exact::i(), 0, 0, 0, 0}));
}

TEST(MaurerCartan, RecoversAlgebraElement) {
  Rng rng(6);
  const auto g = exp_group(random_algebra_element(rng));
  const auto a = random_algebra_element(rng);
  const CMatrix<Float> tangent = g.split() * embed_algebra(a);
  EXPECT_LT(max_abs_diff(embed_algebra(maurer_cartan_raw(g, tangent)), embed_algebra(a)), 1e-12);
  EXPECT_THROW(maurer_cartan_raw(g, CMatrix<Float>::identity(7)), DomainError);
  EXPECT_EQ(maurer_cartan(g, a), a);
}

TEST(MaurerCartan, FormsTakeBasisValues) {
  const auto theta = theta_form<Exact>();
  const auto kappa = kappa_form<Exact>();
  const auto& basis = basis14<Exact>();
  for (std::size_t j = 0; j < kAlgebraDim; ++j) {
    EXPECT_EQ(theta.on_basis({j}), basis[j].a());
    EXPECT_EQ(kappa.on_basis({j}), basis[j].d());
    if (j >= kHorizontalDim) {
      EXPECT_EQ(max_abs(theta.on_basis({j})), 0.0);
    }
  }
}

TEST(RightTranslation, ExactDiagonalPhase) {
  const Exact i = Exact::i();
  const auto a = CMatrix<Exact>::diagonal({i, Exact(0) - i, 1});
  const auto rt = right_translate(a, theta_form<Exact>());
  EXPECT_EQ(rt.residual, 0.0);
  EXPECT_EQ(rt.pulled_back, rt.expected);
}

TEST(RightTranslation, FloatSu3) {
  Rng rng(7);
  for (int n = 0; n < 10; ++n) {
    EXPECT_LT(right_translate(random_su3(rng), theta_form<Float>()).residual, 1e-9);
  }
  EXPECT_THROW(right_translate(CMatrix<Float>::identity(3), kappa_form<Float>()), DomainError);
}

TEST(LiftPoint, ReachesRandomPointsAndAntipode) {
  Rng rng(8);
  for (int n = 0; n < 20; ++n) {
    const auto y = random_unit_vector(rng, 7);
    EXPECT_LT(max_abs_diff(lift_point(y).real().col(0), y), 1e-12);
  }
  const auto south = CMatrix<Float>::column({-1, 0, 0, 0, 0, 0, 0});
  EXPECT_LT(max_abs_diff(lift_point(south).real().col(0), south), 1e-12);
}

TEST(LiftPoint, RejectsBadInputAndReportsNonConvergence) {
  EXPECT_THROW(lift_point(CMatrix<Float>::column({2, 0, 0, 0, 0, 0, 0})), DomainError);
  EXPECT_THROW(lift_point(CMatrix<Float>::column({1, 0, 0})), DomainError);
  // A negative tolerance can never be met.
  Rng rng(9);
  EXPECT_THROW(lift_point(random_unit_vector(rng, 7), -1.0), NumericalError);
}
