#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <type_traits>

#include "g2s6/errors.hpp"
#include "g2s6/linalg.hpp"
#include "g2s6/matrix.hpp"
#include "g2s6/random.hpp"

using namespace g2s6;

namespace {

// Backends never mix: no conversion from double, no mixed arithmetic.
static_assert(!std::is_convertible_v<double, Exact>);
static_assert(!std::is_convertible_v<Float, Exact>);
static_assert(!std::is_convertible_v<Exact, Float>);
template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };
template <class A, class B>
concept Multipliable = requires(A a, B b) { a * b; };
static_assert(!Addable<Exact, Float>);
static_assert(!Addable<Float, Exact>);
static_assert(!Multipliable<CMatrix<Exact>, CMatrix<Float>>);
static_assert(Multipliable<CMatrix<Exact>, CMatrix<Exact>>);

// Leibniz expansion over all permutations.
template <Scalar S>
S leibniz_det(const CMatrix<S>& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  S total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    S term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Eigen::MatrixXcd to_eigen(const CMatrix<Float>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

CMatrix<Exact> exact_gram(Rng& rng, std::size_t n, long shift_num, long shift_den) {
  const auto c = random_matrix<Exact>(rng, n, n);
  return c.adjoint() * c + CMatrix<Exact>::identity(n) * Exact::from_ratio(shift_num, shift_den);
}

}  // namespace

TEST(GaussianRational, FieldAxiomsHoldExactly) {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const Exact a = random_gaussian_rational(rng);
    const Exact b = random_gaussian_rational(rng);
    const Exact c = random_gaussian_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(conj(a * b), conj(a) * conj(b));
    if (!a.is_zero()) {
      EXPECT_EQ(a * (Exact(1) / a), Exact(1));
    }
  }
}

TEST(GaussianRational, ImaginaryUnitAndFastPathsAgree) {
  const Exact i = Exact::i();
  EXPECT_EQ(i * i, Exact(-1));
  const Exact z = Exact::from_ratio(3, 4, -5, 6);
  // Real, imaginary and general operands exercise every multiplication path.
  EXPECT_EQ(z * Exact(2), Exact::from_ratio(3, 2, -5, 3));
  EXPECT_EQ(z * i, Exact::from_ratio(5, 6, 3, 4));
  EXPECT_EQ(Exact(2) * z, Exact::from_ratio(3, 2, -5, 3));
  EXPECT_EQ(z * conj(z), Exact(z.real() * z.real() + z.imag() * z.imag(), mpq_class(0)));
  EXPECT_EQ(z * Exact(0), Exact(0));
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(Exact(1) / Exact(0), DomainError);
  EXPECT_THROW(Exact::from_ratio(1, 0), DomainError);
}

TEST(CMatrix, AdjointIsInvolution) {
  Rng rng(3);
  const auto m = random_matrix<Exact>(rng, 3, 4);
  EXPECT_EQ(m.adjoint().adjoint(), m);
  EXPECT_EQ(m.adjoint().rows(), 4u);
}

TEST(CMatrix, ShapeMismatchThrows) {
  CMatrix<Exact> a(2, 3);
  CMatrix<Exact> b(2, 3);
  EXPECT_THROW(a * b, DomainError);
  EXPECT_THROW(a + CMatrix<Exact>(3, 2), DomainError);
  EXPECT_THROW(a.trace(), DomainError);
  EXPECT_THROW(CMatrix<Exact>(2, 2, {1, 2, 3}), DomainError);
}

TEST(Det, TrivialValues) {
  EXPECT_EQ(det(CMatrix<Exact>::identity(3)), Exact(1));
  EXPECT_EQ(det(CMatrix<Exact>::diagonal({2, 3})), Exact(6));
  EXPECT_THROW(det(CMatrix<Exact>(2, 3)), DomainError);
}

TEST(Det, ExactMatchesLeibnizExpansion) {
  Rng rng(5);
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    for (int k = 0; k < 20; ++k) {
      const auto m = random_matrix<Exact>(rng, n, n);
      EXPECT_EQ(det(m), leibniz_det(m));
    }
  }
}

TEST(Det, ExactMultiplicative) {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto m = random_matrix<Exact>(rng, 3, 3);
    const auto n = random_matrix<Exact>(rng, 3, 3);
    EXPECT_EQ(det(CMatrix<Exact>(m * n)), det(m) * det(n));
  }
}

TEST(Det, FloatMatchesEigen) {
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const auto m = random_matrix<Float>(rng, 5, 5);
    const Float oracle = to_eigen(m).determinant();
    EXPECT_LT(std::abs(det(m) - oracle), 1e-10 * std::max(1.0, std::abs(oracle)));
  }
}

TEST(Inverse, ExactAndFloat) {
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    auto m = random_matrix<Exact>(rng, 4, 4);
    if (det(m).is_zero()) continue;
    EXPECT_EQ(m * inverse(m), CMatrix<Exact>::identity(4));
  }
  const auto f = random_matrix<Float>(rng, 6, 6);
  const Eigen::MatrixXcd oracle = to_eigen(f).inverse();
  const auto inv = inverse(f);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_LT(std::abs(inv(i, j) - oracle(i, j)), 1e-10);
  EXPECT_THROW(inverse(CMatrix<Exact>(3, 3)), DomainError);
}

TEST(Solve, ResidualVanishes) {
  Rng rng(17);
  const auto a = random_matrix<Exact>(rng, 4, 4);
  const auto b = random_matrix<Exact>(rng, 4, 2);
  if (!det(a).is_zero()) {
    EXPECT_EQ(a * solve(a, b), b);
  }
}

TEST(PositiveDefinite, TrivialCases) {
  EXPECT_TRUE(is_positive_definite(CMatrix<Exact>::identity(3)));
  EXPECT_FALSE(is_positive_definite(CMatrix<Exact>::diagonal({1, -1})));
  EXPECT_FALSE(is_positive_definite(CMatrix<Exact>::diagonal({1, 0})));
  EXPECT_THROW(is_positive_definite(CMatrix<Exact>(2, 2, {1, 1, 0, 1})), DomainError);
}

TEST(PositiveDefinite, GramPlusIdentityOnRandomVectors) {
  Rng rng(19);
  for (int k = 0; k < 20; ++k) {
    const auto m = exact_gram(rng, 3, 1, 1);
    EXPECT_TRUE(is_positive_definite(m));
    // <Mx, x> = |Cx|^2 + |x|^2 > 0 on random x.
    for (int n = 0; n < 5; ++n) {
      const auto x = random_matrix<Exact>(rng, 3, 1);
      if (max_abs(x) == 0.0) continue;
      const Exact q = hermitian_dot(CMatrix<Exact>(m * x), x);
      EXPECT_TRUE(q.is_real());
      EXPECT_GT(sgn(q.real()), 0);
    }
  }
}

TEST(HermitianOrder, Examples) {
  const auto i2 = CMatrix<Exact>::identity(2);
  EXPECT_TRUE(hermitian_order_gt(CMatrix<Exact>(i2 * Exact(2)), i2));
  EXPECT_FALSE(hermitian_order_gt(i2, CMatrix<Exact>(i2 * Exact(2))));
  EXPECT_FALSE(hermitian_order_gt(i2, i2));
  EXPECT_THROW(hermitian_order_gt(i2, CMatrix<Exact>::identity(3)), DomainError);
}

TEST(DetOrder, StrictOnConstructedPairs) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const auto b = exact_gram(rng, 3, 1, 5);
    const auto a = b + exact_gram(rng, 3, 1, 9);
    EXPECT_TRUE(det_order_check(a, b));
    // Determinants are real positive and strictly ordered.
    EXPECT_GT(det(a).real(), det(b).real());
    EXPECT_GT(sgn(det(b).real()), 0);
  }
}

TEST(DetOrder, PremisesAreChecked) {
  const auto i2 = CMatrix<Exact>::identity(2);
  EXPECT_THROW(det_order_check(i2, CMatrix<Exact>(i2 * Exact(2))), DomainError);
  EXPECT_THROW(det_order_check(CMatrix<Exact>(i2 * Exact(2)), CMatrix<Exact>::diagonal({1, -1})), DomainError);
}

TEST(DetRatioSpectrum, BoundsTheDeterminantRatio) {
  Rng rng(29);
  for (int k = 0; k < 50; ++k) {
    const auto cb = random_matrix<Float>(rng, 3, 2);
    const CMatrix<Float> b = cb * cb.adjoint();  // rank 2: B >= 0, singular
    const auto ca = random_matrix<Float>(rng, 3, 3);
    const CMatrix<Float> a = b + ca.adjoint() * ca + CMatrix<Float>::identity(3) * Float(0.1, 0.0);
    const double lambda = det_ratio_spectrum_max(a, b);
    EXPECT_GE(lambda, -1e-12);
    EXPECT_LT(lambda, 1.0);
    EXPECT_LE(std::real(det(b)) / std::real(det(a)), std::pow(lambda, 3) + 1e-12);
  }
}

TEST(Signature, ExactMatchesFloatEigenvalues) {
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    const auto c = random_matrix<Exact>(rng, 4, 4);
    const CMatrix<Exact> h = c + c.adjoint();
    if (det(h).is_zero()) continue;
    const Signature exact = signature(h);
    std::size_t pos = 0;
    for (double l : hermitian_eigenvalues(to_float(h))) pos += l > 0;
    EXPECT_EQ(exact.positive, pos);
    EXPECT_EQ(exact.positive + exact.negative, 4u);
    EXPECT_EQ(signature(to_float(h)), exact);
  }
  EXPECT_THROW(signature(CMatrix<Float>::diagonal({Float(1, 0), Float(0, 0)})), DomainError);
}

TEST(Signature, HandlesZeroDiagonal) {
  // [[0, 1], [1, 0]] has a zero pivot; congruence must still find (1, 1).
  EXPECT_EQ(signature(CMatrix<Exact>(2, 2, {0, 1, 1, 0})), (Signature{1, 1}));
  const Exact i = Exact::i();
  EXPECT_EQ(signature(CMatrix<Exact>(2, 2, {0, i, -i, 0})), (Signature{1, 1}));
}

TEST(MatrixExp, MatchesEigenOracle) {
  Rng rng(37);
  for (double scale : {0.1, 1.0, 5.0}) {
    const auto m = random_matrix<Float>(rng, 4, 4) * Float(scale, 0.0);
    const auto e = matrix_exp(m);
    // Oracle: eigen-decomposition exp(V D V^{-1}) = V exp(D) V^{-1}.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(m));
    const Eigen::MatrixXcd v = es.eigenvectors();
    const Eigen::MatrixXcd oracle = v * es.eigenvalues().array().exp().matrix().asDiagonal() * v.inverse();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        EXPECT_LT(std::abs(e(i, j) - oracle(i, j)), 1e-8 * std::max(1.0, std::abs(oracle(i, j))));
  }
}

TEST(Rng, ReproducibleAndIndependentStreams) {
  // The standard fixes the 10000th output of mt19937_64 with the default seed.
  Rng fixed(5489u);
  std::uint64_t v = 0;
  for (int k = 0; k < 10000; ++k) v = fixed.next();
  EXPECT_EQ(v, 9981545732273789042ull);

  Rng a = Rng::for_task(42, "algebra/jacobi");
  Rng b = Rng::for_task(42, "algebra/jacobi");
  Rng c = Rng::for_task(42, "algebra/closure");
  for (int k = 0; k < 100; ++k) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(a.next(), c.next());
  for (int k = 0; k < 100; ++k) {
    const long n = a.integer(-3, 3);
    EXPECT_GE(n, -3);
    EXPECT_LE(n, 3);
  }
}

TEST(Rng, NormalHasUnitVariance) {
  Rng rng(41);
  double sum = 0.0;
  double sq = 0.0;
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.05);
  EXPECT_NEAR(sq / n, 1.0, 0.05);
}
