#include <gtest/gtest.h>

#include "g2s6/errors.hpp"
#include "g2s6/exterior.hpp"
#include "g2s6/g2.hpp"
#include "g2s6/linalg.hpp"
#include "g2s6/random.hpp"

using namespace g2s6;

namespace {

MultiForm<Exact> random_form(Rng& rng, std::size_t dim, std::size_t degree) {
  MultiForm<Exact> f(dim, degree);
  for (std::size_t r = 0; r < f.coefficient_count(); ++r) {
    f.set_coefficient(r, CMatrix<Exact>(1, 1, {random_gaussian_rational(rng, 2, 2)}));
  }
  return f;
}

// su(2): [e1, e2] = e3 and cyclic.
StructureConstants<Exact> su2() {
  return StructureConstants<Exact>(3, [](std::size_t i, std::size_t j) {
    CMatrix<Exact> c(3, 1);
    if (i == j) return c;
    const std::size_t k = 3 - i - j;
    c[k] = Exact((j == (i + 1) % 3) ? 1 : -1);
    return c;
  });
}

Exact scalar(const CMatrix<Exact>& m) { return m(0, 0); }

}  // namespace

TEST(Subsets, CountsAndRanks) {
  EXPECT_EQ(binomial(14, 3), 364u);
  EXPECT_EQ(binomial(14, 2), 91u);
  EXPECT_EQ(binomial(3, 5), 0u);
  const auto& s = subsets(6, 3);
  ASSERT_EQ(s.size(), 20u);
  for (std::size_t r = 0; r < s.size(); ++r) EXPECT_EQ(subset_rank(s[r]), r);
}

TEST(MultiForm, WedgeOfOneFormsMatchesDefinition) {
  Rng rng(1);
  const auto a = random_form(rng, 4, 1);
  const auto b = random_form(rng, 4, 1);
  const auto w = wedge(a, b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Exact expected = scalar(a.on_basis({i})) * scalar(b.on_basis({j})) - scalar(a.on_basis({j})) * scalar(b.on_basis({i}));
      EXPECT_EQ(scalar(w.on_basis({i, j})), expected);
    }
}

TEST(MultiForm, OnBasisIsAlternating) {
  Rng rng(2);
  const auto f = random_form(rng, 5, 3);
  EXPECT_EQ(f.on_basis({2, 0, 4}), CMatrix<Exact>(-f.on_basis({0, 2, 4})));
  EXPECT_EQ(f.on_basis({1, 1, 3}), CMatrix<Exact>(1, 1));
}

TEST(MultiForm, WedgeIsAssociativeAndGradedCommutative) {
  Rng rng(3);
  const auto a = random_form(rng, 6, 1);
  const auto b = random_form(rng, 6, 2);
  const auto c = random_form(rng, 6, 2);
  EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  EXPECT_EQ(wedge(a, b), wedge(b, a));
  EXPECT_EQ(wedge(a, a), MultiForm<Exact>(6, 2));
  const auto d = random_form(rng, 6, 1);
  EXPECT_EQ(wedge(a, d), MultiForm<Exact>(-wedge(d, a)));
}

TEST(MultiForm, TopWedgeOfCovectorsIsDeterminant) {
  Rng rng(4);
  const auto m = random_matrix<Exact>(rng, 3, 3);
  const auto f = MultiForm<Exact>::from_covectors(m);
  const auto top = wedge(wedge(f.component(0), f.component(1)), f.component(2));
  EXPECT_EQ(scalar(top.on_basis({0, 1, 2})), det(m));
  // evaluate on arbitrary vectors: det(m * [u v w]).
  const auto u = random_matrix<Exact>(rng, 3, 1);
  const auto v = random_matrix<Exact>(rng, 3, 1);
  const auto w = random_matrix<Exact>(rng, 3, 1);
  CMatrix<Exact> vecs(3, 3);
  vecs.set_block(0, 0, u);
  vecs.set_block(0, 1, v);
  vecs.set_block(0, 2, w);
  EXPECT_EQ(scalar(top.evaluate({u, v, w})), det(CMatrix<Exact>(m * vecs)));
}

TEST(MultiForm, MatrixValuedWedgeUsesMatrixProduct) {
  std::vector<CMatrix<Exact>> av = {CMatrix<Exact>(2, 2, {0, 1, 0, 0}), CMatrix<Exact>(2, 2)};
  std::vector<CMatrix<Exact>> bv = {CMatrix<Exact>(2, 2), CMatrix<Exact>(2, 2, {0, 0, 1, 0})};
  const auto a = MultiForm<Exact>::one_form(2, av);
  const auto b = MultiForm<Exact>::one_form(2, bv);
  // (a ^ b)(e0, e1) = a(e0) b(e1) - a(e1) b(e0) = E12 E21 = E11.
  EXPECT_EQ(wedge(a, b).on_basis({0, 1}), CMatrix<Exact>(2, 2, {1, 0, 0, 0}));
  EXPECT_EQ(wedge(b, a).on_basis({0, 1}), CMatrix<Exact>(2, 2, {0, 0, 0, -1}));
}

TEST(MultiForm, FromAntisymmetricValidates) {
  EXPECT_THROW(MultiForm<Exact>::from_antisymmetric(CMatrix<Exact>(2, 2, {0, 1, 1, 0})), DomainError);
  const auto f = MultiForm<Exact>::from_antisymmetric(CMatrix<Exact>(2, 2, {0, 3, -3, 0}));
  EXPECT_EQ(scalar(f.on_basis({1, 0})), Exact(-3));
}

TEST(LeftInvariantD, Su2ByHand) {
  const auto sc = su2();
  std::vector<CMatrix<Exact>> vals(3, CMatrix<Exact>(1, 1));
  vals[2](0, 0) = Exact(1);
  const auto e3 = MultiForm<Exact>::one_form(3, vals);
  // de^3(e1, e2) = -e^3([e1, e2]) = -1.
  const auto d = left_invariant_d(e3, sc);
  EXPECT_EQ(scalar(d.on_basis({0, 1})), Exact(-1));
  EXPECT_EQ(scalar(d.on_basis({0, 2})), Exact(0));
  EXPECT_EQ(scalar(d.on_basis({1, 2})), Exact(0));
}

TEST(LeftInvariantD, SquareVanishesAndLeibnizOnG2) {
  Rng rng(5);
  const auto& sc = g2_structure_constants<Exact>();
  const auto a = random_form(rng, kAlgebraDim, 1);
  const auto b = random_form(rng, kAlgebraDim, 1);
  const auto c = random_form(rng, kAlgebraDim, 2);
  EXPECT_EQ(left_invariant_d(left_invariant_d(a, sc), sc), MultiForm<Exact>(kAlgebraDim, 3));
  EXPECT_EQ(left_invariant_d(left_invariant_d(c, sc), sc).max_abs(), 0.0);
  // d(a ^ b) = da ^ b - a ^ db.
  EXPECT_EQ(left_invariant_d(wedge(a, b), sc),
            MultiForm<Exact>(wedge(left_invariant_d(a, sc), b) - wedge(a, left_invariant_d(b, sc))));
  // d(c ^ a) = dc ^ a + c ^ da.
  EXPECT_EQ(left_invariant_d(wedge(c, a), sc),
            MultiForm<Exact>(wedge(left_invariant_d(c, sc), a) + wedge(c, left_invariant_d(a, sc))));
}

TEST(LeftInvariantD, RejectsMismatchedStructureConstants) {
  Rng rng(6);
  EXPECT_THROW(left_invariant_d(random_form(rng, 4, 1), su2()), DomainError);
  EXPECT_THROW(left_invariant_d(random_form(rng, 3, 1), StructureConstants<Exact>()), DomainError);
}

TEST(Pullback, FunctorialAndCommutesWithWedge) {
  Rng rng(7);
  const auto a = random_form(rng, 4, 1);
  const auto b = random_form(rng, 4, 2);
  const auto l1 = random_matrix<Exact>(rng, 4, 5);
  const auto l2 = random_matrix<Exact>(rng, 5, 3);
  EXPECT_EQ(pullback(pullback(wedge(a, b), l1), l2), pullback(wedge(a, b), CMatrix<Exact>(l1 * l2)));
  EXPECT_EQ(pullback(wedge(a, b), l1), wedge(pullback(a, l1), pullback(b, l1)));
  // (L^* alpha)(e_j) = alpha(L e_j).
  const auto pa = pullback(a, l1);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(pa.on_basis({j}), a.evaluate({l1.col(j)}));
}

TEST(Splitting, TypeDecompositionSumsToForm) {
  Rng rng(8);
  CMatrix<Exact> z = random_matrix<Exact>(rng, 4, 2);
  const auto split = Splitting<Exact>::from_vectors(z);
  const auto f = random_form(rng, 4, 2);
  MultiForm<Exact> sum(4, 2);
  for (std::size_t p = 0; p <= 2; ++p) sum += type_project(f, split, p, 2 - p);
  EXPECT_EQ(sum, f);
  // Projections are idempotent.
  const auto f11 = type_project(f, split, 1, 1);
  EXPECT_EQ(type_project(f11, split, 1, 1), f11);
  EXPECT_EQ(type_project(f11, split, 2, 0), MultiForm<Exact>(4, 2));
}

TEST(Splitting, ConjugacyIsChecked) {
  Rng rng(9);
  const auto z = random_matrix<Exact>(rng, 4, 2);
  EXPECT_THROW(Splitting<Exact>::from_subspaces(z, random_matrix<Exact>(rng, 4, 2)), DomainError);
  EXPECT_NO_THROW(Splitting<Exact>::from_subspaces(z, z.conjugate()));
}

TEST(Splitting, ReconstructsRealComplexStructure) {
  Rng rng(10);
  const auto split = Splitting<Exact>::from_vectors(random_matrix<Exact>(rng, 6, 3));
  const auto j = from_splitting(split);
  EXPECT_EQ(j * j, CMatrix<Exact>(-CMatrix<Exact>::identity(6)));
  for (const auto& e : j.data()) EXPECT_TRUE(e.is_real());
  // J acts by +i on the holomorphic vectors.
  const auto z = split.holomorphic_vectors();
  EXPECT_EQ(j * z, CMatrix<Exact>(z * Exact::i()));
}

TEST(Splitting, StandardHermitianOmega) {
  CMatrix<Exact> eta(3, 6);
  for (std::size_t a = 0; a < 3; ++a) {
    eta(a, 2 * a) = Exact(1);
    eta(a, 2 * a + 1) = Exact::i();
  }
  const auto split = Splitting<Exact>::from_coframe(eta);
  const auto omega = omega_from_hermitian(CMatrix<Exact>::identity(3), split);
  // i z ^ conj z = 2 e^{2a} ^ e^{2a+1}.
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(scalar(omega.on_basis({2 * a, 2 * a + 1})), Exact(2));
  EXPECT_EQ(scalar(omega.on_basis({0, 2})), Exact(0));
  EXPECT_TRUE(omega.is_real_valued());
  EXPECT_THROW(omega_from_hermitian(CMatrix<Exact>(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0}), split), DomainError);
}
