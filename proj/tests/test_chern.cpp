#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "g2s6/chern.hpp"
#include "g2s6/errors.hpp"

using namespace g2s6;

namespace {

SpherePoint<Exact> base_point() { return x_map(G2GroupElem<Exact>::identity()); }

template <Scalar S>
S leibniz_det3(const CMatrix<S>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

ChernData<Exact> chern_data(CMatrix<Exact> r, CMatrix<Exact> s) {
  ChernData<Exact> cd{std::move(r), std::move(s), CMatrix<Exact>(3, 3), Exact(1), 0.0};
  cd.h = h_matrix(cd);
  return cd;
}

ChernData<Exact> exact_pipeline(std::size_t q) {
  const auto j = make_compatible(base_point(), stratum_representative<Exact>(q));
  return solve_rs(default_frame(j));
}

const Signature kStrata[] = {{6, 0}, {4, 2}, {2, 4}, {0, 6}};

}  // namespace

TEST(OmegaIndex, StratumRepresentatives) {
  for (std::size_t q = 0; q <= 3; ++q) {
    const auto j = stratum_representative<Exact>(q);
    EXPECT_EQ(compatibility_residual(j), 0.0);
    EXPECT_EQ(omega_index(j), kStrata[q]);
  }
  EXPECT_EQ(stratum_representative<Exact>(0), jcan_frame<Exact>());
  EXPECT_EQ(omega_index(CMatrix<Exact>(-jcan_frame<Exact>())), (Signature{0, 6}));
  EXPECT_THROW(stratum_representative<Exact>(4), DomainError);
}

TEST(OmegaIndex, RejectsIncompatibleStructure) {
  // Every 2 x 2 complex structure preserves area, so shear one line into another.
  CMatrix<Exact> shear = CMatrix<Exact>::identity(6);
  shear(2, 0) = Exact(1);
  const CMatrix<Exact> j = shear * jcan_frame<Exact>() * inverse(shear);
  EXPECT_EQ(j * j, CMatrix<Exact>(-CMatrix<Exact>::identity(6)));
  EXPECT_GT(compatibility_residual(j), 0.0);
  EXPECT_THROW(omega_index(j), DomainError);
  EXPECT_THROW(make_compatible(base_point(), j), DomainError);
  EXPECT_THROW(make_compatible(base_point(), CMatrix<Exact>::identity(6)), DomainError);
}

TEST(Sampling, ZeroScaleGivesRepresentative) {
  Rng rng(1);
  const auto p = sphere_point(CMatrix<Float>::column({1, 0, 0, 0, 0, 0, 0}));
  const auto j = sample_compatible_J(p, {6, 0}, rng, 0.0);
  EXPECT_LT(max_abs_diff(j.j, jcan_frame<Float>()), 1e-15);
}

TEST(Sampling, HitsRequestedStratum) {
  Rng rng(2);
  const auto p = sphere_point(random_unit_vector(rng, 7));
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    for (const auto& idx : kStrata) {
      const auto j = sample_compatible_J(p, idx, seed);
      EXPECT_EQ(j.index, idx);
      EXPECT_EQ(omega_index(j.j), idx);
      EXPECT_LT(compatibility_residual(j.j), 1e-9);
    }
  EXPECT_THROW(sample_compatible_J(p, {3, 3}, rng), DomainError);
}

TEST(Sampling, SeedIsReproducible) {
  const auto p = sphere_point(CMatrix<Float>::column({0, 0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(sample_compatible_J(p, {4, 2}, 11).j, sample_compatible_J(p, {4, 2}, 11).j);
}

TEST(DefaultFrame, CanonicalAndConjugate) {
  const auto jc = make_compatible(base_point(), jcan_frame<Exact>());
  EXPECT_EQ(default_frame(jc).u, theta_coframe<Exact>());
  const auto jm = make_compatible(base_point(), CMatrix<Exact>(-jcan_frame<Exact>()));
  EXPECT_EQ(default_frame(jm).u, theta_coframe<Exact>().conjugate());
  EXPECT_THROW(make_frame(jc, theta_coframe<Exact>().conjugate()), DomainError);
}

TEST(SolveRs, CanonicalAndAntiCanonical) {
  const auto c = exact_pipeline(0);
  EXPECT_EQ(c.r, CMatrix<Exact>::identity(3));
  EXPECT_EQ(c.s, CMatrix<Exact>(3, 3));
  EXPECT_EQ(c.h, CMatrix<Exact>::identity(3));
  EXPECT_EQ(c.residual, 0.0);
  const auto a = exact_pipeline(3);
  EXPECT_EQ(a.r, CMatrix<Exact>(3, 3));
  EXPECT_EQ(a.s, CMatrix<Exact>::identity(3));
  EXPECT_EQ(a.h, CMatrix<Exact>(-CMatrix<Exact>::identity(3)));
}

TEST(SolveRs, MixedStratumSplitsLines) {
  const auto cd = exact_pipeline(1);
  EXPECT_EQ(cd.h, CMatrix<Exact>::diagonal({1, 1, -1}));
  EXPECT_EQ(signature(cd.h), (Signature{2, 1}));
  const auto jm = make_compatible(base_point(), stratum_representative<Exact>(1));
  EXPECT_EQ(omega_reconstruction_residual(cd, default_frame(jm)), 0.0);
}

TEST(SolveRs, FloatRandomStrataHaveMatchingHSignature) {
  Rng rng(3);
  for (int n = 0; n < 20; ++n) {
    const auto p = sphere_point(random_unit_vector(rng, 7));
    const Signature idx = kStrata[n % 4];
    const auto j = sample_compatible_J(p, idx, rng);
    const auto frame = default_frame(j);
    const auto cd = solve_rs(frame);
    EXPECT_LT(cd.residual, 1e-9);
    EXPECT_LT(omega_reconstruction_residual(cd, frame), 1e-9);
    // g_J has signature (2a, 2b) exactly when H has (a, b).
    EXPECT_EQ(signature(cd.h), (Signature{idx.positive / 2, idx.negative / 2}));
  }
}

TEST(UpsilonComponents, CanonicalAndScaled) {
  const auto c = upsilon_components(exact_pipeline(0));
  EXPECT_EQ(c.c30, Exact(8));
  EXPECT_EQ(c.c03, Exact(0));
  const auto d = upsilon_components(chern_data(CMatrix<Exact>::diagonal({2, 1, 1}), CMatrix<Exact>(3, 3)));
  EXPECT_EQ(d.c30, Exact(16));
  const auto a = upsilon_components(exact_pipeline(3));
  EXPECT_EQ(a.c30, Exact(0));
  EXPECT_EQ(a.c03, Exact(8));
}

TEST(UpsilonComponents, MatchesLeibnizOnRandomExactData) {
  Rng rng(4);
  for (int n = 0; n < 10; ++n) {
    const auto cd = chern_data(random_matrix<Exact>(rng, 3, 3), random_matrix<Exact>(rng, 3, 3));
    const auto c = upsilon_components(cd);
    EXPECT_EQ(c.c30, Exact(8) * leibniz_det3(cd.r));
    EXPECT_EQ(c.c03, Exact(8) * leibniz_det3(cd.s));
  }
}

TEST(Defect, Examples) {
  EXPECT_EQ(chern_defect(exact_pipeline(0)), Exact(-1));
  EXPECT_EQ(chern_defect(exact_pipeline(3)), Exact(1));
  const auto balanced = chern_data(CMatrix<Exact>::identity(3), CMatrix<Exact>::identity(3));
  EXPECT_EQ(chern_defect(balanced), Exact(0));
  EXPECT_EQ(reconstruct_defect(balanced), Exact(0));
}

TEST(Defect, ReconstructionAndNearlyKahlerCoefficient) {
  Rng rng(5);
  const Exact twelve_i = Exact(12) * Exact::i();
  for (int n = 0; n < 10; ++n) {
    const auto cd = chern_data(random_matrix<Exact>(rng, 3, 3), random_matrix<Exact>(rng, 3, 3));
    const Exact expected = leibniz_det3(cd.s.conjugate()) - leibniz_det3(cd.r);
    EXPECT_EQ(chern_defect(cd), expected);
    EXPECT_EQ(reconstruct_defect(cd), expected);
    EXPECT_EQ(domega_30_coefficient(cd), Exact(0) - twelve_i * expected);
  }
  EXPECT_EQ(domega_30_coefficient(exact_pipeline(0)), twelve_i);
}

TEST(TheoremWitness, CanonicalStructure) {
  const auto p = sphere_point(CMatrix<Float>::column({1, 0, 0, 0, 0, 0, 0}));
  const auto j = make_compatible(p, jcan_frame<Float>());
  const auto w = theorem_witness(solve_rs(default_frame(j)));
  EXPECT_TRUE(w.ok);
  EXPECT_TRUE(w.positive);
  EXPECT_NEAR(w.det_r, 1.0, 1e-14);
  EXPECT_NEAR(w.det_s, 0.0, 1e-14);
  EXPECT_NEAR(w.margin, 1.0, 1e-14);
  EXPECT_NEAR(w.defect, 1.0, 1e-14);
  EXPECT_NEAR(w.spectral_max, 0.0, 1e-14);
}

TEST(TheoremWitness, DefiniteStrataNeverVanish) {
  Rng rng(6);
  for (int n = 0; n < 50; ++n) {
    const auto p = sphere_point(random_unit_vector(rng, 7));
    const bool positive = n % 2 == 0;
    const auto j = sample_compatible_J(p, positive ? Signature{6, 0} : Signature{0, 6}, rng);
    const auto w = theorem_witness(solve_rs(default_frame(j)));
    EXPECT_TRUE(w.ok);
    EXPECT_EQ(w.positive, positive);
    EXPECT_GT(w.margin, 0.0);
    EXPECT_LT(w.spectral_max, 1.0);
    EXPECT_GT(w.defect, 0.0);
    EXPECT_LT(w.consistency, 1e-9);
  }
}

TEST(TheoremWitness, IndefiniteHThrows) {
  Rng rng(7);
  const auto p = sphere_point(random_unit_vector(rng, 7));
  const auto j = sample_compatible_J(p, {4, 2}, rng);
  EXPECT_THROW(theorem_witness(solve_rs(default_frame(j))), DomainError);
}

TEST(FrameChange, DefectScalesByInverseDeterminant) {
  const auto jm = make_compatible(base_point(), stratum_representative<Exact>(1));
  const auto frame = default_frame(jm);
  const auto cd = solve_rs(frame);
  Rng rng(8);
  for (int n = 0; n < 5; ++n) {
    const auto pm = random_matrix<Exact>(rng, 3, 3);
    if (det(pm) == Exact(0)) continue;
    const auto changed = solve_rs(change_frame(frame, pm));
    EXPECT_EQ(changed.r, cd.r * inverse(pm));
    EXPECT_EQ(changed.s, cd.s * inverse(pm.conjugate()));
    EXPECT_EQ(chern_defect(changed), chern_defect(cd) / det(pm));
    EXPECT_EQ(signature(changed.h), signature(cd.h));
  }
  EXPECT_THROW(change_frame(frame, CMatrix<Exact>(3, 3)), DomainError);
}
