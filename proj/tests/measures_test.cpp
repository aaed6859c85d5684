#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nuent/measures.hpp"
#include "oracles.hpp"

namespace nuent {
namespace {

const double kSqrt5 = std::sqrt(5.0);

TripartiteState real_state(double pe, double pmu, double ptau) {
  return TripartiteState({std::sqrt(pe), std::sqrt(pmu), std::sqrt(ptau)});
}

TripartiteState w_state() {
  const double a = 1.0 / std::sqrt(3.0);
  return TripartiteState({a, a, a});
}

const TripartiteState kE{{1.0, 0.0, 0.0}};
const TripartiteState kMu{{0.0, 1.0, 0.0}};
const TripartiteState kTau{{0.0, 0.0, 1.0}};

ComplexMatrix pair_reduction(const TripartiteState& s, QubitSet keep) {
  return reduce(density(s), keep);
}

// --- one_to_other_concurrences ---------------------------------------------

TEST(OneToOtherConcurrences, WState) {
  const auto t = one_to_other_concurrences(w_state());
  EXPECT_NEAR(t.edge_a, 8.0 / 9.0, 4e-15);
  EXPECT_NEAR(t.edge_b, 8.0 / 9.0, 4e-15);
  EXPECT_NEAR(t.edge_c, 8.0 / 9.0, 4e-15);
  EXPECT_NEAR(t.half_perimeter, 4.0 / 3.0, 4e-15);
}

TEST(OneToOtherConcurrences, ProductState) {
  const auto t = one_to_other_concurrences(kE);
  EXPECT_EQ(t.edge_a, 0.0);
  EXPECT_EQ(t.edge_b, 0.0);
  EXPECT_EQ(t.edge_c, 0.0);
}

TEST(OneToOtherConcurrences, MuonLikeTriple) {
  const auto t = one_to_other_concurrences(real_state(0.024, 0.488, 0.488));
  EXPECT_NEAR(t.edge_a, 4 * 0.024 * 0.976, 1e-14);
  EXPECT_NEAR(t.edge_b, 4 * 0.488 * 0.512, 1e-14);
  EXPECT_NEAR(t.edge_c, 4 * 0.488 * 0.512, 1e-14);
  EXPECT_NEAR(t.edge_a, 0.0937, 5e-5);
  EXPECT_NEAR(t.edge_b, 0.9994, 5e-5);
}

// --- ggm -----------------------------------------------------------------------

TEST(Ggm, ReferenceStates) {
  EXPECT_NEAR(ggm(w_state()), 1.0 / 3.0, 1e-14);
  EXPECT_EQ(ggm(kE), 0.0);
  EXPECT_NEAR(ggm(real_state(0.77, 0.115, 0.115)), 0.115, 1e-14);
}

// Largest Schmidt weight of each X|rest split found by a direct overlap
// search over single-qubit states, independent of any eigensolve.
TEST(GgmProperty, MatchesFidelitySearch) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const TripartiteState s(oracle::random_w_amplitudes(rng));
    const auto psi = s.vector();
    double best = 0.0;
    for (int q = 0; q < 3; ++q) best = std::max(best, oracle::max_product_overlap(psi, q));
    ASSERT_NEAR(ggm(s), 1.0 - best, 1e-9);
  }
}

// --- negativity ---------------------------------------------------------------

TEST(Negativity, ProductStateIsZero) {
  const ComplexMatrix rho = pair_reduction(kE, {Qubit::A, Qubit::B});
  EXPECT_EQ(negativity(rho, PairQubit::first), 0.0);
}

TEST(Negativity, WStatePair) {
  const ComplexMatrix rho = pair_reduction(w_state(), {Qubit::A, Qubit::B});
  EXPECT_NEAR(negativity(rho, PairQubit::first), (kSqrt5 - 1.0) / 3.0, 1e-14);
  EXPECT_NEAR(negativity(rho, PairQubit::second), (kSqrt5 - 1.0) / 3.0, 1e-14);
  EXPECT_NEAR((kSqrt5 - 1.0) / 3.0, 0.41202, 1e-5);
}

TEST(Negativity, XShapedBlockClosedForm) {
  const double pe = 0.77, pmu = 0.115, ptau = 0.115;
  const ComplexMatrix rho = pair_reduction(real_state(pe, pmu, ptau), {Qubit::A, Qubit::B});
  const double expected = std::sqrt(ptau * ptau + 4 * pe * pmu) - ptau;
  EXPECT_NEAR(negativity(rho, PairQubit::first), expected, 1e-14);
  EXPECT_NEAR(expected, 0.49116, 1e-5);
}

TEST(Negativity, RejectsNonPositiveInput) {
  const ComplexMatrix bad = ComplexMatrix::diagonal({1.2, -0.2, 0.0, 0.0});
  EXPECT_THROW(negativity(bad, PairQubit::first), std::invalid_argument);
}

// --- three_pi -------------------------------------------------------------------

TEST(ThreePi, ReferenceStates) {
  EXPECT_NEAR(three_pi(w_state()), 4.0 * (kSqrt5 - 1.0) / 9.0, 1e-14);
  EXPECT_NEAR(4.0 * (kSqrt5 - 1.0) / 9.0, 0.549363545555462, 1e-14);
  EXPECT_EQ(three_pi(kE), 0.0);
  // Frozen from a numpy eigvalsh route over the same reductions.
  EXPECT_NEAR(three_pi(real_state(0.024, 0.488, 0.488)), 0.0901349155770062, 1e-12);
}

TEST(ThreePi, ComplexPhasesDoNotMatter) {
  const TripartiteState s({std::polar(std::sqrt(0.024), 0.3), std::polar(std::sqrt(0.488), 1.1),
                           std::polar(std::sqrt(0.488), -2.0)});
  EXPECT_NEAR(three_pi(s), 0.0901349155770062, 1e-12);
}

// --- gmc -------------------------------------------------------------------------

TEST(Gmc, ReferenceStates) {
  EXPECT_NEAR(gmc(w_state()), 8.0 / 9.0, 1e-14);
  EXPECT_EQ(gmc(kMu), 0.0);
  EXPECT_NEAR(gmc(real_state(0.024, 0.488, 0.488)), 0.093696, 1e-14);
}

// --- concurrence_fill -------------------------------------------------------------

TEST(ConcurrenceFill, ReferenceStates) {
  EXPECT_NEAR(concurrence_fill(w_state()), 8.0 / 9.0, 1e-14);
  EXPECT_EQ(concurrence_fill(kTau), 0.0);
  EXPECT_NEAR(concurrence_fill(real_state(0.024, 0.488, 0.488)), 0.328648208395435, 1e-12);
}

TEST(ConcurrenceFill, CollinearTriangleIsZero) {
  EXPECT_EQ(concurrence_fill(ConcurrenceTriangle::from_edges(0.2, 0.3, 0.5)), 0.0);
  EXPECT_EQ(concurrence_fill(ConcurrenceTriangle::from_edges(0.1, 0.1, 0.5)), 0.0);
}

TEST(ConcurrenceFillProperty, MatchesCoordinateGeometryArea) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const TripartiteState s(oracle::random_w_amplitudes(rng));
    const auto t = one_to_other_concurrences(s);
    const double area = oracle::coordinate_area(t.edge_a, t.edge_b, t.edge_c);
    const double fill = concurrence_fill(s);
    // Compare squared areas: the fourth root amplifies rounding near collinearity.
    ASSERT_NEAR(3.0 / 16.0 * std::pow(fill, 4), area * area, 1e-12);
  }
}

TEST(ConcurrenceTriangleProperty, TriangleInequalityAndRange) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = one_to_other_concurrences(TripartiteState(oracle::random_w_amplitudes(rng)));
    ASSERT_LE(t.inequality_excess(), 1e-10);
    ASSERT_EQ(t.half_perimeter, (t.edge_a + t.edge_b + t.edge_c) / 2);
    for (double e : {t.edge_a, t.edge_b, t.edge_c}) {
      ASSERT_GE(e, 0.0);
      ASSERT_LE(e, 1.0);
    }
  }
}

// Fill can fall marginally below GMC; the value is surfaced, not asserted away.
TEST(ConcurrenceFill, CanFallBelowShortestEdge) {
  const ProbabilityTriple p{0.77, 0.115, 0.115};
  EXPECT_NEAR(closed_form::fill(p), 0.405160255065638, 1e-12);
  EXPECT_NEAR(closed_form::gmc(p), 0.4071, 1e-14);
  EXPECT_LT(closed_form::fill(p), closed_form::gmc(p));
}

// --- report --------------------------------------------------------------------------

TEST(Report, ZeroPointIsExactlyZero) {
  for (EvalPath path : {EvalPath::closed_form, EvalPath::generic}) {
    for (Flavor f : {Flavor::electron, Flavor::muon}) {
      const auto r = report({}, f, 0.0, path);
      EXPECT_EQ(r.ggm, 0.0);
      EXPECT_EQ(r.three_pi, 0.0);
      EXPECT_EQ(r.gmc, 0.0);
      EXPECT_EQ(r.fill, 0.0);
    }
  }
}

TEST(Report, ElectronNearEqualProbabilities) {
  const auto r = report({}, Flavor::electron, 10830.0, EvalPath::closed_form);
  EXPECT_NEAR(r.fill, 0.89, 0.01);
  EXPECT_EQ(r.path, EvalPath::closed_form);
}

// Values at the muon first-concave-interval minimum, frozen from the numpy
// oracle. They are one tenth of (0.13, 0.18, 0.51, 0.63); see README.
TEST(Report, MuonFirstConcaveMinimum) {
  const auto r = report({}, Flavor::muon, 513.4, EvalPath::generic);
  EXPECT_EQ(r.path, EvalPath::generic);
  EXPECT_NEAR(r.ggm, 0.0128365826408267, 1e-10);
  EXPECT_NEAR(r.three_pi, 0.0175696754424227, 1e-10);
  EXPECT_NEAR(r.gmc, 0.0506872191477276, 1e-10);
  EXPECT_NEAR(r.fill, 0.0633439634627115, 1e-10);
}

TEST(Report, FrozenTriangleReferencePoints) {
  struct Case {
    Flavor f;
    double le;
    std::array<double, 4> m;  // ggm, three_pi, gmc, fill
  };
  const std::array<Case, 3> cases{{
      {Flavor::muon, 262.2, {0.0239477851519193, 0.0899509926372741, 0.0934971549529472, 0.328300460388766}},
      {Flavor::muon, 479.9, {0.0225240581821176, 0.0271769690802062, 0.0880668999405044, 0.0880817191322864}},
      {Flavor::electron, 8100.0, {0.201151507356913, 0.379146670159321, 0.64275831377982, 0.690640945787088}},
  }};
  for (const Case& c : cases) {
    for (EvalPath path : {EvalPath::closed_form, EvalPath::generic}) {
      const auto r = report({}, c.f, c.le, path);
      EXPECT_NEAR(r.ggm, c.m[0], 1e-10);
      EXPECT_NEAR(r.three_pi, c.m[1], 1e-10);
      EXPECT_NEAR(r.gmc, c.m[2], 1e-10);
      EXPECT_NEAR(r.fill, c.m[3], 1e-10);
    }
  }
}

// --- properties -------------------------------------------------------------------------

void expect_reports_agree(const MeasureReport& a, const MeasureReport& b, double tol) {
  ASSERT_NEAR(a.probabilities.p_e, b.probabilities.p_e, tol);
  ASSERT_NEAR(a.probabilities.p_mu, b.probabilities.p_mu, tol);
  ASSERT_NEAR(a.probabilities.p_tau, b.probabilities.p_tau, tol);
  ASSERT_NEAR(a.ggm, b.ggm, tol);
  ASSERT_NEAR(a.three_pi, b.three_pi, tol);
  ASSERT_NEAR(a.gmc, b.gmc, tol);
  ASSERT_NEAR(a.fill, b.fill, tol);
  ASSERT_NEAR(a.triangle.edge_a, b.triangle.edge_a, tol);
  ASSERT_NEAR(a.triangle.edge_b, b.triangle.edge_b, tol);
  ASSERT_NEAR(a.triangle.edge_c, b.triangle.edge_c, tol);
  ASSERT_NEAR(a.triangle.half_perimeter, b.triangle.half_perimeter, tol);
}

TEST(MeasuresProperty, PathEquivalenceOnRandomWClassStates) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const TripartiteState s(oracle::random_w_amplitudes(rng));
    expect_reports_agree(measures_generic(s), measures_closed_form(s.occupations()), 1e-10);
  }
}

TEST(MeasuresProperty, PathEquivalenceAlongSweeps) {
  const MixingMatrix u = build_pmns({});
  for (Flavor f : {Flavor::electron, Flavor::muon}) {
    for (int i = 0; i < 500; ++i) {
      const double le = f == Flavor::electron ? 80.0 * i : 10.0 * std::pow(160.0, i / 499.0);
      expect_reports_agree(report(u, {}, f, le, EvalPath::closed_form),
                           report(u, {}, f, le, EvalPath::generic), 1e-10);
    }
  }
}

TEST(MeasuresProperty, Monogamy) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto pi = residual_entanglement(TripartiteState(oracle::random_w_amplitudes(rng)));
    ASSERT_GE(pi.pi_a, -1e-10);
    ASSERT_GE(pi.pi_b, -1e-10);
    ASSERT_GE(pi.pi_c, -1e-10);
  }
}

TEST(MeasuresProperty, PermutationInvariance) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = oracle::random_w_amplitudes(rng);
    std::array<int, 3> perm{0, 1, 2};
    const MeasureReport base = measures_generic(TripartiteState(a));
    do {
      const TripartiteState s({a[perm[0]], a[perm[1]], a[perm[2]]});
      for (const MeasureReport& r : {measures_generic(s), measures_closed_form(s.occupations())}) {
        ASSERT_NEAR(r.ggm, base.ggm, 1e-12);
        ASSERT_NEAR(r.three_pi, base.three_pi, 1e-12);
        ASSERT_NEAR(r.gmc, base.gmc, 1e-12);
        ASSERT_NEAR(r.fill, base.fill, 1e-12);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(MeasuresProperty, ZeroLaw) {
  for (const TripartiteState& s : {kE, kMu, kTau}) {
    for (const MeasureReport& r : {measures_generic(s), measures_closed_form(s.occupations())}) {
      EXPECT_EQ(r.ggm, 0.0);
      EXPECT_EQ(r.three_pi, 0.0);
      EXPECT_EQ(r.gmc, 0.0);
      EXPECT_EQ(r.fill, 0.0);
    }
  }
  // Residual noise below the closed-form zero threshold.
  const auto r = measures_closed_form({1.0 - 2e-16, 1e-16, 1e-16});
  EXPECT_EQ(r.ggm, 0.0);
  EXPECT_EQ(r.three_pi, 0.0);
  EXPECT_EQ(r.gmc, 0.0);
  EXPECT_EQ(r.fill, 0.0);
}

TEST(MeasuresProperty, EquilateralLaw) {
  const ProbabilityTriple third{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const auto c = measures_closed_form(third);
  const auto g = measures_generic(w_state());
  for (const MeasureReport& r : {c, g}) {
    EXPECT_NEAR(r.fill, 8.0 / 9.0, 1e-12);
    EXPECT_NEAR(r.gmc, 8.0 / 9.0, 1e-12);
    EXPECT_NEAR(r.ggm, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(r.three_pi, 4.0 * (kSqrt5 - 1.0) / 9.0, 1e-12);
  }
}

TEST(MeasuresProperty, ElectronSweepStaysBelowWCeiling) {
  const MixingMatrix u = build_pmns({});
  for (int i = 0; i <= 8000; ++i) {
    const auto r = report(u, {}, Flavor::electron, 5.0 * i, EvalPath::closed_form);
    ASSERT_LE(r.ggm, 1.0 / 3.0 + 1e-10);
    ASSERT_LE(r.fill, 8.0 / 9.0 + 1e-10);
    ASSERT_GE(r.ggm, 0.0);
    ASSERT_LE(r.three_pi, 1.0);
    ASSERT_LE(r.gmc, 1.0);
  }
}

TEST(MeasuresProperty, GmcIsShortestEdgeUnderTies) {
  const auto r = measures_closed_form({0.6, 0.2, 0.2});
  EXPECT_EQ(r.gmc, r.triangle.shortest());
  EXPECT_NEAR(r.gmc, 0.64, 1e-14);
  EXPECT_NEAR(r.ggm, 0.2, 1e-14);
}

TEST(Parsing, MeasureAndPathNames) {
  for (Measure m : {Measure::ggm, Measure::three_pi, Measure::gmc, Measure::fill}) {
    EXPECT_EQ(parse_measure(measure_name(m)), m);
  }
  EXPECT_EQ(parse_eval_path("generic"), EvalPath::generic);
  EXPECT_THROW(parse_measure("tangle"), std::invalid_argument);
}

}  // namespace
}  // namespace nuent
