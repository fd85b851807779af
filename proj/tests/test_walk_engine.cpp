#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypwalk/b3.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/estimate.hpp"
#include "hypwalk/flux.hpp"
#include "hypwalk/normal_form.hpp"
#include "hypwalk/return_prob.hpp"
#include "hypwalk/walk.hpp"

using namespace hypwalk;

namespace {

// mean of L over all 3^n words of the H3 walk
double exhaustive_mean_length(int n) {
  Framing f = hecke_framing(3);
  const int letters[3] = {1, 2, -2};
  long total = 0, count = 0;
  std::vector<int> digit(n, 0);
  for (;;) {
    NormalFormHq nf(3);
    for (int d : digit) push_psl_letter(nf, f.alphabet, letters[d]);
    total += nf.length();
    ++count;
    int pos = n - 1;
    while (pos >= 0 && digit[pos] == 2) digit[pos--] = 0;
    if (pos < 0) break;
    ++digit[pos];
  }
  return static_cast<double>(total) / static_cast<double>(count);
}

}  // namespace

TEST(Estimate, MergeIsOrderIndependent) {
  std::mt19937_64 g(1);
  std::normal_distribution<double> nd(2.0, 3.0);
  Estimate all, a, b, c;
  for (int i = 0; i < 3000; ++i) {
    double x = nd(g);
    all.add(x);
    (i < 1000 ? a : i < 2500 ? b : c).add(x);
  }
  Estimate ab = a, bc = b;
  ab.merge(b);
  ab.merge(c);
  bc.merge(c);
  Estimate a2 = a;
  a2.merge(bc);
  EXPECT_NEAR(ab.mean, all.mean, 1e-12);
  EXPECT_NEAR(a2.mean, all.mean, 1e-12);
  EXPECT_NEAR(ab.variance(), all.variance(), 1e-9);
  EXPECT_NEAR(a2.variance(), all.variance(), 1e-9);
  EXPECT_DOUBLE_EQ(all.standard_error(), std::sqrt(all.variance() / 3000));
}

TEST(Walk, TreeWalksHaveNoBacktracking) {
  for (Framing f : {idempotent_framing(3), free_framing(2)}) {
    Estimate e = simulate_drift(walk_config(f, WalkKind::Directed, 500, 200, 7), LengthFunctional::GraphL);
    EXPECT_DOUBLE_EQ(e.mean, 1.0);
    EXPECT_DOUBLE_EQ(e.variance(), 0.0);
  }
}

TEST(Walk, ReproducibleAcrossWorkerCounts) {
  WalkConfig c = walk_config(hecke_framing(3), WalkKind::Simple, 300, 5000, 42, 1);
  Estimate one = simulate_drift(c, LengthFunctional::GraphL);
  c.workers = 3;
  Estimate three = simulate_drift(c, LengthFunctional::GraphL);
  EXPECT_EQ(one.mean, three.mean);
  EXPECT_EQ(one.m2, three.m2);
}

TEST(Walk, InvalidConfigRejected) {
  auto run = [](std::int64_t n, std::int64_t s) {
    return simulate_drift(walk_config(hecke_framing(3), WalkKind::Simple, n, s, 1), LengthFunctional::GraphL);
  };
  try {
    run(0, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Config);
  }
  EXPECT_THROW(run(10, 0), Error);
  EXPECT_THROW(simulate_drift(walk_config(modular_st_framing(), WalkKind::Simple, 10, 10, 1),
                              LengthFunctional::B3Lower),
               Error);
}

// mean of L at n = 12 against full enumeration of the 3^12 words
TEST(Walk, DriftMatchesExhaustiveMean) {
  const int n = 12;
  double exact = exhaustive_mean_length(n) / n;
  Estimate e = simulate_drift(walk_config(hecke_framing(3), WalkKind::Simple, n, 200000, 3), LengthFunctional::GraphL);
  EXPECT_LT(std::abs(e.mean - exact), 4 * e.standard_error()) << e.mean << " vs " << exact;
}

TEST(Walk, DriftStationaryBetweenScales) {
  WalkConfig c = walk_config(hecke_framing(3), WalkKind::Simple, 20000, 2000, 5);
  Estimate a = simulate_drift(c, LengthFunctional::GraphL);
  c.steps = 40000;
  c.seed = 6;
  Estimate b = simulate_drift(c, LengthFunctional::GraphL);
  double se = std::hypot(a.standard_error(), b.standard_error());
  EXPECT_LT(std::abs(a.mean - b.mean), 3 * se + 1.5 / 20000);  // plus the O(1/n) offset
}

TEST(Walk, B3BoundsBracketOnSameSamples) {
  WalkConfig c = walk_config(braid_sigma_framing(), WalkKind::Simple, 200, 500, 9);
  auto v = sample_functionals(c, {LengthFunctional::B3Lower, LengthFunctional::B3Upper});
  for (std::size_t i = 0; i < v[0].size(); ++i) EXPECT_LE(v[0][i], v[1][i]);
}

TEST(Flux, ConservationAgainstExponentSum) {
  // sigma basis: Phi/h is the exponent sum over 6, step by step
  std::mt19937_64 g(2);
  Framing br = braid_sigma_framing();
  const int letters[4] = {1, -1, 2, -2};
  for (int i = 0; i < 1000; ++i) {
    std::vector<int> l(30);
    FluxState fs;
    for (int& x : l) {
      x = letters[g() % 4];
      fs.add_sigma(x);
    }
    EXPECT_DOUBLE_EQ(fs.phi_over_h(), static_cast<double>(exponent_sum(Word(br, l))) / 6.0);
  }
  // ab basis increments are +-1/2 and +-1/3
  FluxState a;
  a.add_ab(1);
  EXPECT_DOUBLE_EQ(a.phi_over_h(), 0.5);
  a.add_ab(-2);
  EXPECT_DOUBLE_EQ(a.phi_over_h(), 0.5 - 1.0 / 3);
}

TEST(Flux, VariancePerStep) {
  // ab: (1/2)(1/4) + (1/2)(1/9) = 13/72; sigma: 1/36
  for (bool counts : {true, false}) {
    WalkConfig c = walk_config(sigma_bar_framing(), WalkKind::Magnetic, 100, 100000, 4);
    FluxResult r = simulate_flux(c, FluxBasis::AB, counts);
    EXPECT_LT(std::abs(r.variance_per_step.mean - 13.0 / 72), 4 * r.variance_per_step.standard_error());
  }
  FluxResult s = simulate_flux(walk_config(sigma_bar_framing(), WalkKind::Magnetic, 100, 100000, 4), FluxBasis::Sigma);
  EXPECT_LT(std::abs(s.variance_per_step.mean - 1.0 / 36), 4 * s.variance_per_step.standard_error());
}

TEST(Flux, ClosedWalksHaveAcceptanceBookkeeping) {
  WalkConfig c = walk_config(sigma_bar_framing(), WalkKind::Magnetic, 12, 20000, 5);
  c.closure = ClosureFilter::ProjectionClosed;
  FluxResult r = simulate_flux(c, FluxBasis::Sigma);
  EXPECT_EQ(r.proposals, 20000);
  EXPECT_GT(r.accepted, 0);
  EXPECT_LT(r.accepted, r.proposals);
  // a projection-closed braid is a power of the full twist, so e is a multiple of 6
  for (auto& [k, v] : r.histogram) EXPECT_EQ(k % 6, 0);
}

TEST(ReturnProb, ExhaustiveMatchesMasterEquation) {
  for (Framing f : {sigma_bar_framing(), braid_sigma_framing()}) {
    auto p = master_equation_return_profile(f, 8);
    for (int n = 0; n <= 8; ++n) EXPECT_NEAR(p[n], exhaustive_return_probability(f, n), 1e-15) << n;
  }
  auto p = master_equation_return_profile(sigma_bar_framing(), 2);
  EXPECT_DOUBLE_EQ(p[0], 1.0);
  EXPECT_DOUBLE_EQ(p[1], 0.0);
  EXPECT_DOUBLE_EQ(p[2], 0.25);
}

TEST(ReturnProb, BraidHitsAreSubsetOnMatchedSeeds) {
  std::vector<int> ns{2, 4, 6, 8, 10};
  auto psl = estimate_return_probability(sigma_bar_framing(), ns, 20000, 13);
  auto b3 = estimate_return_probability(braid_sigma_framing(), ns, 20000, 13);
  for (std::size_t i = 0; i < ns.size(); ++i) EXPECT_LE(b3[i].hits, psl[i].hits);
  auto odd = estimate_return_probability(braid_sigma_framing(), {3}, 10, 1);
  EXPECT_TRUE(odd[0].exact_zero);
}

TEST(ReturnProb, MonteCarloMatchesExact) {
  auto exact = master_equation_return_profile(braid_sigma_framing(), 12);
  auto mc = estimate_return_probability(braid_sigma_framing(), {4, 8, 12}, 200000, 21);
  for (const auto& r : mc) EXPECT_LT(std::abs(r.p - exact[r.n]), 4 * r.standard_error + 1e-12) << r.n;
}
