#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypwalk/errors.hpp"
#include "hypwalk/hyperbolic.hpp"
#include "hypwalk/normal_form.hpp"

using namespace hypwalk;

namespace {

std::vector<int> random_letters(std::mt19937_64& g, const Framing& f, int len) {
  auto mv = f.moves();
  std::vector<int> l(len);
  for (int& x : l) x = mv[g() % mv.size()];
  return l;
}

Point random_point(std::mt19937_64& g) {
  std::uniform_real_distribution<double> x(-2, 2), y(0.2, 3);
  return {x(g), y(g)};
}

}  // namespace

TEST(Geometry, Isometry) {
  std::mt19937_64 g(1);
  Framing f = modular_st_framing();
  for (int i = 0; i < 10000; ++i) {
    Matrix2d w = matrix_of_word(Word(f, random_letters(g, f, 1 + i % 8)));
    Point z1 = random_point(g), z2 = random_point(g);
    double d0 = point_pair_distance(z1, z2);
    double d1 = point_pair_distance(mobius_apply(w, z1), mobius_apply(w, z2));
    EXPECT_NEAR(d0, d1, 1e-10 * std::max(1.0, d0));
  }
}

TEST(Geometry, RotationClassInvariance) {
  std::mt19937_64 g(2);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  Framing f = sigma_bar_framing();
  for (int i = 0; i < 2000; ++i) {
    Matrix2d w = matrix_of_word(Word(f, random_letters(g, f, 1 + i % 20)));
    double d = hyperbolic_distance_of_word(w);
    double dr = hyperbolic_distance_of_word(rotation(ang(g)) * w * rotation(ang(g)));
    EXPECT_NEAR(d, dr, 1e-10 * std::max(1.0, d));
  }
}

TEST(Geometry, TwoDistanceRoutesAgree) {
  std::mt19937_64 g(3);
  for (Framing f : {modular_st_framing(), hecke_framing(5), free_framing(2)}) {
    for (int i = 0; i < 1000; ++i) {
      Word w(f, random_letters(g, f, 1 + i % 50));
      Point z = mobius_apply(matrix_of_word(w), Point(0, 1));
      double a = hyperbolic_distance_of_word(w);
      double b = point_pair_distance(Point(0, 1), z);
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, a));
    }
  }
}

TEST(Geometry, AngleStepIsTransposeAction) {
  Matrix2d h{1, 2, 0, 1};
  double theta = 0.3;
  AngleStep s = angle_step(theta, h);
  // h^T (cos, sin) = (cos, 2 cos + sin)
  double x = std::cos(theta), y = 2 * std::cos(theta) + std::sin(theta);
  EXPECT_NEAR(s.dd, std::log(x * x + y * y), 1e-14);
  EXPECT_NEAR(s.theta, std::atan(y / x), 1e-14);
  EXPECT_NEAR(fold_angle(std::numbers::pi / 2 + 0.1), -std::numbers::pi / 2 + 0.1, 1e-14);
}

TEST(Geometry, BackboneGeneratorsAreFree) {
  // no nontrivial reduced word of length <= 12 in the backbone generators is trivial in the group
  for (const BackboneSpec& s : table1_specs()) {
    if (!s.group.is_psl_like()) continue;  // F3 and F4 are their own backbones
    std::mt19937_64 g(4);
    const int m = static_cast<int>(s.backbone_generators.size());
    bool idem = s.backbone.alphabet == Alphabet::Idempotent;
    for (int trial = 0; trial < 3000; ++trial) {
      int len = 1 + trial % 12;
      Word w(s.group, {});
      int prev = -1;
      for (int i = 0; i < len; ++i) {
        int j;
        do j = static_cast<int>(g() % m);
        while (idem && j == prev);
        prev = j;
        w = w.concat(s.backbone_generators[j]);
      }
      NormalFormHq nf = reduce_free_product(w);
      EXPECT_FALSE(nf.empty()) << s.name << " " << w.to_json();
    }
  }
}

TEST(Table1, SpecsMatchTable) {
  auto specs = table1_specs();
  ASSERT_EQ(specs.size(), 4u);
  EXPECT_EQ(backbone_spec("F3").scale_factor, 1);
  EXPECT_EQ(backbone_spec("F4").scale_factor, 1);
  EXPECT_EQ(backbone_spec("H3").scale_factor, 2);
  EXPECT_EQ(backbone_spec("PSL").scale_factor, 1);
  EXPECT_THROW(backbone_spec("F9"), Error);
}

TEST(Measure, ConvergesFromTwoStartsAndConservesMass) {
  GeneratorSet gens = generators_of(free_framing(2));
  MeasureResult a = iterate_invariant_measure(gens, 1024, 1e-9);
  MeasureResult b = iterate_invariant_measure(gens, 1024, 1e-9, 20000, MeasureStart::PointMass);
  ASSERT_TRUE(a.converged);
  ASSERT_TRUE(b.converged);
  double total = 0;
  for (double w : a.mu.weights) total += w;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_LT(l1_distance(a.mu.weights, b.mu.weights), 1e-6);
  EXPECT_THROW(iterate_invariant_measure(gens, 100), Error);
}

TEST(Measure, MatchesMonteCarloHistogram) {
  GeneratorSet gens = generators_of(free_framing(2));
  MeasureResult m = iterate_invariant_measure(gens, 4096);
  ASSERT_TRUE(m.converged);
  auto h = angle_histogram_mc(gens, 2000000, 64, 5);
  EXPECT_LT(l1_distance(m.mu.coarsen(64), h), 0.05);
}

TEST(Measure, HistogramWindowsAgree) {
  GeneratorSet gens = generators_of(free_framing(2));
  auto first = angle_histogram_mc(gens, 1000000, 32, 8, 1000000);
  auto second = angle_histogram_mc(gens, 2000000, 32, 8, 2000000);
  EXPECT_LT(l1_distance(first, second), 0.02);
}

TEST(Lyapunov, MeasureAndMonteCarloAgree) {
  Framing f = free_framing(2);
  GeneratorSet gens = generators_of(f);
  MeasureResult m = iterate_invariant_measure(gens, 4096);
  LyapunovResult a = lyapunov_from_measure(gens, m);
  LyapunovResult b = lyapunov_mc(walk_config(f, WalkKind::Simple, 5000, 500, 3));
  EXPECT_NEAR(a.gamma1 / b.gamma1, 1.0, 0.01);
  EXPECT_NEAR(a.gamma2 / b.gamma2, 1.0, 0.01);
  EXPECT_GE(b.sigma2, 0.0);
  EXPECT_GT(b.gamma1, 0.0);
}

TEST(Lyapunov, MonteCarloIsReproducible) {
  WalkConfig c = walk_config(sigma_bar_framing(), WalkKind::Simple, 500, 3000, 9, 1);
  LyapunovResult a = lyapunov_mc(c);
  c.workers = 2;
  LyapunovResult b = lyapunov_mc(c);
  EXPECT_EQ(a.gamma1, b.gamma1);
}

TEST(Relation, RatioNearOneAndImprovesWithN) {
  BackboneSpec f3 = backbone_spec("F3");
  RelationReport big = check_length_trace_relation(f3, 10000, 300, 11);
  EXPECT_TRUE(big.pass) << big.to_json();
  RelationReport small = check_length_trace_relation(f3, 100, 300, 11);
  EXPECT_LT(std::abs(big.ratio - 1), std::abs(small.ratio - 1) + 0.002);
}
