#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "hypwalk/alexander.hpp"
#include "hypwalk/b3.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/estimate.hpp"
#include "hypwalk/matrix2.hpp"
#include "hypwalk/rng.hpp"

using namespace hypwalk;

namespace {

std::vector<int> random_braid(std::mt19937_64& g, int len) {
  const int letters[4] = {1, -1, 2, -2};
  std::vector<int> l(len);
  for (int& x : l) x = letters[g() % 4];
  return l;
}

}  // namespace

TEST(Alexander, KnownValues) {
  Framing br = braid_sigma_framing();
  // closure of sigma1 (one strand pair twisted once, plus a free strand): split link, nabla = 0
  EXPECT_TRUE(alexander_polynomial(Word(br, {1})).is_zero());
  // trivial braid: 3-component unlink, also 0
  EXPECT_TRUE(alexander_polynomial(Word(br, {})).is_zero());
  // trefoil as closure of sigma1^3 sigma2: nabla is t^2 - t + 1 up to units
  LaurentPoly tr = alexander_polynomial(Word(br, {1, 1, 1, 2}));
  EXPECT_EQ(tr.high() - tr.low(), 2);
  EXPECT_EQ(tr.coeff(tr.low()), -tr.coeff(tr.low() + 1));
  EXPECT_EQ(tr.coeff(tr.low()), tr.coeff(tr.high()));
}

// (1 + t + t^2) divides det(M - I) for every braid, and nabla is conjugation invariant
TEST(Alexander, DivisionAndConjugationInvariance) {
  std::mt19937_64 g(1);
  Framing br = braid_sigma_framing();
  LaurentPoly cyc = LaurentPoly::from_coeffs(0, {1, 1, 1});
  for (int i = 0; i < 10000; ++i) {
    Word w(br, random_braid(g, 1 + i % 40));
    LaurentPoly nabla = alexander_polynomial(w);
    Matrix2L m = matrix_of_word_laurent(w);
    EXPECT_EQ(cyc * nabla, m.det() + LaurentPoly(1) - m.trace());
    if (i % 10 == 0) {
      Word c(br, random_braid(g, 1 + i % 10));
      EXPECT_EQ(alexander_polynomial(c.concat(w).concat(c.inverse())), nabla);
    }
  }
}

// exact polynomial evaluated at rational t equals the determinant over the rationals at t
TEST(Alexander, EvaluationConsistency) {
  std::mt19937_64 g(2);
  Framing br = braid_sigma_framing();
  for (int i = 0; i < 1000; ++i) {
    Word w(br, random_braid(g, 1 + i % 30));
    mpq_class t(static_cast<long>(g() % 7) - 3, 1 + static_cast<long>(g() % 5));
    t.canonicalize();
    if (t == 0) t = mpq_class(2, 7);
    Matrix2q m = matrix_of_word_rational(w, t);
    mpq_class direct = (m.det() + 1 - m.trace()) / (1 + t + t * t);
    EXPECT_EQ(alexander_polynomial(w).evaluate(t), direct);
  }
}

// (1 - u^2 + u^4) nabla(-u^2) = u^{2p} + 1 - Tr M(-u^2), checked through the log-space sampler
TEST(Alexander, LogSpaceMatchesExact) {
  const double u = 1.2;
  auto s = alexander_statistics(20, 200, u, 5, 1);
  // regenerate the same words through the sampler's stream
  Framing br = braid_sigma_framing();
  const int letters[4] = {1, -1, 2, -2};
  for (std::int64_t i = 0; i < 200; ++i) {
    SampleRng rng(5, static_cast<std::uint64_t>(i));
    std::vector<int> l(20);
    for (int& x : l) x = letters[rng.below(4)];
    Word w(br, l);
    EXPECT_EQ(s[i].p, exponent_sum_p(w));
    double exact = alexander_polynomial(w).evaluate(-u * u);
    if (std::abs(exact) < 1e-9) continue;
    EXPECT_NEAR(s[i].ln_abs_nabla, std::log(std::abs(exact)), 1e-8) << w.to_json();
  }
}

TEST(Alexander, PoleRejected) {
  // 1 - u^2 + u^4 has no positive real root; nonpositive u is a config error
  EXPECT_GT(alexander_denominator(1.0), 0.0);
  EXPECT_THROW(alexander_statistics(10, 10, -1.0, 1), Error);
}

TEST(Alexander, ExponentSumMarginal) {
  const std::int64_t n = 64, samples = 20000;
  auto s = alexander_statistics(n, samples, 1.1, 8);
  Estimate e;
  for (const auto& x : s) e.add(static_cast<double>(x.p));
  // var of the p-estimate's variance: about n sqrt(2/N)
  EXPECT_NEAR(e.variance(), static_cast<double>(n), 4 * n * std::sqrt(2.0 / samples));
  EXPECT_NEAR(e.mean, 0.0, 4 * std::sqrt(static_cast<double>(n) / samples));
}

// on projection-closed braids (powers of the full twist) nabla depends only on p
TEST(Alexander, ProjectionClosedDependsOnlyOnP) {
  std::mt19937_64 g(4);
  Framing br = braid_sigma_framing();
  std::map<long, LaurentPoly> by_p;
  int found = 0;
  for (int i = 0; i < 200000 && found < 300; ++i) {
    Word w(br, random_braid(g, 12));
    if (!project_b3(w).empty()) continue;
    ++found;
    LaurentPoly nabla = alexander_polynomial(w);
    long p = exponent_sum_p(w);
    auto it = by_p.find(p);
    if (it == by_p.end())
      by_p.emplace(p, nabla);
    else
      EXPECT_EQ(it->second, nabla) << p;
  }
  EXPECT_GE(found, 100);
  EXPECT_GE(by_p.size(), 2u);
}

TEST(Alexander, RecordJson) {
  AlexanderRecord r = alexander_record(Word(braid_sigma_framing(), {1, 2, -1}), 1.0);
  std::string j = r.to_json();
  EXPECT_NE(j.find("\"nabla\""), std::string::npos);
  EXPECT_NE(j.find("\"p\":1"), std::string::npos);
}
