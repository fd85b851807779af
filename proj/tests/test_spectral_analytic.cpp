#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hypwalk/errors.hpp"
#include "hypwalk/honeycomb.hpp"
#include "hypwalk/spectral.hpp"
#include "hypwalk/walk.hpp"

using namespace hypwalk;

namespace {

const cplx I(0, 1);

// sum over all honeycomb-chain paths of length n from 0 back to 0; weights are dyadic so doubles are exact
double path_weight(int site, int left, double w) {
  if (site > left) return 0;
  if (left == 0) return site == 0 ? w : 0;
  if (site == 0) return path_weight(0, left - 1, w / 2) + path_weight(1, left - 1, w / 2);
  if (site == 1) return path_weight(0, left - 1, w / 2) + path_weight(2, left - 1, w / 2);
  return path_weight(site + 1, left - 1, w / 2) + path_weight(site, left - 1, w / 4) +
         path_weight(site - 1, left - 1, w / 4);
}

}  // namespace

TEST(Transfer, H3ClosedForm) {
  DriftResult d = graph_drift(3);
  ASSERT_EQ(d.rho.size(), 2u);
  EXPECT_NEAR(d.rho[0], 0.4, 1e-9);
  EXPECT_NEAR(d.rho[1], 0.6, 1e-9);
  EXPECT_NEAR(d.backbone_drift, 1.0 / 15, 1e-10);
  EXPECT_NEAR(d.graph_drift, 2.0 / 15, 1e-8);
  EXPECT_LT(d.fd_derivative_gap, 1e-7);
  EXPECT_LT(d.residual, 1e-10);
}

TEST(Transfer, SigmaBarSystem) {
  Pencil p = sigma_bar_pencil();
  EXPECT_NEAR(backbone_drift(p), 0.25, 1e-12);
  for (double x : {1e-3, 1e-2, 0.1, 0.3}) {
    cplx closed = 4.0 / (std::exp(-I * x) + 2.0 * std::exp(I * x) + 1.0);
    EXPECT_LT(std::abs(smallest_root(p, x) - closed), 1e-10) << x;
  }
  RootSeries r = root_series(p);
  EXPECT_LT(std::abs(r.c1 - cplx(0, -0.25)), 1e-9);
  EXPECT_NEAR(r.c2.real(), 0.3125, 1e-6);
}

// roots of det(sA - I) are the reciprocal eigenvalues of A
TEST(Transfer, RootsAreReciprocalEigenvalues) {
  for (int q : {3, 4, 5, 8, 13}) {
    RhoFixedPoint fp = solve_rho_fixed_point(q);
    Pencil p = hecke_pencil({q, fp.rho});
    for (double x : {0.0, 0.05, 0.2}) {
      auto roots = det_roots(p, x);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(p.A(x));
      for (int i = 0; i < es.eigenvalues().size(); ++i) {
        cplx lam = es.eigenvalues()[i];
        if (std::abs(lam) < 1e-9) continue;
        double best = 1e300;
        for (cplx s : roots) best = std::min(best, std::abs(s - 1.0 / lam));
        EXPECT_LT(best, 1e-7 * std::max(1.0, std::abs(1.0 / lam))) << "q=" << q << " x=" << x;
      }
    }
  }
}

TEST(Transfer, ImplicitDerivativeMatchesFiniteDifference) {
  for (int q = 3; q <= 12; ++q) {
    DriftResult d = graph_drift(q);
    EXPECT_LT(d.fd_derivative_gap, 1e-6) << q;
    EXPECT_GE(d.graph_drift, d.backbone_drift);
    EXPECT_GE(d.backbone_drift, 0.0);
    double sum = std::accumulate(d.rho.begin(), d.rho.end(), 0.0);
    EXPECT_NEAR(sum, 1.0, 1e-12);
    for (double r : d.rho) {
      EXPECT_GE(r, 0.0);
      EXPECT_LE(r, 1.0);
    }
  }
}

TEST(Transfer, Errors) {
  TransferMatrixSpec bad{3, {1.0, 0.0}};
  try {
    bad.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularWeight);
  }
  EXPECT_THROW(graph_drift(2), Error);
  EXPECT_THROW(smallest_root(sigma_bar_pencil(), 2.0), Error);
}

// drift of the H_q walk against Monte Carlo; the +O(1/n) offset of <L>/n is allowed for
TEST(Transfer, DriftMatchesMonteCarlo) {
  const std::int64_t n = 20000;
  for (int q : {4, 5, 6}) {
    double l = graph_drift(q).graph_drift;
    Estimate e =
        simulate_drift(walk_config(hecke_framing(q), WalkKind::Simple, n, 1000, 17 + q), LengthFunctional::GraphL);
    EXPECT_LT(std::abs(e.mean - l), 3 * e.standard_error() + 5.0 / n) << "q=" << q << " mc=" << e.mean << " l=" << l;
  }
}

TEST(Transfer, GaussianProfileH3) {
  GaussianProfile g = h3_gaussian_profile();
  EXPECT_NEAR(g.mean_per_step, 1.0 / 15, 1e-9);
  EXPECT_NEAR(g.variance_per_step, 214.0 / 1125, 1e-7);
  // the density integrates to one over k
  double n = 1000, sum = 0;
  for (int k = 0; k <= 400; ++k) sum += g.density(k, n);
  EXPECT_NEAR(sum, 1.0, 1e-6);
  // variance of k against Monte Carlo
  WalkConfig c = walk_config(hecke_framing(3), WalkKind::Simple, 4000, 20000, 31);
  auto k = sample_functionals(c, {LengthFunctional::BackboneK})[0];
  Estimate e;
  for (double v : k) e.add(v);
  double var_per_step = e.variance() / 4000;
  // relative sampling error of a variance is about sqrt(2/N)
  EXPECT_NEAR(var_per_step / g.variance_per_step, 1.0, 4 * std::sqrt(2.0 / 20000) + 0.01);
}

TEST(Honeycomb, ExactMatchesPathEnumeration) {
  auto exact = honeycomb_return_profile_exact(16);
  auto fl = honeycomb_return_profile(16);
  EXPECT_EQ(exact[0], 1);
  EXPECT_EQ(exact[1], mpq_class(1, 2));
  for (int n = 0; n <= 16; ++n) {
    EXPECT_EQ(exact[n].get_d(), path_weight(0, n, 1.0)) << n;
    EXPECT_DOUBLE_EQ(fl[n], exact[n].get_d());
  }
}

TEST(Honeycomb, ConservationAndDecay) {
  EXPECT_LT(honeycomb_mass_drift(10000), 1e-12);
  auto p = honeycomb_return_profile(2000);
  HoneycombFit fit = fit_honeycomb(p, 500, 2000);
  EXPECT_NEAR(fit.lambda, (2 * std::sqrt(2.0) + 1) / 4, 1e-3);
  EXPECT_EQ(honeycomb_csv({1.0, 0.5}).substr(0, 7), "n,P_n(0");
}

TEST(Honeycomb, LatticeEdge) {
  try {
    honeycomb_return_profile(50, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LatticeEdge);
  }
}
