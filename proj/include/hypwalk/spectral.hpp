#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace hypwalk {

using cplx = std::complex<double>;

struct TransferMatrixSpec {
  int q = 3;
  std::vector<double> rho;  // vertex-type weights, n_q = floor(q/2) + 1 entries

  int dimension() const { return q / 2 + 1; }
  void validate() const;
};

// Linear pencil of a type chain: M(x, s) = s * A(x) - I with
// A(x) = A0 + Ap e^{ix} + Am e^{-ix}.  Rows are destination types, columns source types;
// e^{+-ix} marks a step up/down the backbone tree.
struct Pencil {
  Eigen::MatrixXd A0, Ap, Am;

  int dim() const { return static_cast<int>(A0.rows()); }
  Eigen::MatrixXcd A(double x) const;
  Eigen::MatrixXcd dA(double x) const;
  Eigen::MatrixXcd M(double x, cplx s) const;
};

// Type chain of the {a2, b_q, b_q^-1} walk on H_q.
Pencil hecke_pencil(const TransferMatrixSpec& spec);
// Two-type (i/o) chain of the sbar walk on PSL(2,Z).
Pencil sigma_bar_pencil();

Eigen::MatrixXcd build_transfer_matrix(const TransferMatrixSpec& spec, double x, cplx s);

// Coefficients c_0..c_d of det M(x, s) as a polynomial in s.
std::vector<cplx> det_polynomial(const Pencil& p, double x);
// Roots of det M(x, .) by companion-matrix eigenvalues, Newton-polished, sorted by modulus.
std::vector<cplx> det_roots(const Pencil& p, double x);
// The root tracked continuously in x from the smallest-modulus root at x = 0.
cplx smallest_root(const Pencil& p, double x, double neighborhood = 0.5);

// ds/dx at x = 0 from -(d det/dx)/(d det/ds), cofactors evaluated at (0, s_-).
cplx root_derivative_implicit(const Pencil& p);
// central difference of the tracked root
cplx root_derivative_fd(const Pencil& p, double h = 1e-6);
// s_-(x) = s0 + c1 x + c2 x^2 + ...
struct RootSeries {
  cplx s0, c1, c2;
};
RootSeries root_series(const Pencil& p);

// i ds_-/dx at 0, required to be real within tol
double backbone_drift(const Pencil& p, double tol = 1e-10);
double backbone_drift(int q, const std::vector<double>& rho);

// Normalized moduli of the null vector of M(0, s_-).
std::vector<double> stationary_weights(const Pencil& p);

struct RhoFixedPoint {
  std::vector<double> rho;
  int iterations = 0;
  double residual = 0;
  std::vector<double> residual_trajectory;
};
RhoFixedPoint solve_rho_fixed_point(int q, double omega = 0.5, double tol = 1e-10, int max_iter = 10000);

struct DriftResult {
  int q = 3;
  double backbone_drift = 0;  // l-bar_q
  double graph_drift = 0;     // l_q
  std::vector<double> rho;
  int iterations = 0;
  double residual = 0;
  double fd_derivative_gap = 0;  // |implicit - finite difference| of ds/dx
  std::string to_json() const;
};
DriftResult graph_drift(int q);

struct GaussianProfile {
  double mean_per_step = 0;
  double variance_per_step = 0;
  double mean(double n) const { return mean_per_step * n; }
  double variance(double n) const { return variance_per_step * n; }
  double density(double k, double n) const;
};
// Gaussian law of the backbone generation of the H3 walk, from the root expansion.
GaussianProfile h3_gaussian_profile();

}  // namespace hypwalk
