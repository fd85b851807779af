#include "hypwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "json.hpp"

namespace hypwalk {

namespace {

constexpr cplx I{0.0, 1.0};

cplx horner_derivative(const std::vector<cplx>& c, cplx s) {
  cplx r = 0;
  for (std::size_t k = c.size(); k-- > 1;) r = r * s + static_cast<double>(k) * c[k];
  return r;
}

cplx det_of(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

Eigen::MatrixXcd cofactors(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXcd c(n, n);
  if (n == 1) {
    c(0, 0) = 1.0;
    return c;
  }
  Eigen::MatrixXcd minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int k = 0, kk = 0; k < n; ++k) {
          if (k == j) continue;
          minor(rr, kk++) = m(r, k);
        }
        ++rr;
      }
      c(i, j) = ((i + j) % 2 ? -1.0 : 1.0) * det_of(minor);
    }
  return c;
}

cplx nearest(const std::vector<cplx>& roots, cplx target) {
  return *std::min_element(roots.begin(), roots.end(),
                           [&](cplx a, cplx b) { return std::abs(a - target) < std::abs(b - target); });
}

void check_isolated(const std::vector<cplx>& roots, cplx s) {
  int close = 0;
  for (cplx r : roots)
    if (std::abs(r - s) < 1e-8) ++close;
  if (close > 1) throw Error(ErrorKind::DegenerateRoot, "smallest root collides with another root");
}

}  // namespace

void TransferMatrixSpec::validate() const {
  if (q < 3 || q > 64) throw Error(ErrorKind::Config, "q must lie in 3..64");
  if (static_cast<int>(rho.size()) != dimension())
    throw Error(ErrorKind::Config, "rho must have floor(q/2)+1 entries");
  double sum = 0;
  for (double r : rho) {
    if (!(r >= 0 && r <= 1)) throw Error(ErrorKind::Config, "rho entries must lie in [0, 1]");
    sum += r;
  }
  if (std::abs(sum - 1) > 1e-9) throw Error(ErrorKind::Config, "rho must sum to 1");
  if (rho[0] >= 1) throw Error(ErrorKind::SingularWeight, "rho_1 = 1 makes the first column singular");
}

Eigen::MatrixXcd Pencil::A(double x) const {
  return A0.cast<cplx>() + Ap.cast<cplx>() * std::exp(I * x) + Am.cast<cplx>() * std::exp(-I * x);
}

Eigen::MatrixXcd Pencil::dA(double x) const {
  return Ap.cast<cplx>() * (I * std::exp(I * x)) - Am.cast<cplx>() * (I * std::exp(-I * x));
}

Eigen::MatrixXcd Pencil::M(double x, cplx s) const {
  return s * A(x) - Eigen::MatrixXcd::Identity(dim(), dim());
}

// Type 1 (index 0) is a vertex on the backbone; type j+1 sits j b-steps away from it inside
// a cell.  An a-step from type 1 crosses into the parent cell (e^{-ix}) landing on type i
// with the weight rho_i/(1-rho_1), or stays put as type 2.  Any a-step from a cell vertex
// opens a new child cell (e^{+ix}).
Pencil hecke_pencil(const TransferMatrixSpec& spec) {
  spec.validate();
  const int n = spec.dimension();
  Pencil p;
  p.A0 = Eigen::MatrixXd::Zero(n, n);
  p.Ap = Eigen::MatrixXd::Zero(n, n);
  p.Am = Eigen::MatrixXd::Zero(n, n);
  const double third = 1.0 / 3.0;
  p.A0(1, 0) += 2 * third;
  for (int i = 1; i < n; ++i) p.Am(i, 0) += third * spec.rho[i] / (1 - spec.rho[0]);
  for (int j = 1; j < n; ++j) {
    p.Ap(0, j) += third;
    p.A0(j - 1, j) += third;
    if (j + 1 < n) {
      p.A0(j + 1, j) += third;
    } else if (spec.q % 2 == 1) {
      p.A0(j, j) += third;  // the two farthest vertices of an odd cell are one b-step apart
    } else {
      p.A0(j - 1, j) += third;  // the antipode steps back toward the root either way
    }
  }
  return p;
}

Pencil sigma_bar_pencil() {
  Pencil p;
  p.A0 = Eigen::MatrixXd::Zero(2, 2);
  p.Ap.resize(2, 2);
  p.Am.resize(2, 2);
  p.Ap << 0.5, 0.25, 0.0, 0.5;
  p.Am << 0.25, 0.0, 0.25, 0.25;
  return p;
}

Eigen::MatrixXcd build_transfer_matrix(const TransferMatrixSpec& spec, double x, cplx s) {
  return hecke_pencil(spec).M(x, s);
}

std::vector<cplx> det_polynomial(const Pencil& p, double x) {
  const int d = p.dim();
  const int N = d + 1;
  const Eigen::MatrixXcd a = p.A(x);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  std::vector<cplx> vals(N);
  for (int k = 0; k < N; ++k) {
    cplx s = std::exp(I * (2 * std::numbers::pi * k / N));
    vals[k] = det_of(s * a - id);
  }
  std::vector<cplx> c(N);
  for (int j = 0; j < N; ++j) {
    cplx acc = 0;
    for (int k = 0; k < N; ++k) acc += vals[k] * std::exp(-I * (2 * std::numbers::pi * j * k / N));
    c[j] = acc / static_cast<double>(N);
  }
  double scale = 0;
  for (cplx v : c) scale = std::max(scale, std::abs(v));
  while (c.size() > 1 && std::abs(c.back()) < 1e-13 * scale) c.pop_back();
  return c;
}

std::vector<cplx> det_roots(const Pencil& p, double x) {
  std::vector<cplx> c = det_polynomial(p, x);
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  for (cplx& r : roots) {
    cplx f = det_of(p.M(x, r));
    for (int it = 0; it < 8; ++it) {
      cplx df = horner_derivative(c, r);
      if (df == cplx(0)) break;
      cplx next = r - f / df;
      cplx fn = det_of(p.M(x, next));
      if (!(std::abs(fn) < std::abs(f))) break;
      r = next;
      f = fn;
    }
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  return roots;
}

cplx smallest_root(const Pencil& p, double x, double neighborhood) {
  if (std::abs(x) > neighborhood) throw Error(ErrorKind::Config, "x lies outside the tracked neighborhood of 0");
  std::vector<cplx> roots = det_roots(p, 0.0);
  if (roots.empty()) throw Error(ErrorKind::DegenerateRoot, "determinant has no roots in s");
  cplx s = roots.front();
  check_isolated(roots, s);
  const int steps = static_cast<int>(std::ceil(std::abs(x) / 0.01));
  for (int k = 1; k <= steps; ++k) {
    roots = det_roots(p, x * k / steps);
    s = nearest(roots, s);
  }
  if (steps > 0) check_isolated(roots, s);
  return s;
}

cplx root_derivative_implicit(const Pencil& p) {
  cplx s = smallest_root(p, 0.0);
  Eigen::MatrixXcd c = cofactors(p.M(0.0, s));
  Eigen::MatrixXcd a = p.A(0.0), da = p.dA(0.0);
  cplx ds = 0, dx = 0;
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) {
      ds += c(i, j) * a(i, j);
      dx += c(i, j) * s * da(i, j);
    }
  if (std::abs(ds) < 1e-14) throw Error(ErrorKind::DegenerateRoot, "d det/ds vanishes at the root");
  return -dx / ds;
}

cplx root_derivative_fd(const Pencil& p, double h) {
  return (smallest_root(p, h) - smallest_root(p, -h)) / (2 * h);
}

RootSeries root_series(const Pencil& p) {
  RootSeries r;
  r.s0 = smallest_root(p, 0.0);
  r.c1 = root_derivative_implicit(p);
  auto second = [&](double h) { return (smallest_root(p, h) - 2.0 * r.s0 + smallest_root(p, -h)) / (h * h); };
  const double h = 2e-3;
  r.c2 = (4.0 * second(h / 2) - second(h)) / 3.0 / 2.0;
  return r;
}

double backbone_drift(const Pencil& p, double tol) {
  cplx l = I * root_derivative_implicit(p);
  if (std::abs(l.imag()) > tol)
    throw Error(ErrorKind::NumericalConsistency, "drift has imaginary part " + std::to_string(l.imag()));
  return l.real();
}

double backbone_drift(int q, const std::vector<double>& rho) {
  return backbone_drift(hecke_pencil(TransferMatrixSpec{q, rho}));
}

std::vector<double> stationary_weights(const Pencil& p) {
  cplx s = smallest_root(p, 0.0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p.M(0.0, s), Eigen::ComputeFullV);
  Eigen::VectorXcd v = svd.matrixV().col(p.dim() - 1);
  std::vector<double> w(p.dim());
  double sum = 0;
  for (int i = 0; i < p.dim(); ++i) sum += (w[i] = std::abs(v(i)));
  for (double& x : w) x /= sum;
  return w;
}

RhoFixedPoint solve_rho_fixed_point(int q, double omega, double tol, int max_iter) {
  TransferMatrixSpec spec{q, {}};
  const int n = spec.dimension();
  spec.rho.assign(n, 1.0 / n);
  spec.validate();
  RhoFixedPoint out;
  for (int it = 1; it <= max_iter; ++it) {
    std::vector<double> bar = stationary_weights(hecke_pencil(spec));
    double res = 0;
    for (int i = 0; i < n; ++i) res += std::abs(bar[i] - spec.rho[i]);
    out.residual_trajectory.push_back(res);
    out.iterations = it;
    out.residual = res;
    if (res < tol) {
      out.rho = bar;
      return out;
    }
    for (int i = 0; i < n; ++i) spec.rho[i] = (1 - omega) * spec.rho[i] + omega * bar[i];
  }
  std::ostringstream os;
  os << "rho iteration did not converge after " << max_iter << " steps; residual trajectory tail:";
  for (std::size_t k = out.residual_trajectory.size() > 5 ? out.residual_trajectory.size() - 5 : 0;
       k < out.residual_trajectory.size(); ++k)
    os << ' ' << out.residual_trajectory[k];
  throw Error(ErrorKind::NonConvergence, os.str());
}

DriftResult graph_drift(int q) {
  RhoFixedPoint fp = solve_rho_fixed_point(q);
  Pencil p = hecke_pencil(TransferMatrixSpec{q, fp.rho});
  DriftResult r;
  r.q = q;
  r.rho = fp.rho;
  r.iterations = fp.iterations;
  r.residual = fp.residual;
  r.backbone_drift = backbone_drift(p);
  r.fd_derivative_gap = std::abs(root_derivative_implicit(p) - root_derivative_fd(p));
  double corr = 0;
  for (std::size_t i = 1; i < fp.rho.size(); ++i) corr += static_cast<double>(i) * fp.rho[i] / (1 - fp.rho[0]);
  r.graph_drift = r.backbone_drift * (1 + corr);
  return r;
}

std::string DriftResult::to_json() const {
  nlohmann::json j = {{"q", q},
                      {"l_backbone", backbone_drift},
                      {"l_graph", graph_drift},
                      {"rho", rho},
                      {"residual", residual},
                      {"iterations", iterations},
                      {"fd_derivative_gap", fd_derivative_gap}};
  return j.dump();
}

double GaussianProfile::density(double k, double n) const {
  double v = variance(n);
  double d = k - mean(n);
  return std::exp(-d * d / (2 * v)) / std::sqrt(2 * std::numbers::pi * v);
}

GaussianProfile h3_gaussian_profile() {
  TransferMatrixSpec spec{3, {}};
  spec.rho = solve_rho_fixed_point(3).rho;
  RootSeries r = root_series(hecke_pencil(spec));
  GaussianProfile g;
  g.mean_per_step = (I * r.c1).real();
  g.variance_per_step = (2.0 * (r.c2 - r.c1 * r.c1 / 2.0)).real();
  return g;
}

}  // namespace hypwalk
