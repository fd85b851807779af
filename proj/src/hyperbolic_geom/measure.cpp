#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "hypwalk/hyperbolic.hpp"
#include "hypwalk/rng.hpp"

namespace hypwalk {

namespace {

constexpr double kPi = std::numbers::pi;

// CDF of piecewise-uniform cell masses on the lifted angle coordinate; each turn of
// length pi adds the full mass.
class LiftedCdf {
 public:
  explicit LiftedCdf(const std::vector<double>& mass) : mass_(mass), cum_(mass.size() + 1, 0.0) {
    for (std::size_t i = 0; i < mass.size(); ++i) cum_[i + 1] = cum_[i] + mass[i];
    dth_ = kPi / static_cast<double>(mass.size());
  }
  double operator()(double x) const {
    const int n = static_cast<int>(mass_.size());
    double k = std::floor((x + kPi / 2) / kPi);
    double y = x - k * kPi;
    double p = (y + kPi / 2) / dth_;
    int i = std::clamp(static_cast<int>(std::floor(p)), 0, n - 1);
    return k * cum_[n] + cum_[i] + (p - i) * mass_[i];
  }

 private:
  const std::vector<double>& mass_;
  std::vector<double> cum_;
  double dth_;
};

}  // namespace

double DensityGrid::width() const { return kPi / n; }

double DensityGrid::center(int i) const { return -kPi / 2 + (i + 0.5) * width(); }

std::vector<double> DensityGrid::coarsen(int bins) const {
  if (bins <= 0 || n % bins != 0) throw Error(ErrorKind::Config, "bin count must divide the grid size");
  std::vector<double> out(bins, 0.0);
  const int r = n / bins;
  for (int i = 0; i < n; ++i) out[i / r] += weights[i];
  return out;
}

std::string DensityGrid::to_csv() const {
  std::ostringstream os;
  os << "theta_center,density\n";
  for (int i = 0; i < n; ++i) os << fmt12(center(i)) << ',' << fmt12(weights[i] / width()) << '\n';
  return os.str();
}

MeasureResult iterate_invariant_measure(const GeneratorSet& gens, int n, double tol, int max_sweeps,
                                        MeasureStart start) {
  if (n < 256) throw Error(ErrorKind::Config, "measure grid needs N >= 256");
  if (gens.empty()) throw Error(ErrorKind::Config, "empty generator set");
  const double dth = kPi / n;
  // theta lies in the image cell iff its preimage under v -> h^T v lies in the source cell,
  // so a cell's new mass is the old mass between the preimages of its edges
  std::vector<std::vector<double>> pre;
  for (const Matrix2d& h : gens) {
    Matrix2d a = inverse(h.transpose());
    std::vector<double> u(n + 1);
    double prev = 0;
    for (int j = 0; j <= n; ++j) {
      double th = -kPi / 2 + j * dth;
      double x = a.a * std::cos(th) + a.b * std::sin(th), y = a.c * std::cos(th) + a.d * std::sin(th);
      double t = std::atan2(y, x);
      if (j > 0) t += kPi * std::round((prev - t) / kPi);  // continuous lift
      u[j] = prev = t;
    }
    pre.push_back(std::move(u));
  }

  MeasureResult res;
  DensityGrid& g = res.mu;
  g.n = n;
  g.weights.assign(n, 0.0);
  switch (start) {
    case MeasureStart::Uniform: g.weights.assign(n, 1.0 / n); break;
    case MeasureStart::CosineBump:
      for (int i = 0; i < n; ++i) g.weights[i] = std::cos(g.center(i)) * std::cos(g.center(i));
      break;
    case MeasureStart::PointMass: g.weights[n / 2] = 1.0; break;
  }
  double s = 0;
  for (double w : g.weights) s += w;
  for (double& w : g.weights) w /= s;

  std::vector<double> next(n);
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    std::fill(next.begin(), next.end(), 0.0);
    LiftedCdf cdf(g.weights);
    for (const auto& u : pre) {
      double lo = cdf(u[0]);
      for (int j = 0; j < n; ++j) {
        double hi = cdf(u[j + 1]);
        next[j] += std::abs(hi - lo);
        lo = hi;
      }
    }
    double total = 0;
    for (double v : next) total += v;
    double l1 = 0;
    for (int j = 0; j < n; ++j) {
      double v = next[j] / total;
      l1 += std::abs(v - g.weights[j]);
      next[j] = v;
    }
    std::swap(g.weights, next);
    res.l1_trajectory.push_back(l1);
    res.sweeps = sweep;
    if (l1 < tol) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

LyapunovResult lyapunov_from_measure(const GeneratorSet& gens, const MeasureResult& m) {
  if (!m.converged) {
    std::ostringstream os;
    os << "invariant measure did not converge after " << m.sweeps << " sweeps; last L1 change "
       << (m.l1_trajectory.empty() ? 0.0 : m.l1_trajectory.back());
    throw Error(ErrorKind::NonConvergence, os.str());
  }
  LyapunovResult r;
  r.method = "measure-integral";
  const DensityGrid& g = m.mu;
  for (const Matrix2d& h : gens)
    for (int i = 0; i < g.n; ++i) {
      double dd = angle_step(g.center(i), h).dd;
      r.gamma1 += g.weights[i] * dd;
      r.gamma2 += g.weights[i] * dd * dd;
    }
  r.gamma1 /= static_cast<double>(gens.size());
  r.gamma2 /= static_cast<double>(gens.size());
  r.sigma2 = r.gamma2 - r.gamma1 * r.gamma1;
  return r;
}

std::vector<double> angle_histogram_mc(const GeneratorSet& gens, std::int64_t steps, int bins, std::uint64_t seed,
                                       std::int64_t burn_in, std::int64_t skip) {
  if (bins < 1) throw Error(ErrorKind::Config, "bins must be >= 1");
  SampleRng rng(seed, 0);
  const auto ng = static_cast<std::uint32_t>(gens.size());
  std::vector<double> h(bins, 0.0);
  double theta = 0;
  for (std::int64_t t = 0; t < skip + burn_in; ++t) theta = angle_step(theta, gens[rng.below(ng)]).theta;
  for (std::int64_t t = 0; t < steps; ++t) {
    theta = angle_step(theta, gens[rng.below(ng)]).theta;
    int b = static_cast<int>((theta + kPi / 2) / kPi * bins);
    h[std::clamp(b, 0, bins - 1)] += 1;
  }
  for (double& v : h) v /= static_cast<double>(steps);
  return h;
}

double l1_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::Config, "histograms differ in size");
  double d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
  return d;
}

}  // namespace hypwalk
