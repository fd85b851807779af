#include "hypwalk/honeycomb.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "hypwalk/estimate.hpp"

namespace hypwalk {

namespace {

// one step on sites 0..m-1; sites beyond the live prefix stay zero
template <class T>
void step(const std::vector<T>& p, std::vector<T>& out, const T& half, const T& quarter, std::size_t m) {
  m = std::min(m, p.size());
  out[0] = half * (p[0] + (m > 1 ? p[1] : T(0)));
  if (m > 1) out[1] = half * p[0] + (m > 2 ? quarter * p[2] : T(0));
  for (std::size_t k = 2; k < m; ++k)
    out[k] = quarter * (k + 1 < m ? p[k + 1] : T(0)) + quarter * p[k] + half * p[k - 1];
}

}  // namespace

std::vector<double> honeycomb_return_profile(int n_max, int lattice) {
  if (n_max < 0 || n_max > 1000000) throw Error(ErrorKind::Config, "n_max must lie in 0..1e6");
  if (lattice == 0) lattice = n_max + 2;
  if (lattice < 2) throw Error(ErrorKind::Config, "lattice needs at least two sites");
  std::vector<double> p(lattice, 0.0), q(lattice, 0.0), out(n_max + 1);
  p[0] = 1.0;
  out[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    step(p, q, 0.5, 0.25, n + 1);
    std::swap(p, q);
    if (p[lattice - 1] != 0.0)
      throw Error(ErrorKind::LatticeEdge,
                  "profile reached the lattice edge at n = " + std::to_string(n) + "; enlarge the lattice");
    out[n] = p[0];
  }
  return out;
}

std::vector<mpq_class> honeycomb_return_profile_exact(int n_max) {
  if (n_max < 0 || n_max > 200) throw Error(ErrorKind::ResourceLimit, "exact profile is capped at n = 200");
  std::vector<mpq_class> p(n_max + 2, mpq_class(0)), q(n_max + 2), out(n_max + 1);
  p[0] = 1;
  out[0] = 1;
  const mpq_class half(1, 2), quarter(1, 4);
  for (int n = 1; n <= n_max; ++n) {
    step(p, q, half, quarter, n + 1);
    std::swap(p, q);
    out[n] = p[0];
  }
  return out;
}

double honeycomb_mass_drift(int n_max) {
  std::vector<double> p(n_max + 2, 0.0), q(n_max + 2);
  p[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    step(p, q, 0.5, 0.25, n + 1);
    std::swap(p, q);
  }
  double mass = 0;
  for (double v : p) mass += v;
  return std::abs(mass - 1.0);
}

HoneycombFit fit_honeycomb(const std::vector<double>& profile, int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi <= n_lo || n_hi >= static_cast<int>(profile.size()))
    throw Error(ErrorKind::Config, "fit window must lie inside the profile");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    double x = n, y = std::log(profile[n]) + 1.5 * std::log(static_cast<double>(n));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    m += 1;
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  double icpt = (sy - slope * sx) / m;
  return {std::exp(slope), std::exp(icpt), n_lo, n_hi};
}

std::string honeycomb_csv(const std::vector<double>& profile) {
  std::ostringstream os;
  os << "n,P_n(0)\n";
  for (std::size_t n = 0; n < profile.size(); ++n) os << n << ',' << fmt12(profile[n]) << '\n';
  return os.str();
}

}  // namespace hypwalk
