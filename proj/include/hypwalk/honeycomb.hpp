#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hypwalk {

// Return profile P_n(0), n = 0..n_max, of the generation chain on the honeycomb backbone:
//   P_{n+1}(k) = 1/4 P_n(k+1) + 1/4 P_n(k) + 1/2 P_n(k-1)   for k >= 2,
//   P_{n+1}(1) = 1/2 P_n(0) + 1/4 P_n(2),
//   P_{n+1}(0) = 1/2 (P_n(0) + P_n(1)).
// The lattice holds generations 0..lattice-1; lattice = 0 picks n_max + 2, which the
// walk cannot outrun.  Mass reaching the last site raises a lattice-edge error.
std::vector<double> honeycomb_return_profile(int n_max, int lattice = 0);
std::vector<mpq_class> honeycomb_return_profile_exact(int n_max);

// Total mass after each step (conservation diagnostic).
double honeycomb_mass_drift(int n_max);

struct HoneycombFit {
  double lambda = 0;
  double C = 0;
  int n_lo = 0, n_hi = 0;
};
// Least-squares fit of ln P_n(0) + 1.5 ln n = ln C + n ln lambda over n in [n_lo, n_hi].
HoneycombFit fit_honeycomb(const std::vector<double>& profile, int n_lo, int n_hi);

std::string honeycomb_csv(const std::vector<double>& profile);

}  // namespace hypwalk
