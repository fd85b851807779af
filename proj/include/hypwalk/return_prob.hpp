#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypwalk/framing.hpp"

namespace hypwalk {

struct ReturnProbRow {
  int n = 0;
  std::int64_t samples = 0;
  std::int64_t hits = 0;
  double p = 0;
  double standard_error = 0;
  double wilson_lo = 0;
  double wilson_hi = 0;
  std::uint64_t seed = 0;
  bool exact_zero = false;  // odd n on B3, not sampled
};

// Monte Carlo return probability for the sbar framing of PSL(2,Z) or the sigma framing of B3.
std::vector<ReturnProbRow> estimate_return_probability(const Framing& f, const std::vector<int>& n_list,
                                                       std::int64_t samples, std::uint64_t seed,
                                                       unsigned workers = 0);

// Exact probability by enumerating all n_g^n words.
double exhaustive_return_probability(const Framing& f, int n);

// Exact return probabilities p(0..n_max) by iterating the master equation on group
// elements, dropping elements that cannot come back in the remaining steps.
std::vector<double> master_equation_return_profile(const Framing& f, int n_max);

std::string return_prob_csv(const std::vector<ReturnProbRow>& rows);

}  // namespace hypwalk
