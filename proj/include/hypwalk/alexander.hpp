#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypwalk/framing.hpp"
#include "hypwalk/hyperbolic.hpp"
#include "hypwalk/laurent.hpp"

namespace hypwalk {

// (1 + t + t^2) nabla(t) = det(M - I) = det M + 1 - Tr M, M the Magnus product of w.
// The division is exact for every braid; a remainder raises an internal error.
LaurentPoly alexander_polynomial(const Word& w);

// signed letter count #(+) - #(-)
long exponent_sum_p(const Word& w);

struct AlexanderRecord {
  Word word;
  LaurentPoly nabla;
  long p = 0;
  double trace_log = 0;  // ln Tr(w w^T) of the u-normalized product
  double u = 1;
  std::string to_json() const;  // one JSON-lines record
};
AlexanderRecord alexander_record(const Word& w, double u);

// 1 - u^2 + u^4, the value of 1 + t + t^2 at t = -u^2
double alexander_denominator(double u);

struct AsymptoticAlexander {
  double value = 0;  // (1 - e^{n gamma1/2}) / (1 - u^2 + u^4)
  double gamma1 = 0;
  double gamma1_se = 0;
};
AsymptoticAlexander asymptotic_alexander(double n, double u, const LyapunovResult& gamma);
AsymptoticAlexander asymptotic_alexander(double n, double u, std::int64_t steps, std::int64_t samples,
                                         std::uint64_t seed, unsigned workers = 0);

struct AlexanderSample {
  long p = 0;
  double ln_abs_nabla = 0;  // ln |nabla(u)|, evaluated in log space
  double trace_log = 0;     // ln Tr(w w^T)
};
// Random n-letter sigma braids evaluated at the real point t = -u^2.
std::vector<AlexanderSample> alexander_statistics(std::int64_t n, std::int64_t samples, double u, std::uint64_t seed,
                                                  unsigned workers = 0);

struct AlexanderGrowth {
  std::vector<std::int64_t> n;
  std::vector<double> mean_ln_nabla, mean_trace_log;
  double slope_ln_nabla = 0;   // d<ln|nabla|>/dn
  double half_gamma1 = 0;      // (d<ln Tr>/dn) / 2
};
AlexanderGrowth alexander_growth(const std::vector<std::int64_t>& ns, std::int64_t samples, double u,
                                 std::uint64_t seed, unsigned workers = 0);

std::string alexander_csv(const std::vector<AlexanderSample>& s);

}  // namespace hypwalk
