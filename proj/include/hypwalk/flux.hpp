#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hypwalk/estimate.hpp"
#include "hypwalk/walk.hpp"

namespace hypwalk {

enum class FluxBasis { AB, Sigma };

// Flux accumulated in units of h/6, so every increment is an exact integer:
// a2^{+-1} -> +-3, b3^{+-1} -> +-2 in the ab basis; sbar^{+-1} -> +-1 in the sigma basis.
struct FluxState {
  long phi6 = 0;
  void add_ab(int letter) { phi6 += letter == 1 ? 3 : letter == -1 ? -3 : letter == 2 ? 2 : -2; }
  void add_sigma(int letter) { phi6 += letter > 0 ? 1 : -1; }
  double phi_over_h() const { return static_cast<double>(phi6) / 6.0; }
};

struct FluxResult {
  std::map<long, std::int64_t> histogram;  // key: 6 * Phi/h
  Estimate phi;                            // Phi/h
  Estimate variance_per_step;              // (Phi/h)^2 / n; the mean is zero by symmetry
  std::int64_t proposals = 0;
  std::int64_t accepted = 0;
  double acceptance_rate() const { return proposals ? static_cast<double>(accepted) / proposals : 0.0; }
  std::string histogram_csv() const;
};

// ab basis walks use letters {a2 = 1, a2^-1 = -1, b3 = 2, b3^-1 = -2}, all four distinct;
// sigma basis walks use the sbar letters.  Unfiltered ab walks are drawn through letter
// counts when use_counts is set, since the flux only depends on the counts.
FluxResult simulate_flux(const WalkConfig& cfg, FluxBasis basis, bool use_counts = true);

const char* to_string(FluxBasis b);

}  // namespace hypwalk
