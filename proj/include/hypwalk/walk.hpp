#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypwalk/estimate.hpp"
#include "hypwalk/framing.hpp"
#include "hypwalk/rng.hpp"

namespace hypwalk {

enum class WalkKind { Simple, Directed, Magnetic };
enum class ClosureFilter { None, ProjectionClosed, FullyTrivial };
enum class LengthFunctional { GraphL, BackboneK, B3Lower, B3Upper };

struct WalkConfig {
  Framing framing;
  WalkKind kind = WalkKind::Simple;
  std::int64_t steps = 1;
  std::int64_t samples = 1;
  std::uint64_t seed = 1;
  ClosureFilter closure = ClosureFilter::None;
  unsigned workers = 0;  // 0 = all cores
  double budget = 1e12;  // cap on samples * steps

  void validate() const;
};

inline WalkConfig walk_config(Framing f, WalkKind kind, std::int64_t steps, std::int64_t samples,
                              std::uint64_t seed, unsigned workers = 0) {
  WalkConfig c;
  c.framing = std::move(f);
  c.kind = kind;
  c.steps = steps;
  c.samples = samples;
  c.seed = seed;
  c.workers = workers;
  return c;
}

// Draws the letters of one walk and hands each to push(letter).
// Directed walks never follow a letter by its inverse (for idempotent letters: by itself).
template <class Push>
void drive_walk(const Framing& f, WalkKind kind, std::int64_t steps, SampleRng& rng, const std::vector<int>& moves,
                const std::vector<int>& inverse_index, Push&& push) {
  const auto nm = static_cast<std::uint32_t>(moves.size());
  if (kind != WalkKind::Directed) {
    for (std::int64_t t = 0; t < steps; ++t) push(moves[rng.below(nm)]);
    return;
  }
  (void)f;
  std::uint32_t prev = rng.below(nm);
  push(moves[prev]);
  for (std::int64_t t = 1; t < steps; ++t) {
    std::uint32_t banned = static_cast<std::uint32_t>(inverse_index[prev]);
    std::uint32_t j = rng.below(nm - 1);
    if (j >= banned) ++j;
    push(moves[j]);
    prev = j;
  }
}

// index of inverse_letter(moves[i]) inside moves
std::vector<int> inverse_indices(const Framing& f, const std::vector<int>& moves);

// Sample mean of functional / n with its standard error.
Estimate simulate_drift(const WalkConfig& cfg, LengthFunctional functional);

// Raw functional values (not divided by n), one row per functional, in sample order.
std::vector<std::vector<double>> sample_functionals(const WalkConfig& cfg,
                                                    const std::vector<LengthFunctional>& functionals);

Estimate simulate_directed_walk(const WalkConfig& cfg);

// Time-averaged occupation of H_q vertex types (type i = cell distance i-1 from the
// entry vertex of the current cell), after `burn_in` steps.
std::vector<double> vertex_type_occupation(int q, std::int64_t steps, std::int64_t samples, std::uint64_t seed,
                                           std::int64_t burn_in, unsigned workers = 0);

const char* to_string(LengthFunctional f);
LengthFunctional functional_from_string(const std::string& s);

}  // namespace hypwalk
