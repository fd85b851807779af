#include "hypwalk/walk.hpp"

#include <algorithm>
#include <string>

#include "hypwalk/b3.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/normal_form.hpp"
#include "hypwalk/parallel.hpp"
#include "hypwalk/sigma_length.hpp"

namespace hypwalk {

const char* to_string(LengthFunctional f) {
  switch (f) {
    case LengthFunctional::GraphL: return "graph-L";
    case LengthFunctional::BackboneK: return "backbone-k";
    case LengthFunctional::B3Lower: return "b3-lower-bound";
    case LengthFunctional::B3Upper: return "b3-upper-bound";
  }
  return "?";
}

LengthFunctional functional_from_string(const std::string& s) {
  if (s == "graph-L" || s == "L") return LengthFunctional::GraphL;
  if (s == "backbone-k" || s == "k") return LengthFunctional::BackboneK;
  if (s == "b3-lower-bound" || s == "lower") return LengthFunctional::B3Lower;
  if (s == "b3-upper-bound" || s == "upper") return LengthFunctional::B3Upper;
  throw Error(ErrorKind::Config, "unknown length functional: " + s);
}

void WalkConfig::validate() const {
  if (steps < 1) throw Error(ErrorKind::Config, "steps must be >= 1");
  if (samples < 1) throw Error(ErrorKind::Config, "samples must be >= 1");
  if (static_cast<double>(steps) * static_cast<double>(samples) > budget)
    throw Error(ErrorKind::ResourceLimit, "samples * steps exceeds the configured budget");
  if (kind == WalkKind::Directed && framing.n_moves() < 3)
    throw Error(ErrorKind::Config, "directed walks need at least 2 moves per step");
}

std::vector<int> inverse_indices(const Framing& f, const std::vector<int>& moves) {
  std::vector<int> inv(moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) {
    int target = f.inverse_letter(moves[i]);
    auto it = std::find(moves.begin(), moves.end(), target);
    if (it == moves.end()) throw Error(ErrorKind::Internal, "framing moves are not closed under inverse");
    inv[i] = static_cast<int>(it - moves.begin());
  }
  return inv;
}

namespace {

enum class StateKind { Psl, Braid, Free };

StateKind state_kind(const Framing& f) {
  if (f.is_psl_like()) return StateKind::Psl;
  if (f.is_braid()) return StateKind::Braid;
  return StateKind::Free;
}

void check_functional(const Framing& f, LengthFunctional fn) {
  StateKind k = state_kind(f);
  bool ok = false;
  switch (fn) {
    case LengthFunctional::GraphL:
      ok = k == StateKind::Free || f.alphabet == Alphabet::HeckeAB || f.alphabet == Alphabet::SigmaBar ||
           f.alphabet == Alphabet::MagnusU;
      break;
    case LengthFunctional::BackboneK: ok = k != StateKind::Free; break;
    case LengthFunctional::B3Lower:
    case LengthFunctional::B3Upper: ok = k == StateKind::Braid; break;
  }
  if (!ok)
    throw Error(ErrorKind::Config,
                std::string("functional ") + to_string(fn) + " is not available for framing " + f.name());
}

// Evaluates every requested functional on one walk.
class Evaluator {
 public:
  explicit Evaluator(const WalkConfig& cfg)
      : cfg_(cfg),
        moves_(cfg.framing.moves()),
        inv_(inverse_indices(cfg.framing, moves_)),
        kind_(state_kind(cfg.framing)),
        nf_(cfg.framing.alphabet == Alphabet::HeckeAB ? cfg.framing.q : 3),
        free_(cfg.framing.alphabet == Alphabet::Idempotent) {}

  void run(std::int64_t index, const std::vector<LengthFunctional>& fns, double* out) {
    SampleRng rng(cfg_.seed, static_cast<std::uint64_t>(index));
    const Framing& f = cfg_.framing;
    switch (kind_) {
      case StateKind::Psl: {
        nf_.clear();
        Alphabet al = f.alphabet;
        drive_walk(f, cfg_.kind, cfg_.steps, rng, moves_, inv_, [&](int l) { push_psl_letter(nf_, al, l); });
        for (std::size_t i = 0; i < fns.size(); ++i) {
          if (fns[i] == LengthFunctional::BackboneK)
            out[i] = nf_.a_count();
          else
            out[i] = irreducible_length(nf_, al);
        }
        break;
      }
      case StateKind::Braid: {
        b3_.clear();
        Alphabet al = f.alphabet;
        drive_walk(f, cfg_.kind, cfg_.steps, rng, moves_, inv_, [&](int l) { b3_.push(al, l); });
        bool have = false;
        B3LengthBounds bounds;
        for (std::size_t i = 0; i < fns.size(); ++i) {
          if (fns[i] == LengthFunctional::BackboneK) {
            out[i] = b3_.projection.a_count();
            continue;
          }
          if (!have) {
            bounds = b3_length_bounds(b3_.projection, b3_.e);
            have = true;
          }
          out[i] = fns[i] == LengthFunctional::B3Lower ? bounds.lower : bounds.upper;
        }
        break;
      }
      case StateKind::Free: {
        free_.clear();
        drive_walk(f, cfg_.kind, cfg_.steps, rng, moves_, inv_, [&](int l) { free_.push(l); });
        for (std::size_t i = 0; i < fns.size(); ++i) out[i] = free_.length();
        break;
      }
    }
  }

 private:
  const WalkConfig& cfg_;
  std::vector<int> moves_;
  std::vector<int> inv_;
  StateKind kind_;
  NormalFormHq nf_;
  B3State b3_;
  FreeNormalForm free_;
};

}  // namespace

Estimate simulate_drift(const WalkConfig& cfg, LengthFunctional functional) {
  cfg.validate();
  if (cfg.closure != ClosureFilter::None) throw Error(ErrorKind::Config, "drift runs take no closure filter");
  check_functional(cfg.framing, functional);
  const std::vector<LengthFunctional> fns{functional};
  const double n = static_cast<double>(cfg.steps);
  Estimate e = run_blocks<Estimate>(cfg.samples, cfg.workers, [&](std::int64_t lo, std::int64_t hi) {
    Evaluator ev(cfg);
    Estimate part;
    double v;
    for (std::int64_t i = lo; i < hi; ++i) {
      ev.run(i, fns, &v);
      part.add(v / n);
    }
    return part;
  });
  e.seed = cfg.seed;
  return e;
}

std::vector<std::vector<double>> sample_functionals(const WalkConfig& cfg,
                                                    const std::vector<LengthFunctional>& functionals) {
  cfg.validate();
  for (auto f : functionals) check_functional(cfg.framing, f);
  const std::size_t k = functionals.size();
  auto all = run_blocks<Collected<double>>(cfg.samples, cfg.workers, [&](std::int64_t lo, std::int64_t hi) {
    Evaluator ev(cfg);
    Collected<double> part;
    part.values.resize(static_cast<std::size_t>(hi - lo) * k);
    for (std::int64_t i = lo; i < hi; ++i) ev.run(i, functionals, part.values.data() + (i - lo) * k);
    return part;
  });
  std::vector<std::vector<double>> out(k, std::vector<double>(static_cast<std::size_t>(cfg.samples)));
  for (std::size_t s = 0; s < static_cast<std::size_t>(cfg.samples); ++s)
    for (std::size_t j = 0; j < k; ++j) out[j][s] = all.values[s * k + j];
  return out;
}

Estimate simulate_directed_walk(const WalkConfig& cfg) {
  if (cfg.kind != WalkKind::Directed) throw Error(ErrorKind::Config, "simulate_directed_walk needs walk_kind = directed");
  return simulate_drift(cfg, LengthFunctional::GraphL);
}

namespace {
struct Occupation {
  std::vector<double> counts;
  void merge(const Occupation& o) {
    if (counts.size() < o.counts.size()) counts.resize(o.counts.size(), 0.0);
    for (std::size_t i = 0; i < o.counts.size(); ++i) counts[i] += o.counts[i];
  }
};
}  // namespace

std::vector<double> vertex_type_occupation(int q, std::int64_t steps, std::int64_t samples, std::uint64_t seed,
                                           std::int64_t burn_in, unsigned workers) {
  Framing f = hecke_framing(q);
  const int nq = q / 2 + 1;
  auto occ = run_blocks<Occupation>(samples, workers, [&](std::int64_t lo, std::int64_t hi) {
    Occupation part;
    part.counts.assign(nq, 0.0);
    NormalFormHq nf(q);
    for (std::int64_t i = lo; i < hi; ++i) {
      SampleRng rng(seed, static_cast<std::uint64_t>(i));
      nf.clear();
      for (std::int64_t t = 0; t < steps; ++t) {
        std::uint32_t m = rng.below(3);
        if (m == 0)
          nf.push_a();
        else
          nf.push_b(m == 1 ? 1 : q - 1);
        if (t >= burn_in) {
          int top = nf.top();
          int type = top <= 0 ? 0 : std::min(top, q - top);
          part.counts[type] += 1.0;
        }
      }
    }
    return part;
  });
  double total = 0;
  for (double c : occ.counts) total += c;
  for (double& c : occ.counts) c /= total;
  return occ.counts;
}

}  // namespace hypwalk
