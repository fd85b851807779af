#include "hypwalk/flux.hpp"

#include <random>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "hypwalk/normal_form.hpp"
#include "hypwalk/parallel.hpp"

namespace hypwalk {

const char* to_string(FluxBasis b) { return b == FluxBasis::AB ? "ab" : "sigma"; }

std::string FluxResult::histogram_csv() const {
  std::ostringstream os;
  os << "phi_over_h,count\n";
  for (const auto& [k, c] : histogram) os << fmt12(k / 6.0) << ',' << c << '\n';
  return os.str();
}

namespace {

struct FluxAcc {
  FluxResult r;
  void merge(const FluxAcc& o) {
    for (const auto& [k, c] : o.r.histogram) r.histogram[k] += c;
    r.phi.merge(o.r.phi);
    r.variance_per_step.merge(o.r.variance_per_step);
    r.proposals += o.r.proposals;
    r.accepted += o.r.accepted;
  }
};

}  // namespace

FluxResult simulate_flux(const WalkConfig& cfg, FluxBasis basis, bool use_counts) {
  cfg.validate();
  if (cfg.kind == WalkKind::Directed) throw Error(ErrorKind::Config, "flux walks are simple or magnetic");
  const std::int64_t n = cfg.steps;
  const bool filtered = cfg.closure != ClosureFilter::None;
  const bool fast = basis == FluxBasis::AB && !filtered && use_counts;

  FluxAcc acc = run_blocks<FluxAcc>(cfg.samples, cfg.workers, [&](std::int64_t lo, std::int64_t hi) {
    FluxAcc part;
    NormalFormHq nf(3);
    for (std::int64_t i = lo; i < hi; ++i) {
      SampleRng rng(cfg.seed, static_cast<std::uint64_t>(i));
      FluxState fs;
      ++part.r.proposals;
      if (fast) {
        // letter counts: #a-type ~ Bin(n, 1/2), then signs ~ Bin(., 1/2)
        std::binomial_distribution<long> half_n(n, 0.5);
        long na = half_n(rng);
        long nb = n - na;
        std::binomial_distribution<long> sa(na, 0.5), sb(nb, 0.5);
        long da = 2 * sa(rng) - na, db = 2 * sb(rng) - nb;
        fs.phi6 = 3 * da + 2 * db;
      } else {
        nf.clear();
        long lift_e = 0;  // exponent of the B3 lift a2 -> atilde, b3 -> btilde
        for (std::int64_t t = 0; t < n; ++t) {
          std::uint32_t m = rng.below(4);
          int letter = m == 0 ? 1 : m == 1 ? -1 : m == 2 ? 2 : -2;
          if (!filtered) {
            if (basis == FluxBasis::AB)
              fs.add_ab(letter);
            else
              fs.add_sigma(letter);
          } else if (basis == FluxBasis::AB) {
            fs.add_ab(letter);
            if (letter == 1 || letter == -1) {
              nf.push_a();
              lift_e += 3 * letter;
            } else {
              nf.push_b(letter > 0 ? 1 : 2);
              lift_e += letter > 0 ? -2 : 2;
            }
          } else {
            fs.add_sigma(letter);
            push_psl_letter(nf, Alphabet::SigmaBar, letter);
            lift_e += letter > 0 ? 1 : -1;
          }
        }
        if (filtered) {
          if (!nf.empty()) continue;
          if (cfg.closure == ClosureFilter::FullyTrivial && lift_e != 0) continue;
        }
      }
      ++part.r.accepted;
      double phi = fs.phi_over_h();
      part.r.histogram[fs.phi6] += 1;
      part.r.phi.add(phi);
      part.r.variance_per_step.add(phi * phi / static_cast<double>(n));
    }
    return part;
  });
  if (acc.r.accepted == 0)
    throw Error(ErrorKind::InsufficientSamples, "no accepted samples out of " + std::to_string(acc.r.proposals) +
                                                    " proposals (acceptance rate 0)");
  acc.r.phi.seed = cfg.seed;
  acc.r.variance_per_step.seed = cfg.seed;
  return acc.r;
}

}  // namespace hypwalk
