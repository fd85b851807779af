// hypwalk: command-line front end for the random-walk, spectral, geometric and braid tools.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypwalk/acceptance.hpp"
#include "hypwalk/alexander.hpp"
#include "hypwalk/cayley.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/flux.hpp"
#include "hypwalk/honeycomb.hpp"
#include "hypwalk/hyperbolic.hpp"
#include "hypwalk/return_prob.hpp"
#include "hypwalk/spectral.hpp"
#include "hypwalk/walk.hpp"
#include "json.hpp"

using namespace hypwalk;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Common {
  std::uint64_t seed = 7;
  unsigned workers = 0;
  std::string out;
  std::string manifest;
};

// FNV-1a, enough to detect a changed artifact
std::uint64_t checksum(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// HYPWALK_MAX_MEM accepts bytes with an optional K/M/G suffix.
std::size_t max_mem_bytes() {
  const char* env = std::getenv("HYPWALK_MAX_MEM");
  if (!env || !*env) return 0;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || v <= 0) throw Error(ErrorKind::Config, std::string("bad HYPWALK_MAX_MEM: ") + env);
  switch (*end) {
    case 'k': case 'K': v *= 1024; break;
    case 'm': case 'M': v *= 1024.0 * 1024; break;
    case 'g': case 'G': v *= 1024.0 * 1024 * 1024; break;
    default: break;
  }
  return static_cast<std::size_t>(v);
}

void check_mem(double bytes, const std::string& what) {
  std::size_t cap = max_mem_bytes();
  if (cap && bytes > static_cast<double>(cap))
    throw Error(ErrorKind::ResourceLimit, what + " needs about " + std::to_string(static_cast<long long>(bytes)) +
                                              " bytes, above HYPWALK_MAX_MEM");
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-', 1);
    if (dash != std::string::npos) {
      int a = std::stoi(item.substr(0, dash)), b = std::stoi(item.substr(dash + 1));
      for (int i = a; i <= b; ++i) v.push_back(i);
    } else if (!item.empty()) {
      v.push_back(std::stoi(item));
    }
  }
  if (v.empty()) throw Error(ErrorKind::Config, "empty list: " + s);
  return v;
}

WalkKind kind_from(const std::string& s) {
  if (s == "simple") return WalkKind::Simple;
  if (s == "directed") return WalkKind::Directed;
  if (s == "magnetic") return WalkKind::Magnetic;
  throw Error(ErrorKind::Config, "unknown walk kind: " + s);
}

ClosureFilter closure_from(const std::string& s) {
  if (s == "none") return ClosureFilter::None;
  if (s == "projection-closed" || s == "closed") return ClosureFilter::ProjectionClosed;
  if (s == "fully-trivial" || s == "trivial") return ClosureFilter::FullyTrivial;
  throw Error(ErrorKind::Config, "unknown closure filter: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walks on Hecke groups, PSL(2,Z) and B3"};
  app.require_subcommand(1);
  app.fallthrough();  // common flags may follow the subcommand
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "TOML-style key = value file");
  app.set_version_flag("--version", kVersion);
  Common common;
  app.add_option("--seed", common.seed, "root seed")->capture_default_str();
  app.add_option("--workers", common.workers, "worker threads (0 = all cores)");
  app.add_option("--out", common.out, "write results to this file instead of stdout");
  app.add_option("--manifest", common.manifest, "write a run manifest (JSON) to this file");

  std::string group = "H3", functional = "graph-L", kind = "simple", closure = "none", basis = "ab";
  std::int64_t n = 10000, samples = 10000;
  double u = 1.0;

  auto* drift = app.add_subcommand("drift", "drift <L>/n of a random walk");
  drift->add_option("--group", group, "framing name (H<q>, PSL, ST, B3, F3, F4, ...)")->capture_default_str();
  drift->add_option("--n", n, "steps")->capture_default_str();
  drift->add_option("--samples", samples)->capture_default_str();
  drift->add_option("--functional", functional, "graph-L | backbone-k | b3-lower-bound | b3-upper-bound");
  drift->add_option("--kind", kind, "simple | directed");
  drift->add_option("--u", u, "Magnus parameter for PSLu");

  auto* flux = app.add_subcommand("flux", "flux variance of magnetic walks on PSL(2,Z)");
  bool histogram = false;
  flux->add_option("--basis", basis, "ab | sigma")->capture_default_str();
  flux->add_option("--n", n)->capture_default_str();
  flux->add_option("--samples", samples)->capture_default_str();
  flux->add_option("--closure", closure, "none | projection-closed | fully-trivial");
  flux->add_flag("--histogram", histogram, "emit the Phi/h histogram");

  auto* ret = app.add_subcommand("return-prob", "return probabilities on PSL(2,Z) or B3");
  std::string nlist = "2,4,6,8";
  bool exact = false;
  ret->add_option("--group", group, "PSL | B3");
  ret->add_option("--n", nlist, "comma list or ranges, e.g. 2-16")->capture_default_str();
  ret->add_option("--samples", samples)->capture_default_str();
  ret->add_flag("--exact", exact, "exact values from the master equation (n <= 31)");

  auto* spec = app.add_subcommand("spectral", "transfer-matrix drift and honeycomb profile");
  int q = 3, honey = 0;
  bool sbar = false, gaussian = false;
  spec->add_option("--q", q, "Hecke index 3..64")->capture_default_str();
  spec->add_flag("--sbar", sbar, "two-type sbar system of PSL(2,Z)");
  spec->add_flag("--gaussian", gaussian, "Gaussian generation profile of H3");
  spec->add_option("--honeycomb", honey, "iterate the honeycomb return profile to this n");

  auto* meas = app.add_subcommand("measure", "invariant measure of the direction process");
  int grid = 4096;
  double tol = 1e-8;
  bool summary = false;
  meas->add_option("--group", group)->capture_default_str();
  meas->add_option("--grid", grid)->capture_default_str();
  meas->add_option("--tol", tol)->capture_default_str();
  meas->add_option("--u", u);
  meas->add_flag("--summary", summary, "print the Lyapunov moments instead of the density");

  auto* lyap = app.add_subcommand("lyapunov", "Monte Carlo Lyapunov exponent");
  lyap->add_option("--group", group)->capture_default_str();
  lyap->add_option("--n", n)->capture_default_str();
  lyap->add_option("--samples", samples)->capture_default_str();
  lyap->add_option("--kind", kind);
  lyap->add_option("--u", u);

  auto* tab = app.add_subcommand("table1", "backbone comparison table");
  bool csv = false;
  tab->add_option("--n", n)->capture_default_str();
  tab->add_option("--samples", samples)->capture_default_str();
  tab->add_flag("--csv", csv);

  auto* rel = app.add_subcommand("relation", "length / trace relation on matched samples");
  rel->add_option("--group", group, "F3 | F4 | H3 | PSL");
  rel->add_option("--n", n)->capture_default_str();
  rel->add_option("--samples", samples)->capture_default_str();

  auto* alex = app.add_subcommand("alexander", "Alexander polynomials of closed 3-braids");
  std::string word;
  bool stats = false;
  alex->add_option("--word", word, "JSON letter list, e.g. [1,2,-1]");
  alex->add_option("--n", n, "length of random braids")->capture_default_str();
  alex->add_option("--samples", samples, "number of random braids")->capture_default_str();
  alex->add_option("--u", u, "evaluation point t = -u^2")->capture_default_str();
  alex->add_flag("--stats", stats, "emit (p, ln|nabla(u)|) samples instead of exact records");

  auto* ball = app.add_subcommand("ball", "Cayley ball edge list");
  int radius = 3;
  ball->add_option("--group", group)->capture_default_str();
  ball->add_option("--radius", radius)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  bool quick = false, full = false;
  std::vector<int> only;
  verify->add_flag("--quick", quick, "reduced sample sizes");
  verify->add_flag("--full", full, "full sample sizes (default)");
  verify->add_option("--only", only, "run only these criteria")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code(ErrorKind::Config);
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string output;
  int status = 0;
  try {
    if (*drift) {
      WalkConfig cfg = walk_config(framing_by_name(group, u), kind_from(kind), n, samples, common.seed, common.workers);
      Estimate e = simulate_drift(cfg, functional_from_string(functional));
      output = "group,functional,kind,n,estimate,stderr,samples,seed\n" + group + ',' + functional + ',' + kind + ',' +
               std::to_string(n) + ',' + fmt12(e.mean) + ',' + fmt12(e.standard_error()) + ',' +
               std::to_string(e.count) + ',' + std::to_string(common.seed) + '\n';
    } else if (*flux) {
      WalkConfig cfg = walk_config(sigma_bar_framing(), WalkKind::Magnetic, n, samples, common.seed, common.workers);
      cfg.closure = closure_from(closure);
      if (basis != "ab" && basis != "sigma") throw Error(ErrorKind::Config, "basis must be ab or sigma");
      FluxResult r = simulate_flux(cfg, basis == "ab" ? FluxBasis::AB : FluxBasis::Sigma);
      std::ostringstream os;
      os << "basis,closure,n,variance_per_step,stderr,proposals,accepted,acceptance_rate,seed\n"
         << basis << ',' << closure << ',' << n << ',' << fmt12(r.variance_per_step.mean) << ','
         << fmt12(r.variance_per_step.standard_error()) << ',' << r.proposals << ',' << r.accepted << ','
         << fmt12(r.acceptance_rate()) << ',' << common.seed << '\n';
      if (histogram) os << '\n' << r.histogram_csv();
      output = os.str();
    } else if (*ret) {
      Framing f = group == "B3" ? braid_sigma_framing() : sigma_bar_framing();
      if (group != "B3" && group != "PSL") throw Error(ErrorKind::Config, "return-prob takes --group PSL or B3");
      std::vector<int> ns = parse_list(nlist);
      if (exact) {
        int nmax = 0;
        for (int k : ns) nmax = std::max(nmax, k);
        std::vector<double> p = master_equation_return_profile(f, nmax);
        std::ostringstream os;
        os << "n,exact\n";
        for (int k : ns) os << k << ',' << fmt12(p[k]) << '\n';
        output = os.str();
      } else {
        output = return_prob_csv(estimate_return_probability(f, ns, samples, common.seed, common.workers));
      }
    } else if (*spec) {
      if (honey > 0) {
        check_mem(16.0 * (honey + 2), "honeycomb lattice");
        std::vector<double> p = honeycomb_return_profile(honey);
        output = honeycomb_csv(p);
        if (honey > 100) {
          HoneycombFit fit = fit_honeycomb(p, honey / 4, honey);
          output += "# fit on [" + std::to_string(fit.n_lo) + "," + std::to_string(fit.n_hi) +
                    "]: lambda=" + fmt12(fit.lambda) + " C=" + fmt12(fit.C) + "\n";
        }
      } else if (sbar) {
        Pencil p = sigma_bar_pencil();
        nlohmann::json j = {{"system", "sbar"},
                            {"l_backbone", backbone_drift(p)},
                            {"ds_dx_implicit_imag", root_derivative_implicit(p).imag()},
                            {"ds_dx_fd_imag", root_derivative_fd(p).imag()}};
        output = j.dump() + "\n";
      } else if (gaussian) {
        GaussianProfile g = h3_gaussian_profile();
        nlohmann::json j = {{"mean_per_step", g.mean_per_step}, {"variance_per_step", g.variance_per_step}};
        output = j.dump() + "\n";
      } else {
        output = graph_drift(q).to_json() + "\n";
      }
    } else if (*meas) {
      GeneratorSet g = generators_of(framing_by_name(group, u));
      check_mem(8.0 * grid * (g.size() + 3), "measure grid");
      MeasureResult m = iterate_invariant_measure(g, grid, tol);
      if (!m.converged) {
        std::cerr << "measure did not converge; last L1 changes:";
        for (std::size_t i = m.l1_trajectory.size() > 5 ? m.l1_trajectory.size() - 5 : 0; i < m.l1_trajectory.size();
             ++i)
          std::cerr << ' ' << m.l1_trajectory[i];
        std::cerr << '\n';
        status = exit_code(ErrorKind::NonConvergence);
      }
      output = summary ? lyapunov_from_measure(g, m).to_json() + "\n" : m.mu.to_csv();
    } else if (*lyap) {
      WalkConfig cfg = walk_config(framing_by_name(group, u), kind_from(kind), n, samples, common.seed, common.workers);
      output = lyapunov_mc(cfg).to_json() + "\n";
    } else if (*tab) {
      auto rows = table1(n, samples, common.seed, common.workers);
      output = csv ? table1_csv(rows) : table1_text(rows);
    } else if (*rel) {
      output = check_length_trace_relation(backbone_spec(group), n, samples, common.seed, common.workers).to_json() +
               "\n";
    } else if (*alex) {
      Framing bf = braid_sigma_framing();
      std::ostringstream os;
      if (!word.empty()) {
        os << alexander_record(Word::from_json(bf, word), u).to_json() << '\n';
      } else if (stats) {
        os << alexander_csv(alexander_statistics(n, samples, u, common.seed, common.workers));
      } else {
        const int letters[4] = {1, -1, 2, -2};
        for (std::int64_t i = 0; i < samples; ++i) {
          SampleRng rng(common.seed, static_cast<std::uint64_t>(i));
          std::vector<int> l(static_cast<std::size_t>(n));
          for (int& x : l) x = letters[rng.below(4)];
          os << alexander_record(Word(bf, l), u).to_json() << '\n';
        }
      }
      output = os.str();
    } else if (*ball) {
      Framing f = framing_by_name(group);
      std::size_t cap = max_mem_bytes();
      CayleyBall b = cayley_ball(f, radius, kDefaultMaxRadius, cap ? std::max<std::size_t>(cap / 256, 1) : 20'000'000);
      output = b.to_csv();
    } else if (*verify) {
      if (quick && full) throw Error(ErrorKind::Config, "--quick and --full exclude each other");
      AcceptanceOptions opt;
      opt.quick = quick;
      opt.workers = common.workers;
      opt.seed = common.seed;
      std::vector<int> ids = only;
      if (ids.empty())
        for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
      int failed = 0;
      std::ostringstream os;
      for (int id : ids) {
        CriterionResult r = run_criterion(id, opt);
        std::cout << r.line() << std::endl;
        os << r.line() << '\n';
        failed += !r.pass;
      }
      std::cout << (ids.size() - failed) << " of " << ids.size() << " criteria passed" << std::endl;
      if (failed) status = 1;
      if (!common.out.empty()) output = os.str();
    }
  } catch (const Error& e) {
    std::cerr << "hypwalk: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "hypwalk: " << e.what() << '\n';
    return exit_code(ErrorKind::Config);
  }

  if (common.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f) {
      std::cerr << "hypwalk: cannot write " << common.out << '\n';
      return exit_code(ErrorKind::Config);
    }
    f << output;
  }
  if (!common.manifest.empty()) {
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CLI::App* sub = app.get_subcommands().front();
    // only the running subcommand, so the snapshot can be fed back through --config
    std::string cfg = app.config_to_str(true, false), snapshot;
    std::istringstream lines(cfg);
    for (std::string line; std::getline(lines, line);) {
      auto dot = line.find('.'), eq = line.find('=');
      if (dot == std::string::npos || dot > eq || line.compare(0, dot, sub->get_name()) == 0) snapshot += line + '\n';
    }
    nlohmann::json m = {{"subcommand", sub->get_name()},
                        {"config", snapshot},
                        {"argv", std::vector<std::string>(argv, argv + argc)},
                        {"seed", common.seed},
                        {"version", kVersion},
                        {"wall_time_s", wall},
                        {"output_checksum_fnv1a", checksum(output)}};
    std::ofstream f(common.manifest);
    f << m.dump(2) << '\n';
  }
  return status;
}
