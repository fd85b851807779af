#include "hypwalk/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <numbers>

#include "hypwalk/alexander.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/flux.hpp"
#include "hypwalk/honeycomb.hpp"
#include "hypwalk/hyperbolic.hpp"
#include "hypwalk/return_prob.hpp"
#include "hypwalk/spectral.hpp"
#include "hypwalk/walk.hpp"

namespace hypwalk {

namespace {

using Clock = std::chrono::steady_clock;

const double kLambda = (2 * std::numbers::sqrt2 + 1) / 4;
const double kC = (9 + 4 * std::numbers::sqrt2) / (7 * std::numbers::pi);

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Ctx {
  const AcceptanceOptions& opt;
  std::int64_t size(std::int64_t full, std::int64_t quick) const { return opt.quick ? quick : full; }
  WalkConfig cfg(const Framing& f, std::int64_t n, std::int64_t samples, std::uint64_t stream = 0,
                 WalkKind kind = WalkKind::Simple) const {
    return walk_config(f, kind, n, samples, stream ? mix_seed(opt.seed, stream) : opt.seed, opt.workers);
  }
};

void c1(const Ctx& c, CriterionResult& r) {
  auto t0 = Clock::now();
  Estimate e = simulate_drift(c.cfg(hecke_framing(3), 10000, c.size(10000, 2000)), LengthFunctional::GraphL);
  double secs = seconds_since(t0);
  const double target = 2.0 / 15.0;
  double diff = e.mean - target, z = std::abs(diff) / e.standard_error();
  bool mc = z <= 3 && std::abs(diff) <= 0.004;
  DriftResult d = graph_drift(3);
  bool an = std::abs(d.graph_drift - target) < 1e-8;
  bool fast = secs < 60;
  r.pass = mc && an && fast;
  r.detail = fmt("MC <L>/n = %.6f +- %.6f (%.2f SE from 2/15) %s; analytic l_3 = %.12f %s; MC time %.1fs %s", e.mean,
                 e.standard_error(), z, mark(mc), d.graph_drift, mark(an), secs, mark(fast));
}

void c2(const Ctx& c, CriterionResult& r) {
  Estimate e = simulate_drift(c.cfg(sigma_bar_framing(), 10000, c.size(10000, 2000)), LengthFunctional::GraphL);
  bool mc = std::abs(e.mean - 0.25) <= 0.004;
  Pencil p = sigma_bar_pencil();
  double worst = std::abs(root_derivative_implicit(p) - cplx(0, -0.25));
  for (double x : {1e-3, 1e-2, 0.1, 0.3}) {
    cplx ex = std::exp(cplx(0, x));
    cplx closed = 4.0 / (1.0 / ex + 2.0 * ex + 1.0);
    worst = std::max(worst, std::abs(smallest_root(p, x) - closed));
  }
  bool cf = worst < 1e-9;
  r.pass = mc && cf;
  r.detail = fmt("MC <L>/n = %.6f +- %.6f %s; |s_-(x) - 4/(e^-ix + 2e^ix + 1)| and |ds/dx + i/4| <= %.2e %s", e.mean,
                 e.standard_error(), mark(mc), worst, mark(cf));
}

void c3(const Ctx& c, CriterionResult& r) {
  Estimate f3 = simulate_drift(c.cfg(idempotent_framing(3), 10000, c.size(2000, 500)), LengthFunctional::GraphL);
  Estimate f4 = simulate_drift(c.cfg(free_framing(2), 10000, c.size(2000, 500), 1), LengthFunctional::GraphL);
  bool a = std::abs(f3.mean - 1.0 / 3.0) <= 0.004, b = std::abs(f4.mean - 0.5) <= 0.004;
  r.pass = a && b;
  r.detail = fmt("F3 idempotent %.6f +- %.6f %s; {h1,h2,h1^-1,h2^-1} %.6f +- %.6f %s", f3.mean, f3.standard_error(),
                 mark(a), f4.mean, f4.standard_error(), mark(b));
}

void c4(const Ctx& c, CriterionResult& r) {
  const std::vector<std::int64_t> ns = {625, 2500, 10000};
  std::vector<double> lx, ly;
  double lo = 0, hi = 0;
  std::string gaps;
  for (std::int64_t n : ns) {
    auto v = sample_functionals(c.cfg(braid_sigma_framing(), n, c.size(2000, 400), static_cast<std::uint64_t>(n)),
                                {LengthFunctional::B3Lower, LengthFunctional::B3Upper});
    double ml = 0, mu = 0;
    for (std::size_t i = 0; i < v[0].size(); ++i) {
      ml += v[0][i];
      mu += v[1][i];
    }
    ml /= static_cast<double>(v[0].size() * n);
    mu /= static_cast<double>(v[0].size() * n);
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(mu - ml));
    gaps += fmt(" %lld:%.5f", static_cast<long long>(n), mu - ml);
    lo = ml;
    hi = mu;
  }
  double mx = (lx[0] + lx[1] + lx[2]) / 3, my = (ly[0] + ly[1] + ly[2]) / 3, sxy = 0, sxx = 0;
  for (int i = 0; i < 3; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  double slope = sxy / sxx;
  bool bl = std::abs(lo - 0.25) <= 0.005, bu = std::abs(hi - 0.25) <= 0.005, bs = std::abs(slope + 0.5) <= 0.1;
  r.pass = bl && bu && bs;
  r.detail = fmt("n=1e4 lower %.5f %s, upper %.5f %s; gap/n at n =%s; log-log slope %.3f %s", lo, mark(bl), hi,
                 mark(bu), gaps.c_str(), slope, mark(bs));
}

void c5(const Ctx& c, CriterionResult& r) {
  const double n = 10000;
  auto v = sample_functionals(c.cfg(hecke_framing(3), 10000, c.size(40000, 5000), 5), {LengthFunctional::BackboneK})[0];
  Estimate e;
  for (double k : v) e.add(k);
  GaussianProfile g = h3_gaussian_profile();
  double rm = e.mean / (n / 15) - 1, rv = e.variance() / (214 * n / 1125) - 1;
  bool bm = std::abs(rm) <= 0.01, bv = std::abs(rv) <= 0.03;
  r.pass = bm && bv;
  r.detail = fmt("k mean %.2f vs n/15 = %.2f (%+.2f%%) %s; variance %.1f vs 214n/1125 = %.1f (%+.2f%%) %s; root "
                 "expansion gives %.9f n, %.9f n",
                 e.mean, n / 15, 100 * rm, mark(bm), e.variance(), 214 * n / 1125, 100 * rv, mark(bv), g.mean_per_step,
                 g.variance_per_step);
}

void c6(const Ctx& c, CriterionResult& r) {
  FluxResult ab = simulate_flux(c.cfg(sigma_bar_framing(), 100000, c.size(1000000, 100000), 6), FluxBasis::AB);
  double vab = ab.variance_per_step.mean / (13.0 / 72.0) - 1;
  // sigma increments are +-1/6 with equal weight
  mpq_class inc(1, 6);
  mpq_class exact = (inc * inc + inc * inc) / 2;
  bool bex = exact == mpq_class(1, 36);
  FluxResult sg = simulate_flux(c.cfg(sigma_bar_framing(), 1000, c.size(200000, 40000), 7), FluxBasis::Sigma);
  double vsg = sg.variance_per_step.mean / (1.0 / 36.0) - 1;
  WalkConfig closed = c.cfg(sigma_bar_framing(), 24, c.size(2000000, 400000), 8);
  closed.closure = ClosureFilter::ProjectionClosed;
  FluxResult cl = simulate_flux(closed, FluxBasis::AB);
  double vcl = cl.variance_per_step.mean / (13.0 / 72.0) - 1;
  bool b1 = std::abs(vab) <= 0.01, b2 = std::abs(vsg) <= 0.01, b3 = std::abs(vcl) <= 0.05;
  r.pass = b1 && bex && b2 && b3;
  r.detail = fmt("ab n=1e5 var/n %.6f (%+.2f%%) %s; sigma exact %s %s, MC %.6f (%+.2f%%) %s; closed ab n=24 %.6f "
                 "(%+.2f%%, %lld accepted) %s",
                 ab.variance_per_step.mean, 100 * vab, mark(b1), exact.get_str().c_str(), mark(bex),
                 sg.variance_per_step.mean, 100 * vsg, mark(b2), cl.variance_per_step.mean, 100 * vcl,
                 static_cast<long long>(cl.accepted), mark(b3));
}

void c7(const Ctx& c, CriterionResult& r) {
  HoneycombFit fit = fit_honeycomb(honeycomb_return_profile(2000), 500, 2000);
  bool bl = std::abs(fit.lambda - kLambda) <= 1e-3, bc = std::abs(fit.C / kC - 1) <= 0.05;
  Framing f = sigma_bar_framing();
  std::vector<int> ns;
  for (int n = 1; n <= 16; ++n) ns.push_back(n);
  auto rows = estimate_return_probability(f, ns, c.size(1000000, 100000), c.opt.seed, c.opt.workers);
  std::vector<double> exact = master_equation_return_profile(f, 16);
  double worst = 0;
  bool bmc = true;
  for (const auto& row : rows) {
    double p = exact[row.n];
    if (row.n <= 8) {
      double ex = exhaustive_return_probability(f, row.n);
      if (std::abs(ex - p) > 1e-15) bmc = false;
    }
    if (p == 0) {
      if (row.hits != 0) bmc = false;
      continue;
    }
    double z = std::abs(row.p - p) / std::sqrt(p * (1 - p) / static_cast<double>(row.samples));
    worst = std::max(worst, z);
  }
  bmc = bmc && worst <= 3.5;
  r.pass = bl && bc && bmc;
  r.detail = fmt("honeycomb fit on [500,2000]: lambda %.6f (target %.6f) %s, C %.4f (target %.4f) %s; MC n<=16 vs "
                 "exact master equation (exhaustive n<=8): max |z| %.2f %s",
                 fit.lambda, kLambda, mark(bl), fit.C, kC, mark(bc), worst, mark(bmc));
}

void c8(const Ctx& c, CriterionResult& r) {
  std::vector<int> ns;
  for (int n = 12; n <= 24; n += 2) ns.push_back(n);
  auto rows = estimate_return_probability(braid_sigma_framing(), ns, c.size(2000000, 200000), c.opt.seed,
                                          c.opt.workers);
  const double pref = kC / ((1.0 / 6.0) * std::sqrt(2 * std::numbers::pi));
  double worst_ratio = 1;
  bool within = true;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::string ratios;
  for (const auto& row : rows) {
    double pred = pref * std::pow(kLambda, row.n) / (static_cast<double>(row.n) * row.n);
    double q = row.p / pred;
    ratios += fmt(" %d:%.2f", row.n, q);
    if (!(q >= 0.5 && q <= 2)) within = false;
    if (std::abs(std::log(q)) > std::abs(std::log(worst_ratio))) worst_ratio = q;
    double x = row.n, y = std::log(row.p) + 2 * std::log(static_cast<double>(row.n));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(rows.size());
  double lam = std::exp((m * sxy - sx * sy) / (m * sxx - sx * sx));
  bool bl = std::abs(lam - kLambda) <= 0.01;
  r.pass = within && bl;
  r.detail = fmt("MC/formula ratio at n =%s %s; fitted lambda %.5f (target %.5f) %s", ratios.c_str(), mark(within),
                 lam, kLambda, mark(bl));
}

void c9(const Ctx& c, CriterionResult& r) {
  Framing st = modular_st_framing();
  double d0 = hyperbolic_distance_of_word(Word(st, {}));
  double dt = hyperbolic_distance_of_word(Word(st, {2}));
  bool b0 = d0 == 0, bt = std::abs(dt - std::acosh(1.5)) <= 1e-12;
  double worst = 0;
  const std::vector<int> moves = st.moves();
  const std::int64_t words = c.size(10000, 10000);
  for (std::int64_t i = 0; i < words; ++i) {
    SampleRng rng(mix_seed(c.opt.seed, 9), static_cast<std::uint64_t>(i));
    std::vector<int> l(1 + rng.below(50));
    for (int& x : l) x = moves[rng.below(static_cast<std::uint32_t>(moves.size()))];
    Matrix2d m = matrix_of_word(Word(st, l));
    double a = hyperbolic_distance_of_word(m);
    double b = point_pair_distance(Point(0, 1), mobius_apply(m, Point(0, 1)));
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, a));
  }
  bool bw = worst <= 1e-9;
  r.pass = b0 && bt && bw;
  r.detail = fmt("d(I) = %g %s; d(T) - arccosh(3/2) = %.2e %s; trace vs point-pair on %lld words: max rel. gap %.2e %s",
                 d0, mark(b0), dt - std::acosh(1.5), mark(bt), static_cast<long long>(words), worst, mark(bw));
}

void c10(const Ctx& c, CriterionResult& r) {
  auto t0 = Clock::now();
  auto rows = table1(10000, c.size(2000, 400), mix_seed(c.opt.seed, 10), c.opt.workers);
  double secs = seconds_since(t0);
  const std::map<std::string, std::pair<double, double>> tol = {
      {"F3", {0.333, 0.005}}, {"F4", {0.50, 0.01}}, {"H3", {0.133, 0.005}}, {"PSL", {0.250, 0.005}}};
  r.pass = secs < 1200;
  std::string parts;
  for (const auto& row : rows) {
    auto [t, w] = tol.at(row.name);
    bool bt = std::abs(row.ratio - t) <= w;
    bool bg = std::abs(row.ratio - row.graph_drift) <= 3 * row.ratio_se;
    r.pass = r.pass && bt && bg;
    parts += fmt(" %s %.4f+-%.4f (graph %.4f) %s;", row.name.c_str(), row.ratio, row.ratio_se, row.graph_drift,
                 mark(bt && bg));
  }
  r.detail = fmt("s_f g^s/g^d:%s time %.1fs %s", parts.c_str(), secs, mark(secs < 1200));
}

void c11(const Ctx& c, CriterionResult& r) {
  GeneratorSet g = generators_of(free_framing(2));
  MeasureResult mu = iterate_invariant_measure(g, 4096, 1e-8);
  LyapunovResult lm = lyapunov_from_measure(g, mu);
  auto hist = angle_histogram_mc(g, c.size(10000000, 2000000), 128, mix_seed(c.opt.seed, 11));
  double l1 = l1_distance(hist, mu.mu.coarsen(128));
  LyapunovResult mc = lyapunov_mc(c.cfg(free_framing(2), 10000, c.size(1000, 200), 11));
  double rel = lm.gamma1 / mc.gamma1 - 1;
  bool b1 = l1 < 0.05, b2 = std::abs(rel) <= 0.01;
  r.pass = b1 && b2;
  r.detail = fmt("{h1,h2,h1^-1,h2^-1}: measure converged in %d sweeps; L1 to MC theta-histogram (128 bins) %.4f %s; "
                 "gamma1 measure %.6f vs MC %.6f +- %.6f (%+.3f%%) %s",
                 mu.sweeps, l1, mark(b1), lm.gamma1, mc.gamma1, mc.standard_error, 100 * rel, mark(b2));
}

void c12(const Ctx& c, CriterionResult& r) {
  Framing bf = braid_sigma_framing();
  const std::int64_t braids = c.size(10000, 2000);
  std::int64_t failures = 0;
  for (std::int64_t i = 0; i < braids; ++i) {
    SampleRng rng(mix_seed(c.opt.seed, 12), static_cast<std::uint64_t>(i));
    std::vector<int> l(1 + rng.below(40));
    const int letters[4] = {1, -1, 2, -2};
    for (int& x : l) x = letters[rng.below(4)];
    try {
      alexander_polynomial(Word(bf, l));
    } catch (const Error&) {
      ++failures;
    }
  }
  LaurentPoly full = alexander_polynomial(Word(bf, {1, 2, 1, 2, 1, 2}));
  LaurentPoly expect = LaurentPoly::from_coeffs(0, {1, -2, 1}) * LaurentPoly::from_coeffs(0, {1, 1, 1});
  bool bd = failures == 0, bf2 = full == expect;
  const double u = 1.2;
  AlexanderGrowth gr = alexander_growth({100, 200, 400, 800}, c.size(4000, 1000), u, mix_seed(c.opt.seed, 13),
                                        c.opt.workers);
  Framing fu = bf;
  fu.u = u;
  LyapunovResult ly = lyapunov_mc(c.cfg(fu, 10000, c.size(500, 100), 14));
  double rel = gr.slope_ln_nabla / (ly.gamma1 / 2) - 1;
  bool bs = std::abs(rel) <= 0.05;
  r.pass = bd && bf2 && bs;
  r.detail = fmt("%lld random braids, %lld division failures %s; nabla((s1 s2)^3) = %s %s; u=1.2 slope of <ln|nabla|> "
                 "%.5f vs gamma1/2 %.5f (%+.2f%%) %s",
                 static_cast<long long>(braids), static_cast<long long>(failures), mark(bd), full.to_string().c_str(),
                 mark(bf2), gr.slope_ln_nabla, ly.gamma1 / 2, 100 * rel, mark(bs));
}

struct Entry {
  const char* title;
  void (*run)(const Ctx&, CriterionResult&);
};

const Entry kEntries[kCriteria] = {
    {"drift H3 word metric", c1},
    {"drift PSL(2,Z) sbar framing", c2},
    {"drift free groups", c3},
    {"B3 drift bounds", c4},
    {"H3 Gaussian generation profile", c5},
    {"flux variances", c6},
    {"return probability PSL(2,Z)", c7},
    {"return probability B3", c8},
    {"hyperbolic distance", c9},
    {"backbone table (s_f g^s/g^d)", c10},
    {"invariant measure", c11},
    {"Alexander polynomial", c12},
};

}  // namespace

std::string CriterionResult::line() const {
  return fmt("%s %2d %s: %s [%.1fs]", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(), seconds);
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriteria) throw Error(ErrorKind::Config, "criterion id must lie in 1..12");
  CriterionResult r;
  r.id = id;
  r.title = kEntries[id - 1].title;
  Ctx ctx{opt};
  auto t0 = Clock::now();
  try {
    kEntries[id - 1].run(ctx, r);
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string("error (") + to_string(e.kind()) + "): " + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run_criterion(id, opt));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace hypwalk
