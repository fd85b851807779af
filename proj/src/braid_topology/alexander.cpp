#include "hypwalk/alexander.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypwalk/b3.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/matrix2.hpp"
#include "hypwalk/parallel.hpp"
#include "hypwalk/rng.hpp"

namespace hypwalk {

namespace {

void require_sigma(const Word& w) {
  if (w.framing().alphabet != Alphabet::BraidSigma)
    throw Error(ErrorKind::Config, "Alexander polynomials take sigma-letter braid words");
}

Framing framing_at(double u) {
  if (!(u > 0)) throw Error(ErrorKind::Config, "u must be positive");
  Framing f = braid_sigma_framing();
  f.u = u;
  return f;
}

double slope(const std::vector<std::int64_t>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += static_cast<double>(x[i]);
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (static_cast<double>(x[i]) - mx) * (y[i] - my);
    sxx += (static_cast<double>(x[i]) - mx) * (static_cast<double>(x[i]) - mx);
  }
  return sxy / sxx;
}

double frob2(const Matrix2d& w) { return w.a * w.a + w.b * w.b + w.c * w.c + w.d * w.d; }

}  // namespace

LaurentPoly alexander_polynomial(const Word& w) {
  require_sigma(w);
  Matrix2L m = matrix_of_word_laurent(w);
  LaurentPoly num = m.det() + LaurentPoly(1) - m.trace();
  auto q = num.divide_exact(LaurentPoly::from_coeffs(0, {1, 1, 1}));
  if (!q) throw Error(ErrorKind::Internal, "1 + t + t^2 does not divide det(M - I); representation bug");
  return *q;
}

long exponent_sum_p(const Word& w) {
  if (!w.framing().is_braid()) throw Error(ErrorKind::Config, "exponent sum needs a braid word");
  return exponent_sum(w);
}

double alexander_denominator(double u) {
  double d = 1 - u * u + u * u * u * u;
  if (std::abs(d) < 1e-12) throw Error(ErrorKind::Pole, "u is a root of 1 - u^2 + u^4");
  return d;
}

AlexanderRecord alexander_record(const Word& w, double u) {
  AlexanderRecord r{w, alexander_polynomial(w), exponent_sum_p(w), 0.0, u};
  r.trace_log = std::log(frob2(matrix_of_word(Word(framing_at(u), w.letters()))));
  return r;
}

std::string AlexanderRecord::to_json() const {
  std::ostringstream os;
  os << "{\"word\":" << word.to_json() << ",\"nabla\":" << nabla.to_json() << ",\"p\":" << p
     << ",\"u\":" << fmt12(u) << ",\"trace_log\":" << fmt12(trace_log) << "}";
  return os.str();
}

AsymptoticAlexander asymptotic_alexander(double n, double u, const LyapunovResult& gamma) {
  AsymptoticAlexander a;
  a.gamma1 = gamma.gamma1;
  a.gamma1_se = gamma.standard_error;
  a.value = -std::expm1(n * gamma.gamma1 / 2) / alexander_denominator(u);
  return a;
}

AsymptoticAlexander asymptotic_alexander(double n, double u, std::int64_t steps, std::int64_t samples,
                                         std::uint64_t seed, unsigned workers) {
  return asymptotic_alexander(
      n, u, lyapunov_mc(walk_config(framing_at(u), WalkKind::Simple, steps, samples, seed, workers)));
}

std::vector<AlexanderSample> alexander_statistics(std::int64_t n, std::int64_t samples, double u, std::uint64_t seed,
                                                  unsigned workers) {
  if (n < 1 || samples < 1) throw Error(ErrorKind::Config, "n and samples must be >= 1");
  const Framing f = framing_at(u);
  const double lden = std::log(alexander_denominator(u));
  const double lu = std::log(u);
  const Matrix2d mats[4] = {letter_matrix(f, 1), letter_matrix(f, -1), letter_matrix(f, 2), letter_matrix(f, -2)};
  auto all = run_blocks<Collected<AlexanderSample>>(samples, workers, [&](std::int64_t lo, std::int64_t hi) {
    Collected<AlexanderSample> part;
    for (std::int64_t i = lo; i < hi; ++i) {
      SampleRng rng(seed, static_cast<std::uint64_t>(i));
      Matrix2d w = Matrix2d::identity();
      double lg = 0;  // true product = e^lg * w
      long p = 0;
      for (std::int64_t t = 1; t <= n; ++t) {
        std::uint32_t j = rng.below(4);
        w *= mats[j];
        p += j % 2 == 0 ? 1 : -1;
        if (t % 16 == 0) {
          double nr = std::sqrt(frob2(w));
          w = {w.a / nr, w.b / nr, w.c / nr, w.d / nr};
          lg += std::log(nr);
        }
      }
      // the Magnus product at t = -u^2 is u^p times the normalized one, so
      // (1 - u^2 + u^4) nabla = u^{2p} + 1 - u^p e^lg Tr w
      double la = 2 * p * lu, lb = p * lu + lg;
      double big = std::max({la, lb, 0.0});
      double val = std::exp(la - big) + std::exp(-big) - std::exp(lb - big) * w.trace();
      AlexanderSample s;
      s.p = p;
      s.ln_abs_nabla = std::log(std::abs(val)) + big - lden;
      s.trace_log = 2 * lg + std::log(frob2(w));
      part.values.push_back(s);
    }
    return part;
  });
  return all.values;
}

AlexanderGrowth alexander_growth(const std::vector<std::int64_t>& ns, std::int64_t samples, double u,
                                 std::uint64_t seed, unsigned workers) {
  if (ns.size() < 2) throw Error(ErrorKind::Config, "growth fit needs at least two lengths");
  AlexanderGrowth g;
  g.n = ns;
  for (std::int64_t n : ns) {
    auto s = alexander_statistics(n, samples, u, mix_seed(seed, static_cast<std::uint64_t>(n)), workers);
    double a = 0, b = 0, cnt = 0;
    for (const auto& x : s) {
      if (!std::isfinite(x.ln_abs_nabla)) continue;  // nabla(u) = 0 exactly
      a += x.ln_abs_nabla;
      b += x.trace_log;
      cnt += 1;
    }
    g.mean_ln_nabla.push_back(a / cnt);
    g.mean_trace_log.push_back(b / cnt);
  }
  g.slope_ln_nabla = slope(ns, g.mean_ln_nabla);
  g.half_gamma1 = slope(ns, g.mean_trace_log) / 2;
  return g;
}

std::string alexander_csv(const std::vector<AlexanderSample>& s) {
  std::ostringstream os;
  os << "p,ln_abs_nabla,trace_log\n";
  for (const auto& x : s) os << x.p << ',' << fmt12(x.ln_abs_nabla) << ',' << fmt12(x.trace_log) << '\n';
  return os.str();
}

}  // namespace hypwalk
