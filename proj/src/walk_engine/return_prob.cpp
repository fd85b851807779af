#include "hypwalk/return_prob.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "hypwalk/b3.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/estimate.hpp"
#include "hypwalk/parallel.hpp"
#include "hypwalk/rng.hpp"
#include "hypwalk/sigma_length.hpp"

namespace hypwalk {

namespace {

void require_return_framing(const Framing& f) {
  if (f.alphabet != Alphabet::SigmaBar && f.alphabet != Alphabet::BraidSigma)
    throw Error(ErrorKind::Config, "return probabilities are defined for the PSL sbar and B3 sigma framings");
}

struct Hits {
  std::int64_t hits = 0;
  std::int64_t total = 0;
  void merge(const Hits& o) {
    hits += o.hits;
    total += o.total;
  }
};

struct B3Key {
  NormalFormHq proj{3};
  long e = 0;
  bool operator==(const B3Key& o) const { return e == o.e && proj == o.proj; }
};
struct B3KeyHash {
  std::size_t operator()(const B3Key& k) const {
    return NormalFormHqHash{}(k.proj) ^ (static_cast<std::size_t>(k.e) * 0x9e3779b97f4a7c15ULL);
  }
};

}  // namespace

std::vector<ReturnProbRow> estimate_return_probability(const Framing& f, const std::vector<int>& n_list,
                                                       std::int64_t samples, std::uint64_t seed, unsigned workers) {
  require_return_framing(f);
  if (samples < 1) throw Error(ErrorKind::Config, "samples must be >= 1");
  const bool braid = f.is_braid();
  std::vector<ReturnProbRow> rows;
  for (int n : n_list) {
    if (n < 0) throw Error(ErrorKind::Config, "n must be nonnegative");
    ReturnProbRow row;
    row.n = n;
    row.seed = mix_seed(seed, static_cast<std::uint64_t>(n));
    if (braid && n % 2 == 1) {
      row.exact_zero = true;
      row.wilson_hi = 0;
      rows.push_back(row);
      continue;
    }
    Hits h = run_blocks<Hits>(samples, workers, [&](std::int64_t lo, std::int64_t hi) {
      Hits part;
      B3State st;
      for (std::int64_t i = lo; i < hi; ++i) {
        SampleRng rng(row.seed, static_cast<std::uint64_t>(i));
        st.clear();
        for (int t = 0; t < n; ++t) {
          std::uint32_t m = rng.below(4);
          st.push(Alphabet::BraidSigma, m == 0 ? 1 : m == 1 ? -1 : m == 2 ? 2 : -2);
        }
        bool hit = braid ? st.trivial() : st.projection.empty();
        part.hits += hit;
        ++part.total;
      }
      return part;
    });
    row.samples = h.total;
    row.hits = h.hits;
    row.p = static_cast<double>(h.hits) / static_cast<double>(h.total);
    row.standard_error = std::sqrt(row.p * (1 - row.p) / static_cast<double>(h.total));
    Interval w = wilson_interval(h.hits, h.total);
    row.wilson_lo = w.lo;
    row.wilson_hi = w.hi;
    rows.push_back(row);
  }
  return rows;
}

double exhaustive_return_probability(const Framing& f, int n) {
  require_return_framing(f);
  if (n > 12) throw Error(ErrorKind::ResourceLimit, "exhaustive enumeration is capped at n = 12");
  const bool braid = f.is_braid();
  const int letters[4] = {1, -1, 2, -2};
  std::vector<B3State> stack(static_cast<std::size_t>(n) + 1);
  std::int64_t hits = 0;
  // odometer over all 4^n words, reusing the prefix states
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < n; ++t) {
    stack[t + 1] = stack[t];
    stack[t + 1].push(Alphabet::BraidSigma, letters[0]);
  }
  for (;;) {
    const B3State& s = stack[n];
    hits += braid ? s.trivial() : s.projection.empty();
    int pos = n - 1;
    while (pos >= 0 && digit[pos] == 3) digit[pos--] = 0;
    if (pos < 0) break;
    ++digit[pos];
    for (int t = pos; t < n; ++t) {
      stack[t + 1] = stack[t];
      stack[t + 1].push(Alphabet::BraidSigma, letters[digit[t]]);
    }
  }
  return static_cast<double>(hits) / std::pow(4.0, n);
}

std::vector<double> master_equation_return_profile(const Framing& f, int n_max) {
  require_return_framing(f);
  if (n_max > 31) throw Error(ErrorKind::ResourceLimit, "exact counts overflow beyond n = 31");
  const bool braid = f.is_braid();
  const int letters[4] = {1, -1, 2, -2};
  std::unordered_map<B3Key, std::uint64_t, B3KeyHash> cur, nxt;
  cur[B3Key{}] = 1;
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1, 0.0);
  p[0] = 1.0;
  for (int t = 1; t <= n_max; ++t) {
    nxt.clear();
    const int remaining = n_max - t;
    for (const auto& [k, c] : cur) {
      for (int l : letters) {
        B3State s;
        s.projection = k.proj;
        s.e = k.e;
        s.push(Alphabet::BraidSigma, l);
        // the sbar length of the projection lower-bounds the steps needed to return
        if (sigma_bar_length(s.projection) > remaining) continue;
        if (braid && std::labs(s.e) > remaining) continue;
        B3Key nk{std::move(s.projection), braid ? s.e : 0};
        nxt[nk] += c;
      }
    }
    std::swap(cur, nxt);
    auto it = cur.find(B3Key{});
    p[t] = it == cur.end() ? 0.0 : static_cast<double>(it->second) / std::pow(4.0, t);
  }
  return p;
}

std::string return_prob_csv(const std::vector<ReturnProbRow>& rows) {
  std::ostringstream os;
  os << "n,estimate,stderr,samples,seed,hits,wilson_lo,wilson_hi\n";
  for (const auto& r : rows)
    os << r.n << ',' << fmt12(r.p) << ',' << fmt12(r.standard_error) << ',' << r.samples << ',' << r.seed << ','
       << r.hits << ',' << fmt12(r.wilson_lo) << ',' << fmt12(r.wilson_hi) << '\n';
  return os.str();
}

}  // namespace hypwalk
