#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "hypwalk/hyperbolic.hpp"
#include "hypwalk/parallel.hpp"

namespace hypwalk {

namespace {

constexpr int kRenormEvery = 32;

struct WalkTrace {
  double log_trace = 0;  // ln Tr(w w^T)
  double sum_sq = 0;     // sum of squared direction-process increments
};

class MatrixWalker {
 public:
  explicit MatrixWalker(const WalkConfig& cfg)
      : cfg_(cfg), moves_(cfg.framing.moves()), inv_(inverse_indices(cfg.framing, moves_)) {
    for (int l : moves_) mats_[l] = letter_matrix(cfg.framing, l);
  }

  WalkTrace run(std::int64_t index, bool increments) {
    SampleRng rng(cfg_.seed, static_cast<std::uint64_t>(index));
    Matrix2d w = Matrix2d::identity();
    double acc = 0, sq = 0, vx = 1, vy = 0;
    std::int64_t t = 0;
    drive_walk(cfg_.framing, cfg_.kind, cfg_.steps, rng, moves_, inv_, [&](int l) {
      const Matrix2d& h = mats_.at(l);
      w *= h;
      if (increments) {
        double x = h.a * vx + h.c * vy, y = h.b * vx + h.d * vy;
        double r2 = x * x + y * y;
        double d = std::log(r2);
        sq += d * d;
        double r = std::sqrt(r2);
        vx = x / r;
        vy = y / r;
      }
      if (++t % kRenormEvery == 0) {
        double tr = w.a * w.a + w.b * w.b + w.c * w.c + w.d * w.d;
        acc += std::log(tr);
        double s = 1 / std::sqrt(tr);
        w = {w.a * s, w.b * s, w.c * s, w.d * s};
      }
    });
    double tr = w.a * w.a + w.b * w.b + w.c * w.c + w.d * w.d;
    WalkTrace out{acc + std::log(tr), sq};
    if (!std::isfinite(out.log_trace)) throw Error(ErrorKind::Internal, "matrix product overflowed");
    return out;
  }

 private:
  const WalkConfig& cfg_;
  std::vector<int> moves_, inv_;
  std::map<int, Matrix2d> mats_;
};

struct LyapAcc {
  Estimate g1, g2;
  void merge(const LyapAcc& o) {
    g1.merge(o.g1);
    g2.merge(o.g2);
  }
};

}  // namespace

LyapunovResult lyapunov_mc(const WalkConfig& cfg) {
  cfg.validate();
  const double n = static_cast<double>(cfg.steps);
  LyapAcc acc = run_blocks<LyapAcc>(cfg.samples, cfg.workers, [&](std::int64_t lo, std::int64_t hi) {
    MatrixWalker mw(cfg);
    LyapAcc part;
    for (std::int64_t i = lo; i < hi; ++i) {
      WalkTrace tr = mw.run(i, true);
      part.g1.add(tr.log_trace / n);
      part.g2.add(tr.sum_sq / n);
    }
    return part;
  });
  LyapunovResult r;
  r.method = "monte-carlo";
  r.gamma1 = acc.g1.mean;
  r.gamma2 = acc.g2.mean;
  r.sigma2 = r.gamma2 - r.gamma1 * r.gamma1;
  r.standard_error = acc.g1.standard_error();
  r.samples = cfg.samples;
  r.steps = cfg.steps;
  r.seed = cfg.seed;
  return r;
}

std::vector<double> log_trace_samples(const WalkConfig& cfg) {
  cfg.validate();
  auto all = run_blocks<Collected<double>>(cfg.samples, cfg.workers, [&](std::int64_t lo, std::int64_t hi) {
    MatrixWalker mw(cfg);
    Collected<double> part;
    for (std::int64_t i = lo; i < hi; ++i) part.values.push_back(mw.run(i, false).log_trace);
    return part;
  });
  return all.values;
}

std::vector<Table1Row> table1(std::int64_t n, std::int64_t samples, std::uint64_t seed, unsigned workers) {
  std::vector<Table1Row> rows;
  std::map<std::string, LyapunovResult> directed;
  for (const BackboneSpec& s : table1_specs()) {
    Table1Row row;
    row.name = s.name;
    row.scale_factor = s.scale_factor;
    row.graph_drift = s.graph_drift;
    row.simple = lyapunov_mc(walk_config(s.group, WalkKind::Simple, n, samples, seed, workers));
    std::string key = s.backbone.name();
    if (!directed.count(key)) {
      directed[key] = lyapunov_mc(walk_config(s.backbone, WalkKind::Directed, n, samples, mix_seed(seed, 1), workers));
    }
    row.directed = directed[key];
    row.ratio = s.scale_factor * row.simple.gamma1 / row.directed.gamma1;
    double rs = row.simple.standard_error / row.simple.gamma1, rd = row.directed.standard_error / row.directed.gamma1;
    row.ratio_se = row.ratio * std::sqrt(rs * rs + rd * rd);
    rows.push_back(row);
  }
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  os << "group,scale_factor,gamma_simple,gamma_simple_se,gamma_directed,gamma_directed_se,ratio,ratio_se,graph_drift\n";
  for (const auto& r : rows)
    os << r.name << ',' << fmt12(r.scale_factor) << ',' << fmt12(r.simple.gamma1) << ','
       << fmt12(r.simple.standard_error) << ',' << fmt12(r.directed.gamma1) << ',' << fmt12(r.directed.standard_error)
       << ',' << fmt12(r.ratio) << ',' << fmt12(r.ratio_se) << ',' << fmt12(r.graph_drift) << '\n';
  return os.str();
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-6s %4s %10s %10s %16s %12s\n", "group", "s_f", "gamma^s", "gamma^d",
                "s_f g^s/g^d", "graph drift");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-6s %4.0f %10.5f %10.5f %9.4f+-%.4f %12.5f\n", r.name.c_str(), r.scale_factor,
                  r.simple.gamma1, r.directed.gamma1, r.ratio, r.ratio_se, r.graph_drift);
    os << buf;
  }
  return os.str();
}

std::string RelationReport::to_json() const {
  std::ostringstream os;
  os << "{\"group\":\"" << name << "\",\"n\":" << n << ",\"samples\":" << samples
     << ",\"mean_length\":" << fmt12(mean_length) << ",\"predicted_length\":" << fmt12(predicted_length)
     << ",\"gamma_directed\":" << fmt12(gamma_directed) << ",\"ratio\":" << fmt12(ratio)
     << ",\"ratio_lo\":" << fmt12(ratio_lo) << ",\"ratio_hi\":" << fmt12(ratio_hi)
     << ",\"pass\":" << (pass ? "true" : "false") << "}";
  return os.str();
}

RelationReport check_length_trace_relation(const BackboneSpec& spec, std::int64_t n, std::int64_t samples,
                                           std::uint64_t seed, unsigned workers) {
  WalkConfig c = walk_config(spec.group, WalkKind::Simple, n, samples, seed, workers);
  // both sides come from the same letter sequences
  std::vector<double> len = sample_functionals(c, {LengthFunctional::GraphL})[0];
  std::vector<double> lt = log_trace_samples(c);
  LyapunovResult gd =
      lyapunov_mc(walk_config(spec.backbone, WalkKind::Directed, n, samples, mix_seed(seed, 1), workers));

  const double m = static_cast<double>(samples);
  double ml = 0, mt = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    ml += len[i];
    mt += lt[i];
  }
  ml /= m;
  mt /= m;
  double vl = 0, vt = 0, cv = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    vl += (len[i] - ml) * (len[i] - ml);
    vt += (lt[i] - mt) * (lt[i] - mt);
    cv += (len[i] - ml) * (lt[i] - mt);
  }
  const double dof = std::max(m - 1, 1.0);
  vl /= dof;
  vt /= dof;
  cv /= dof;

  RelationReport r;
  r.name = spec.name;
  r.n = n;
  r.samples = samples;
  r.gamma_directed = gd.gamma1;
  r.mean_length = ml;
  r.predicted_length = spec.scale_factor / gd.gamma1 * mt;
  r.ratio = r.mean_length / r.predicted_length;
  // delta method on ratio = ml * gamma_d / (s_f * mt)
  double rel2 = vl / (m * ml * ml) + vt / (m * mt * mt) - 2 * cv / (m * ml * mt) +
                (gd.standard_error / gd.gamma1) * (gd.standard_error / gd.gamma1);
  double half = 1.96 * r.ratio * std::sqrt(std::max(rel2, 0.0));
  r.ratio_lo = r.ratio - half;
  r.ratio_hi = r.ratio + half;
  r.pass = r.ratio >= 0.98 && r.ratio <= 1.02;
  return r;
}

}  // namespace hypwalk
