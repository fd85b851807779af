#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hypwalk/estimate.hpp"
#include "hypwalk/framing.hpp"
#include "hypwalk/matrix2.hpp"
#include "hypwalk/walk.hpp"

namespace hypwalk {

using Point = std::complex<double>;  // upper half-plane, Im z > 0

Point mobius_apply(const Matrix2d& m, Point z);

// d(i, m(i)) from 2 cosh d = Tr(m m^T), after scaling m to |det| = 1.
double hyperbolic_distance_of_word(const Matrix2d& m);
double hyperbolic_distance_of_word(const Word& w);
// cosh d(z1, z2) = 1 + |z1 - z2|^2 / (2 Im z1 Im z2)
double point_pair_distance(Point z1, Point z2);

Matrix2d rotation(double phi);

struct AngleStep {
  double theta;  // in (-pi/2, pi/2]
  double dd;     // ln |h^T v(theta)|^2
};
// Direction process of w_n = h_1 ... h_n: v -> h^T v / |h^T v|.
AngleStep angle_step(double theta, const Matrix2d& h);
double fold_angle(double theta);

using GeneratorSet = std::vector<Matrix2d>;
GeneratorSet generators_of(const Framing& f);

struct DensityGrid {
  int n = 4096;
  std::vector<double> weights;  // cell masses over theta in (-pi/2, pi/2], summing to 1

  double width() const;
  double center(int i) const;
  // masses merged into `bins` equal cells (bins must divide n)
  std::vector<double> coarsen(int bins) const;
  std::string to_csv() const;  // theta_center,density
};

enum class MeasureStart { Uniform, CosineBump, PointMass };

struct MeasureResult {
  DensityGrid mu;
  int sweeps = 0;
  bool converged = false;
  std::vector<double> l1_trajectory;
};

// Iterates the stationary equation of the direction process.  Each sweep moves cell
// masses through the exact preimages of the cell edges, so total mass is conserved.
MeasureResult iterate_invariant_measure(const GeneratorSet& gens, int n = 4096, double tol = 1e-8,
                                        int max_sweeps = 20000, MeasureStart start = MeasureStart::Uniform);

struct LyapunovResult {
  double gamma1 = 0;
  double gamma2 = 0;
  double sigma2 = 0;
  std::string method;  // "measure-integral" or "monte-carlo"
  double standard_error = 0;
  std::int64_t samples = 0;
  std::int64_t steps = 0;
  std::uint64_t seed = 0;
  std::string to_json() const;
};

LyapunovResult lyapunov_from_measure(const GeneratorSet& gens, const MeasureResult& mu);

// gamma1 = <ln Tr(w w^T)>/n; gamma2 is the per-step mean of the squared direction-process
// increments, the quantity the measure integral computes.
LyapunovResult lyapunov_mc(const WalkConfig& cfg);
// ln Tr(w w^T) of each sample walk; letters follow the same draw as sample_functionals.
std::vector<double> log_trace_samples(const WalkConfig& cfg);

// Histogram of theta along one long walk after burn_in steps.
std::vector<double> angle_histogram_mc(const GeneratorSet& gens, std::int64_t steps, int bins, std::uint64_t seed,
                                       std::int64_t burn_in = 1000, std::int64_t skip = 0);

double l1_distance(const std::vector<double>& p, const std::vector<double>& q);

// One row of the backbone comparison table.
struct BackboneSpec {
  std::string name;
  Framing group;     // simple walk framing
  Framing backbone;  // directed walk framing
  double scale_factor = 1;
  double graph_drift = 0;               // exact word-metric drift of the group walk
  std::vector<Word> backbone_generators;  // images of the backbone generators in the group
};
std::vector<BackboneSpec> table1_specs();
BackboneSpec backbone_spec(const std::string& name);  // F3, F4, H3, PSL

struct Table1Row {
  std::string name;
  double scale_factor = 0;
  LyapunovResult simple, directed;
  double ratio = 0, ratio_se = 0;
  double graph_drift = 0;
};
std::vector<Table1Row> table1(std::int64_t n, std::int64_t samples, std::uint64_t seed, unsigned workers = 0);
std::string table1_csv(const std::vector<Table1Row>& rows);
std::string table1_text(const std::vector<Table1Row>& rows);

struct RelationReport {
  std::string name;
  std::int64_t n = 0, samples = 0;
  double mean_length = 0;       // <L>
  double predicted_length = 0;  // (s_f / gamma1^d) <ln Tr>
  double gamma_directed = 0;
  double ratio = 0;
  double ratio_lo = 0, ratio_hi = 0;  // 95% interval
  bool pass = false;                  // ratio within [0.98, 1.02]
  std::string to_json() const;
};
RelationReport check_length_trace_relation(const BackboneSpec& spec, std::int64_t n, std::int64_t samples,
                                           std::uint64_t seed, unsigned workers = 0);

}  // namespace hypwalk
