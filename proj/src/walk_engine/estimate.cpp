#include "hypwalk/estimate.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace hypwalk {

void Estimate::merge(const Estimate& o) {
  if (o.count == 0) return;
  if (count == 0) {
    std::uint64_t s = seed;
    *this = o;
    seed = s ? s : o.seed;
    return;
  }
  double na = static_cast<double>(count), nb = static_cast<double>(o.count);
  double n = na + nb;
  double d = o.mean - mean;
  mean += d * nb / n;
  m2 += o.m2 + d * d * na * nb / n;
  count += o.count;
}

double Estimate::standard_error() const {
  return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

std::string Estimate::to_json() const {
  nlohmann::json j = {{"mean", mean},
                      {"variance", variance()},
                      {"count", count},
                      {"standard_error", standard_error()},
                      {"seed", seed}};
  return j.dump();
}

Interval wilson_interval(std::int64_t k, std::int64_t n, double z) {
  if (n <= 0) return {0.0, 1.0};
  double p = static_cast<double>(k) / static_cast<double>(n);
  double z2 = z * z, nn = static_cast<double>(n);
  double denom = 1 + z2 / nn;
  double centre = (p + z2 / (2 * nn)) / denom;
  double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace hypwalk
