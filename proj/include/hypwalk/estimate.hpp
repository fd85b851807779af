#pragma once

#include <cstdint>
#include <string>

namespace hypwalk {

// Streaming mean/variance (Welford), mergeable across sample blocks.
struct Estimate {
  double mean = 0;
  double m2 = 0;
  std::int64_t count = 0;
  std::uint64_t seed = 0;

  void add(double x) {
    ++count;
    double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }
  void merge(const Estimate& o);
  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
  double standard_error() const;
  std::string to_json() const;
};

// Wilson score interval for k successes out of n at normal quantile z.
struct Interval {
  double lo;
  double hi;
};
Interval wilson_interval(std::int64_t k, std::int64_t n, double z = 1.959963984540054);

// Fixed-width formatting with 12 significant digits, used by every CSV writer.
std::string fmt12(double x);

}  // namespace hypwalk
