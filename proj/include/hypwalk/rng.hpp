#pragma once

#include <cstdint>
#include <limits>

namespace hypwalk {

inline std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t k = splitmix64(s);
  s = k ^ (stream * 0xd1b54a32d192ed03ULL);
  return splitmix64(s);
}

// Per-sample stream keyed by (seed, sample index); independent of scheduling.
class SampleRng {
 public:
  using result_type = std::uint64_t;

  SampleRng(std::uint64_t seed, std::uint64_t index) : state_(mix_seed(seed, index)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return splitmix64(state_); }

  // unbiased integer in [0, n), Lemire's multiply-shift with rejection
  std::uint32_t below(std::uint32_t n) {
    std::uint64_t m = (operator()() >> 32) * n;
    std::uint32_t l = static_cast<std::uint32_t>(m);
    if (l < n) {
      std::uint32_t t = static_cast<std::uint32_t>(-n) % n;
      while (l < t) {
        m = (operator()() >> 32) * n;
        l = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  double uniform() { return static_cast<double>(operator()() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace hypwalk
