#pragma once

#include <cstdint>
#include <limits>

namespace subrank {

// SplitMix64; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform integer in [lo, hi] by rejection.
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = max() - max() % span;
    std::uint64_t v;
    do v = (*this)();
    while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

 private:
  std::uint64_t s_;
};

// Independent stream for job `job` under master seed `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t job) {
  SplitMix64 g(seed ^ (0xd1b54a32d192ed03ULL * (job + 1)));
  return g();
}

}  // namespace subrank
