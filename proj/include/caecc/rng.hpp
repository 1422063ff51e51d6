#pragma once

#include <cstdint>
#include <vector>

namespace caecc {

// splitmix64 finalizer (Steele, Lea, Flood; public domain reference constants).
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the i-th output is a pure function of (seed, i),
//   out_i = splitmix64_mix(seed + i * 0x9e3779b97f4a7c15),
// which makes every run byte-reproducible under the same seed and lets
// independent streams be derived without sharing state. bounded() maps to
// [0, n) by modulo; for the n <= 2^20 draws used here the bias is < 2^-44
// and determinism is what matters.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return splitmix64_mix(seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  // Independent stream for partition `index` of a run seeded with `seed`;
  // serial and partitioned executions draw identical values per trial.
  static CounterRng derive(std::uint64_t seed, std::uint64_t index) {
    return CounterRng(splitmix64_mix(seed ^ splitmix64_mix(index + 0x51ed2701a39cbd1bULL)));
  }

  // k distinct values from [0, n), in random order (partial Fisher-Yates).
  std::vector<int> sample_without_replacement(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(bounded(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace caecc
