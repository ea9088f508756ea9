#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace lml {

// splitmix64; used to derive independent seeds for sub-streams.
uint64_t splitmix64(uint64_t x);

// Seed for sub-stream `stream` of a run seeded with `seed`. Per-bag and
// per-run streams are derived this way so that serial and parallel
// generation agree element-for-element.
uint64_t derive_stream(uint64_t seed, uint64_t stream);

// Deterministic RNG. The distribution code lives here (not in <random>
// adapters) so identical seeds give identical streams on every platform;
// mt19937_64 itself is pinned by the standard.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller; the spare value is cached.
  double normal();

  // Uniform integer in [lo, hi], both inclusive. Unbiased (rejection).
  int uniform_int(int lo, int hi);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lml
