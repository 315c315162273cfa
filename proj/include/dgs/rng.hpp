#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dgs {

// Seeded mt19937_64 (standardized output sequence, identical on every
// platform) with rejection-sampled bounded draws, so shuffles are exactly
// uniform and reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Fisher-Yates with exact-uniform draws.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

  std::vector<int> random_permutation(int n) {
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i;
    shuffle(pi);
    return pi;
  }

  // Derived generator for a worker shard; deterministic in (seed, stream).
  Rng spawn(std::uint64_t stream) const {
    std::mt19937_64 mix(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return Rng(mix());
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace dgs
