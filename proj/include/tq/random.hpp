#pragma once

#include <cstdint>
#include <random>

namespace tq {

std::uint64_t splitmix64(std::uint64_t x);

// Seed for an independent substream. Depends only on (master, stream), so
// work split across threads draws the same numbers as a serial loop.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits; avoids the implementation-defined
  // std::uniform_real_distribution so streams are reproducible across libcs.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tq
