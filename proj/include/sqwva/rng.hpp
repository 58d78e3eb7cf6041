#pragma once

// Portable seeded Gaussian streams.
//
// std::mt19937_64 has a fully specified output sequence; std::normal_distribution
// does not, so the Gaussian transform (Box-Muller) is done here. Independent
// streams are keyed by (seed, stream index) through splitmix64, which makes a
// parallel run draw exactly the numbers a serial run draws.

#include <cstdint>
#include <random>

namespace sqwva::rng {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed for stream `index` of a run seeded with `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t index);

  // Standard normal deviate.
  double next();

 private:
  // Uniform on (0, 1].
  double uniform();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sqwva::rng
