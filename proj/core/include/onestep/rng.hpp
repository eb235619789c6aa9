#pragma once

#include <cstdint>
#include <random>

namespace onestep {

/// Deterministic random source: mt19937_64 with a fixed seeding scheme and
/// hand-rolled variate transforms, so a (seed, replica index) pair yields the
/// same stream on every standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream for one replica of an ensemble. Derived from
  /// (root_seed, index) with a splitmix64 finalizer, so neighbouring indices
  /// get well-separated seeds.
  static Rng substream(std::uint64_t root_seed, std::uint64_t index);

  std::uint64_t next_u64();

  /// Uniform on (0, 1]; never returns 0, so it is safe under log.
  double uniform01();

  /// Exponential with the given rate (mean 1/rate); rate must be positive.
  double exponential(double rate);

  /// Standard normal via the basic Box-Muller transform (no caching).
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, exposed for seed derivation tests.
std::uint64_t mix_seed(std::uint64_t value);

}  // namespace onestep
