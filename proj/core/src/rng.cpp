#include "onestep/rng.hpp"

#include <cmath>

#include "onestep/errors.hpp"

namespace onestep {

std::uint64_t mix_seed(std::uint64_t value) {
  value += 0x9E3779B97F4A7C15ULL;
  value = (value ^ (value >> 30)) * 0xBF58476D1CE4E5B9ULL;
  value = (value ^ (value >> 27)) * 0x94D049BB133111EBULL;
  return value ^ (value >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::substream(std::uint64_t root_seed, std::uint64_t index) {
  return Rng(mix_seed(root_seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform01() {
  const std::uint64_t bits = engine_() >> 11;
  return static_cast<double>(bits + 1) * 0x1.0p-53;
}

double Rng::exponential(double rate) {
  if (!(rate > 0.0)) throw DomainError("exponential rate must be positive");
  return -std::log(uniform01()) / rate;
}

double Rng::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return radius * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

}  // namespace onestep
