#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace svlab {

// Deterministic seed derivation: one run seed fans out into independent
// named streams (init, batch order, factor sampling, decode, ...) so that
// components can be re-run in isolation without perturbing each other.
inline uint64_t derive_seed(uint64_t root, std::string_view name, uint64_t index = 0) {
  // FNV-1a over the name, then splitmix64 to decorrelate.
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  uint64_t z = root ^ h ^ (index * 0x9e3779b97f4a7c15ull);
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  Rng(uint64_t root, std::string_view name, uint64_t index = 0)
      : engine_(derive_seed(root, name, index)) {}

  double normal(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  // Uniform integer in [0, n).
  int64_t below(int64_t n) {
    return std::uniform_int_distribution<int64_t>(0, n - 1)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace svlab
