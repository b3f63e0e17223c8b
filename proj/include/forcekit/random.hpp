#pragma once

#include <cstdint>
#include <random>

namespace forcekit {

/// mt19937_64 with a fixed 53-bit conversion, so draws match across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform on {0, ..., n-1}; n >= 1.
  int index(int n) { return static_cast<int>(unit() * n); }
  /// Uniform on {lo, ..., hi}.
  int between(int lo, int hi) { return lo + index(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 of root and stream; independent per-item seeds from one root.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace forcekit
