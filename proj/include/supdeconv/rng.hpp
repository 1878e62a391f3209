#ifndef SUPDECONV_RNG_HPP
#define SUPDECONV_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

namespace supdeconv {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives a disjoint per-replicate seed from a base seed and a replicate
/// index.  The mixing is one splitmix64 step of base XOR (index + 1), so
/// streams for distinct indices never collide in practice.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t s = base ^ (0xD1B54A32D192ED03ULL * (index + 1));
  return splitmix64(s);
}

/// xoshiro256++ with explicit 64-bit seeding via splitmix64.
/// Chosen over std engines so that streams are identical across standard
/// libraries and platforms; all experiment outputs depend only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on (0,1): 53 random bits, never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on (-1,1).
  double uniform_signed() { return 2.0 * uniform() - 1.0; }

  /// Two independent standard normals by the Marsaglia polar method.
  std::pair<double, double> normal_pair() {
    double u, v, s;
    do {
      u = uniform_signed();
      v = uniform_signed();
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    return {u * factor, v * factor};
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    auto [a, b] = normal_pair();
    spare_ = b;
    have_spare_ = true;
    return a;
  }

  /// Standard Laplace (location 0, scale 1) by CDF inversion.
  double laplace() {
    const double u = uniform() - 0.5;
    return (u < 0.0 ? 1.0 : -1.0) * std::log(1.0 - 2.0 * std::fabs(u));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace supdeconv

#endif  // SUPDECONV_RNG_HPP
