#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace relieflab {

// splitmix64 (Vigna). Used to expand a 64-bit seed into generator state and
// to derive per-cell seeds in the experiment harness.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stateless form: splitmix64_mix(x) equals splitmix64_next run once on
// state x.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  std::uint64_t state = z;
  return splitmix64_next(state);
}

// xoshiro256** 1.0 (Blackman & Vigna), seeded through splitmix64.
//
// Every random draw in the project goes through this class so that datasets,
// sample orders and whole experiment runs are bit-reproducible for a given
// seed. Integer draws and uniform doubles are platform-independent; normal()
// goes through libm (log/cos) and may differ in the last ulp between C
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n) by rejection sampling.
  std::uint64_t bounded(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::bounded: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  int bounded_int(int n) { return static_cast<int>(bounded(static_cast<std::uint64_t>(n))); }

  // Standard normal via Box-Muller; consumes exactly two uniform draws.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  // In-place Fisher-Yates, high index down, partner drawn with bounded().
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = bounded(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_[4];
};

// Index drawn proportionally to non-negative weights (need not be normalized).
inline int pick_weighted(Rng& rng, std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("pick_weighted: negative weight");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("pick_weighted: weights sum to zero");
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

}  // namespace relieflab
