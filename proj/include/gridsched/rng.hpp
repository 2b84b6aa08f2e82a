#pragma once

#include <cmath>
#include <cstdint>

namespace gridsched {

// Labels that keep unrelated sampling sites on disjoint streams.
enum class RngTag : uint64_t {
  WindSpeed = 1,
  Irradiance = 2,
  Temperature = 3,
  LoadDemand = 4,
  SwarmInit = 5,
  SwarmStep = 6,
};

// SplitMix64 generator with counter-style stream derivation: any sampling
// site rebuilds its own generator from (seed, a, b, c), so draws do not
// depend on evaluation order or thread count.
class Rng {
 public:
  explicit Rng(uint64_t state) : state_(state) {}

  static Rng stream(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t h = mix(seed + 0x632be59bd9b4e019ull);
    h = mix(h ^ mix(a + 0x9e3779b97f4a7c15ull));
    h = mix(h ^ mix(b + 0x9e3779b97f4a7c15ull));
    h = mix(h ^ mix(c + 0x9e3779b97f4a7c15ull));
    return Rng(h);
  }

  static Rng stream(uint64_t seed, RngTag tag, uint64_t b = 0, uint64_t c = 0) {
    return stream(seed, static_cast<uint64_t>(tag) << 56, b, c);
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Box-Muller; consumes two uniforms per draw.
  double normal(double mean, double stddev) {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    const double u2 = uniform();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    return mean + stddev * z;
  }

  // Inverse-CDF Weibull draw.
  double weibull(double shape, double scale) {
    const double u = uniform();
    return scale * std::pow(-std::log1p(-u), 1.0 / shape);
  }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925287;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

// Stable derived seed for nested runs (one optimizer run per scenario etc).
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
  return Rng::stream(seed, 0xd1f4ull, salt).next_u64();
}

}  // namespace gridsched
