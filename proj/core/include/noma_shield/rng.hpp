#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace noma_shield {

/// Deterministic random stream. All distribution transforms are implemented
/// here (rather than with std:: distributions) so that a given seed produces
/// the same sequence on every standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Circularly symmetric complex Gaussian CN(0, 1): zero mean, E|z|^2 = 1,
  /// real and imaginary parts independent with variance 1/2, magnitude
  /// Rayleigh distributed. Box-Muller on one pair of uniforms.
  std::complex<double> complex_normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-std::log1p(-u1));
    const double angle = 2.0 * kPi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  /// Real standard normal N(0, 1).
  double standard_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const std::complex<double> z = complex_normal();
    constexpr double kSqrt2 = 1.4142135623730951;
    spare_ = z.imag() * kSqrt2;
    have_spare_ = true;
    return z.real() * kSqrt2;
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Bijective 64-bit finalizer (murmur3 style); used to decorrelate derived
/// seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

/// Counter-based seed split: trial `index` of stream `stream` under
/// `master` gets its own stream seed. Changing any argument decorrelates the
/// result; the map is pure, so trials may be generated in any order or in
/// parallel without affecting the values drawn.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t index) {
  std::uint64_t h = mix64(master ^ 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (stream + 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (index + 0x94d049bb133111ebULL));
  return h;
}

}  // namespace noma_shield
