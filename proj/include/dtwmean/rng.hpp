#pragma once

#include <cmath>
#include <cstdint>

namespace dtwmean {

/// Counter-based generator with the splitmix64 output function. Streams
/// derived with split() are decoupled from the draw order of their siblings,
/// so per-sample randomness stays reproducible under parallel generation.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  Rng split(std::uint64_t stream) const { return Rng(mix(key_ ^ mix(stream + kGamma))); }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  /// Uniform in (0, 1].
  double next_unit() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; draws two fresh uniforms per call.
  double next_normal() {
    double u1 = next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  /// Uniform integer in [0, n).
  std::size_t next_below(std::size_t n) {
    return static_cast<std::size_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dtwmean
