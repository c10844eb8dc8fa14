#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sbpdct {

/// Seeded sample source. Draws are built from raw mt19937_64 output so the
/// sequence is identical across standard library implementations.
class SignalRng {
 public:
  explicit SignalRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  std::vector<double> signal(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> x(n);
    for (auto& v : x) v = uniform(lo, hi);
    return x;
  }

  /// Random signal with its mean subtracted.
  std::vector<double> null_mean_signal(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> x = signal(n, lo, hi);
    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / static_cast<double>(n);
    for (auto& v : x) v -= mean;
    return x;
  }

  std::uint8_t byte() { return static_cast<std::uint8_t>(engine_() >> 56); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sbpdct
