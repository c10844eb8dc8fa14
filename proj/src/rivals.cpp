#include "sbpdct/rivals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sbpdct {

std::string_view to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::Naive: return "naive";
    case AlgorithmId::Proposed: return "proposed";
    case AlgorithmId::Loeffler: return "loeffler";
    case AlgorithmId::Arai: return "arai";
  }
  return "?";
}

AlgorithmId parse_algorithm(std::string_view name) {
  for (AlgorithmId id : kAllAlgorithms) {
    if (name == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected naive|proposed|loeffler|arai)");
}

bool supports_scaled(AlgorithmId id) {
  return id == AlgorithmId::Proposed || id == AlgorithmId::Arai;
}

namespace detail {

const LoefflerConstants& loeffler_constants() {
  static const LoefflerConstants k = [] {
    const auto& t = trig_constants();
    constexpr double r2 = std::numbers::sqrt2;
    return LoefflerConstants{
        .r2c6 = r2 * t.c[6],
        .r2_c2_minus_c6 = r2 * (t.c[2] - t.c[6]),
        .r2_c2_plus_c6 = r2 * (t.c[2] + t.c[6]),
        .c3 = t.c[3],
        .c3_plus_s3 = t.c[3] + t.s[3],
        .s3_minus_c3 = t.s[3] - t.c[3],
        .c1 = t.c[1],
        .c1_plus_s1 = t.c[1] + t.s[1],
        .s1_minus_c1 = t.s[1] - t.c[1],
        .sqrt2 = r2,
    };
  }();
  return k;
}

const AraiConstants& arai_constants() {
  static const AraiConstants k = [] {
    const auto& t = trig_constants();
    return AraiConstants{
        .a1 = t.c[4],
        .a2 = t.c[2] - t.c[6],
        .a3 = t.c[4],
        .a4 = t.c[2] + t.c[6],
        .a5 = t.c[6],
    };
  }();
  return k;
}

}  // namespace detail

const std::array<double, 8>& arai_scale_vector() {
  static const std::array<double, 8> scale = [] {
    const auto& t = trig_constants();
    std::array<double, 8> s{};
    for (std::size_t k = 1; k < 8; ++k) s[k] = 1.0 / (std::numbers::sqrt2 * t.c[k]);
    s[0] = 1.0;
    s[4] = 1.0;
    return s;
  }();
  return scale;
}

std::array<double, 8> algorithm_scale(AlgorithmId alg) {
  switch (alg) {
    case AlgorithmId::Proposed: {
      std::array<double, 8> s{};
      s[0] = 1.0;
      for (std::size_t i = 0; i < 7; ++i) s[i + 1] = scale_vector()[i];
      return s;
    }
    case AlgorithmId::Arai: return arai_scale_vector();
    case AlgorithmId::Naive:
    case AlgorithmId::Loeffler: break;
  }
  std::array<double, 8> ones{};
  ones.fill(1.0);
  return ones;
}

namespace {

Spectrum to_spectrum(const std::array<double, 8>& a) {
  return real_spectrum(std::vector<double>(a.begin(), a.end()));
}

}  // namespace

Spectrum loeffler8(std::span<const double> x) { return to_spectrum(loeffler8_generic(x)); }

Spectrum arai8(std::span<const double> x) {
  Spectrum out = to_spectrum(arai8_generic(x));
  out.scaled = true;
  out.scale.assign(arai_scale_vector().begin(), arai_scale_vector().end());
  return out;
}

Spectrum naive8(std::span<const double> x) { return to_spectrum(naive8_generic(x)); }

}  // namespace sbpdct
