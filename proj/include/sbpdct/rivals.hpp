#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "sbpdct/counting.hpp"
#include "sbpdct/fast8.hpp"
#include "sbpdct/reference.hpp"
#include "sbpdct/sbp.hpp"

namespace sbpdct {

enum class AlgorithmId { Naive, Proposed, Loeffler, Arai };

inline constexpr AlgorithmId kAllAlgorithms[] = {AlgorithmId::Naive, AlgorithmId::Proposed,
                                                 AlgorithmId::Loeffler, AlgorithmId::Arai};

std::string_view to_string(AlgorithmId id);
AlgorithmId parse_algorithm(std::string_view name);
/// Proposed and Arai emit a scaled spectrum; the others only the exact one.
bool supports_scaled(AlgorithmId id);

namespace detail {

struct LoefflerConstants {
  // even rotation (sqrt 2 c6 block)
  double r2c6, r2_c2_minus_c6, r2_c2_plus_c6;
  // odd rotations by 3pi/16 and pi/16
  double c3, c3_plus_s3, s3_minus_c3;
  double c1, c1_plus_s1, s1_minus_c1;
  double sqrt2;
};
const LoefflerConstants& loeffler_constants();

struct AraiConstants {
  double a1, a2, a3, a4, a5;
};
const AraiConstants& arai_constants();

}  // namespace detail

/// Loeffler-Ligtenberg-Moschytz flow graph: 11 products, 29 additions.
/// With `null_mean`, X[0] is known to be zero and the DC butterfly collapses
/// into a doubling (26 additions).
template <class T>
std::array<T, 8> loeffler8_generic(std::span<const T> x, bool null_mean = false) {
  detail::require_length(x.size(), 8, "loeffler8");
  const auto& k = detail::loeffler_constants();

  const T s07 = x[0] + x[7];
  const T s16 = x[1] + x[6];
  const T s25 = x[2] + x[5];
  const T s34 = x[3] + x[4];
  const T b0 = x[0] - x[7];
  const T b1 = x[1] - x[6];
  const T b2 = x[2] - x[5];
  const T b3 = x[3] - x[4];

  std::array<T, 8> out;

  // Even half.
  const T a0 = s07 + s34;
  const T a3 = s07 - s34;
  const T a2 = s16 - s25;
  if (null_mean) {
    out[0] = T(0.0);
    out[4] = a0 * 2.0;
  } else {
    const T a1 = s16 + s25;
    out[0] = a0 + a1;
    out[4] = a0 - a1;
  }
  const T t_even = (a2 + a3) * k.r2c6;
  out[2] = t_even + a3 * k.r2_c2_minus_c6;
  out[6] = t_even - a2 * k.r2_c2_plus_c6;

  // Odd half: two rotations, a butterfly stage, then outputs.
  const T t3 = (b0 + b3) * k.c3;
  const T r0 = t3 - b3 * k.c3_plus_s3;
  const T r3 = t3 + b0 * k.s3_minus_c3;
  const T t1 = (b1 + b2) * k.c1;
  const T r1 = t1 - b2 * k.c1_plus_s1;
  const T r2 = t1 + b1 * k.s1_minus_c1;

  const T e0 = r0 + r2;
  const T e2 = r0 - r2;
  const T e3 = r3 + r1;
  const T e1 = r3 - r1;

  out[1] = e0 + e3;
  out[7] = e0 - e3;
  out[3] = e2 * k.sqrt2;
  out[5] = e1 * k.sqrt2;
  return out;
}

/// Arai-Agui-Nakajima scaled flow graph: 5 products, 29 additions. Output
/// times arai_scale_vector() is the exact spectrum.
template <class T>
std::array<T, 8> arai8_generic(std::span<const T> x, bool null_mean = false) {
  detail::require_length(x.size(), 8, "arai8");
  const auto& k = detail::arai_constants();

  const T t0 = x[0] + x[7];
  const T t7 = x[0] - x[7];
  const T t1 = x[1] + x[6];
  const T t6 = x[1] - x[6];
  const T t2 = x[2] + x[5];
  const T t5 = x[2] - x[5];
  const T t3 = x[3] + x[4];
  const T t4 = x[3] - x[4];

  std::array<T, 8> out;

  const T e10 = t0 + t3;
  const T e13 = t0 - t3;
  const T e12 = t1 - t2;
  if (null_mean) {
    out[0] = T(0.0);
    out[4] = e10 * 2.0;
  } else {
    const T e11 = t1 + t2;
    out[0] = e10 + e11;
    out[4] = e10 - e11;
  }
  const T z1 = (e12 + e13) * k.a1;
  out[2] = e13 + z1;
  out[6] = e13 - z1;

  const T o10 = t4 + t5;
  const T o11 = t5 + t6;
  const T o12 = t6 + t7;
  const T z5 = (o10 - o12) * k.a5;
  const T z2 = o10 * k.a2 + z5;
  const T z4 = o12 * k.a4 + z5;
  const T z3 = o11 * k.a3;
  const T z11 = t7 + z3;
  const T z13 = t7 - z3;

  out[5] = z13 + z2;
  out[3] = z13 - z2;
  out[1] = z11 + z4;
  out[7] = z11 - z4;
  return out;
}

/// Per-coefficient factors that turn Arai's output into the exact spectrum.
const std::array<double, 8>& arai_scale_vector();

template <class T>
std::array<T, 8> naive8_generic(std::span<const T> x) {
  detail::require_length(x.size(), 8, "naive8");
  static const DenseMatrix c8 = dct_matrix(8);
  const std::vector<T> v = mat_vec(c8, x);
  std::array<T, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = v[i];
  return out;
}

/// Runs `alg` on an input given in `scenario` convention. Rivals receive the
/// difference system for accumulated inputs and use their DC shortcut for
/// zero-mean inputs. With `scaled`, scaled algorithms stop before their
/// scale stage; the returned scale vector is then needed to descale.
template <class T>
std::array<T, 8> run_algorithm(AlgorithmId alg, std::span<const T> input, Scenario scenario,
                               bool scaled) {
  detail::require_length(input.size(), 8, "run_algorithm");
  if (scaled && !supports_scaled(alg)) {
    throw std::invalid_argument(std::string(to_string(alg)) + " has no scaled form");
  }
  if (alg == AlgorithmId::Proposed) {
    const Fast8Output<T> r = fast8_pipeline(input, scenario);
    if (!scaled) return apply_scale(r);
    std::array<T, 8> out;
    out[0] = r.dc;
    for (std::size_t i = 0; i < 7; ++i) out[i + 1] = r.ac_scaled[i];
    return out;
  }

  std::vector<T> x(input.begin(), input.end());
  if (is_accumulated(scenario)) {
    if (scenario == Scenario::NullMeanAccumulated) {
      const std::vector<double> u = values_of(input);
      detail::require_zero_total(u[7], u, "run_algorithm (null-mean-accumulated scenario)");
    }
    x = forward_difference_signal(input);
  }
  const bool null_mean = is_null_mean(scenario);
  if (scenario == Scenario::NullMean) {
    require_null_mean_values(std::span<const T>(x), "run_algorithm (null-mean scenario)");
  }
  const std::span<const T> xs(x);

  switch (alg) {
    case AlgorithmId::Naive: return naive8_generic(xs);
    case AlgorithmId::Loeffler: return loeffler8_generic(xs, null_mean);
    case AlgorithmId::Arai: {
      std::array<T, 8> out = arai8_generic(xs, null_mean);
      if (!scaled) {
        const auto& s = arai_scale_vector();
        for (std::size_t i = 0; i < 8; ++i) out[i] = out[i] * s[i];
      }
      return out;
    }
    case AlgorithmId::Proposed: break;
  }
  throw std::invalid_argument("run_algorithm: unknown algorithm");
}

/// Scale vector matching run_algorithm(alg, ..., scaled = true); all ones for
/// exact algorithms.
std::array<double, 8> algorithm_scale(AlgorithmId alg);

Spectrum loeffler8(std::span<const double> x);
/// Scaled Arai output; spectrum.scale holds arai_scale_vector().
Spectrum arai8(std::span<const double> x);
Spectrum naive8(std::span<const double> x);

}  // namespace sbpdct
