#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbpdct/counting.hpp"
#include "sbpdct/numerics.hpp"
#include "sbpdct/reference.hpp"
#include "sbpdct/sbp.hpp"

namespace sbpdct {

/// Sparse factors of the 7x7 AC matrix, C~ = S P M1 R1 R2 R3 M3 M4 A.
/// Shapes: A, M4, M3 7x7; R3 8x7; R2 8x8; R1 7x8; M1, P, S 7x7.
struct StageSet {
  DenseMatrix A, M4, M3, R3, R2, R1, M1, P, S;
};

const StageSet& stage_set();

/// C~ assembled entrywise from its product form 2 sqrt 2 s_k * (row pattern).
DenseMatrix ctilde_direct();
/// C~ obtained by multiplying out the stage matrices.
DenseMatrix materialize_ctilde();

/// Diagonal of S in output order X[1..7]; the X[4] slot is exactly 2.
const std::array<double, 7>& scale_vector();

struct ScaledSpectrum8 {
  double dc = 0.0;
  std::array<double, 7> ac_scaled{};
  std::array<double, 7> scale{};

  /// [dc, ac_scaled[i] * scale[i] ...]
  std::array<double, 8> descaled() const;
};

namespace detail {

struct CoreConstants {
  double s4, s2, s6_minus_s2, s2_plus_s6;
};
const CoreConstants& core_constants();

inline void require_length(std::size_t got, std::size_t want, const char* where) {
  if (got != want) {
    throw std::invalid_argument(std::string(where) + ": expected length " + std::to_string(want) +
                                ", got " + std::to_string(got));
  }
}

void require_zero_total(double total, std::span<const double> u, const char* where);

}  // namespace detail

/// The SFG: z[0..6] (accumulated zero-mean input) to the scaled AC outputs
/// in natural order X[1..7]. 5 non-trivial products, 19 additions.
template <class T>
std::array<T, 7> fast8_core(std::span<const T> z) {
  detail::require_length(z.size(), 7, "fast8_core");
  const auto& k = detail::core_constants();

  // A: input butterflies.
  const T a0 = z[0] + z[6];
  const T a1 = z[1] + z[5];
  const T a2 = z[2] + z[4];
  const T& a3 = z[3];
  const T a4 = z[2] - z[4];
  const T a5 = z[1] - z[5];
  const T a6 = z[0] - z[6];

  // M4: butterfly on the odd-difference pair.
  const T b4 = a4 + a6;
  const T b6 = a4 - a6;

  // M3: swap lanes 1 and 2 while scaling, plus the second s4 product.
  const T c2 = a1 * k.s4;
  const T c4 = b4 * k.s4;

  // R3: widen to 8 lanes; lane 7 carries the sign change.
  const T d2 = a0 + a2;
  const T d3 = c2 + a3;
  const T d4 = c2 - a3;
  const T d5 = c4 + a5;
  const T d6 = c4 - a5;
  const T d7 = -b6;

  // R2 and R1: three-multiplier rotation [s2 s6; s6 -s2] on (a0, a2).
  const T e2 = d2 * k.s2;
  const T f0 = a2 * k.s6_minus_s2 + e2;
  const T f1 = a0 * k.s2_plus_s6 - e2;

  // M1: output butterflies.
  const T g0 = f0 + d3;
  const T g1 = f1 + d4;
  const T g2 = f1 - d4;
  const T g3 = f0 - d3;

  // P: wiring back to natural order. M1 emits X1, X3, X5, X7, X2, X4(=lane 6), X6(=lane 5).
  return {g0, d5, g1, d7, g2, d6, g3};
}

template <class T>
struct Fast8Output {
  T dc;
  std::array<T, 7> ac_scaled;
};

/// Scenario pre-processing followed by the core. `input` is the raw signal
/// for (i)/(ii) and its inclusive prefix sums for (iii)/(iv).
template <class T>
Fast8Output<T> fast8_pipeline(std::span<const T> input, Scenario scenario) {
  detail::require_length(input.size(), 8, "fast8");
  switch (scenario) {
    case Scenario::Arbitrary: {
      DcRemoval<T> r = remove_dc_head(input);
      const std::vector<T> z = accumulate(std::span<const T>(r.head));
      return {r.sum, fast8_core(std::span<const T>(z))};
    }
    case Scenario::NullMean: {
      require_null_mean_values(input, "fast8 (null-mean scenario)");
      const std::vector<T> z = accumulate(input.first(7));
      return {T(0.0), fast8_core(std::span<const T>(z))};
    }
    case Scenario::Accumulated: {
      const std::vector<T> z = remove_dc_accumulated(input);
      return {input[7], fast8_core(std::span<const T>(z).first(7))};
    }
    case Scenario::NullMeanAccumulated: {
      const std::vector<double> u = values_of(input);
      detail::require_zero_total(u[7], u, "fast8 (null-mean-accumulated scenario)");
      return {T(0.0), fast8_core(input.first(7))};
    }
  }
  throw std::invalid_argument("fast8: unknown scenario");
}

/// Applies S: 6 non-trivial products and one doubling.
template <class T>
std::array<T, 8> apply_scale(const Fast8Output<T>& scaled) {
  const auto& s = scale_vector();
  std::array<T, 8> out;
  out[0] = scaled.dc;
  for (std::size_t i = 0; i < 7; ++i) out[i + 1] = scaled.ac_scaled[i] * s[i];
  return out;
}

ScaledSpectrum8 fast8_scaled(std::span<const double> input, Scenario scenario);

/// Spectrum form. When `scaled`, values are [dc, ac_scaled...] and scale is
/// [1, S diagonal...]; otherwise the exact DCT.
Spectrum fast8(std::span<const double> input, Scenario scenario, bool scaled);

}  // namespace sbpdct
