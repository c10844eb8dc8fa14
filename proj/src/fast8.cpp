#include "sbpdct/fast8.hpp"

#include <cmath>
#include <numbers>

namespace sbpdct {

namespace {

DenseMatrix build_s() {
  const auto& diag = scale_vector();
  return DenseMatrix::diagonal(diag);
}

}  // namespace

const StageSet& stage_set() {
  static const StageSet stages = [] {
    const auto& t = trig_constants();
    const double s2 = t.s[2], s4 = t.s[4], s6 = t.s[6];
    DenseMatrix m3 = DenseMatrix::identity(7);
    m3(1, 1) = 0.0;
    m3(1, 2) = 1.0;
    m3(2, 2) = 0.0;
    m3(2, 1) = s4;
    m3(4, 4) = s4;

    DenseMatrix r2 = DenseMatrix::identity(8);
    r2(2, 2) = s2;

    DenseMatrix r1(7, 8);
    r1(0, 1) = s6 - s2;
    r1(0, 2) = 1.0;
    r1(1, 0) = s2 + s6;
    r1(1, 2) = -1.0;
    for (std::size_t i = 2; i < 7; ++i) r1(i, i + 1) = 1.0;

    // Maps the M1 lanes (X1, X3, X5, X7, X2, X4, X6) to natural order.
    DenseMatrix p(7, 7);
    constexpr std::size_t kSourceLane[7] = {0, 4, 1, 5, 2, 6, 3};
    for (std::size_t r = 0; r < 7; ++r) p(r, kSourceLane[r]) = 1.0;

    return StageSet{
        .A = {{1, 0, 0, 0, 0, 0, 1},
              {0, 1, 0, 0, 0, 1, 0},
              {0, 0, 1, 0, 1, 0, 0},
              {0, 0, 0, 1, 0, 0, 0},
              {0, 0, 1, 0, -1, 0, 0},
              {0, 1, 0, 0, 0, -1, 0},
              {1, 0, 0, 0, 0, 0, -1}},
        .M4 = {{1, 0, 0, 0, 0, 0, 0},
               {0, 1, 0, 0, 0, 0, 0},
               {0, 0, 1, 0, 0, 0, 0},
               {0, 0, 0, 1, 0, 0, 0},
               {0, 0, 0, 0, 1, 0, 1},
               {0, 0, 0, 0, 0, 1, 0},
               {0, 0, 0, 0, 1, 0, -1}},
        .M3 = m3,
        .R3 = {{1, 0, 0, 0, 0, 0, 0},
               {0, 1, 0, 0, 0, 0, 0},
               {1, 1, 0, 0, 0, 0, 0},
               {0, 0, 1, 1, 0, 0, 0},
               {0, 0, 1, -1, 0, 0, 0},
               {0, 0, 0, 0, 1, 1, 0},
               {0, 0, 0, 0, 1, -1, 0},
               {0, 0, 0, 0, 0, 0, -1}},
        .R2 = r2,
        .R1 = r1,
        .M1 = {{1, 0, 1, 0, 0, 0, 0},
               {0, 1, 0, 1, 0, 0, 0},
               {0, 1, 0, -1, 0, 0, 0},
               {1, 0, -1, 0, 0, 0, 0},
               {0, 0, 0, 0, 1, 0, 0},
               {0, 0, 0, 0, 0, 0, 1},
               {0, 0, 0, 0, 0, 1, 0}},
        .P = p,
        .S = build_s(),
    };
  }();
  return stages;
}

DenseMatrix ctilde_direct() {
  const auto& t = trig_constants();
  const auto s = [&](int k) { return t.s[k]; };
  // Row patterns after pulling s_k out of row k.
  const DenseMatrix pattern{
      {s(2), s(4), s(6), 1, s(6), s(4), s(2)},
      {s(4), 1, s(4), 0, -s(4), -1, -s(4)},
      {s(6), s(4), -s(2), -1, -s(2), s(4), s(6)},
      {1, 0, -1, 0, 1, 0, -1},
      {s(6), -s(4), -s(2), 1, -s(2), -s(4), s(6)},
      {s(4), -1, s(4), 0, -s(4), 1, -s(4)},
      {s(2), -s(4), s(6), -1, s(6), -s(4), s(2)},
  };
  DenseMatrix out = pattern;
  const double two_root2 = 2.0 * std::numbers::sqrt2;
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) out(r, c) = two_root2 * s(static_cast<int>(r) + 1) * pattern(r, c);
  return out;
}

DenseMatrix materialize_ctilde() {
  const StageSet& st = stage_set();
  return st.S * st.P * st.M1 * st.R1 * st.R2 * st.R3 * st.M3 * st.M4 * st.A;
}

const std::array<double, 7>& scale_vector() {
  static const std::array<double, 7> scale = [] {
    const auto& t = trig_constants();
    std::array<double, 7> s{};
    for (std::size_t k = 1; k <= 7; ++k) s[k - 1] = 2.0 * std::numbers::sqrt2 * t.s[k];
    s[3] = 2.0;
    return s;
  }();
  return scale;
}

std::array<double, 8> ScaledSpectrum8::descaled() const {
  std::array<double, 8> out{};
  out[0] = dc;
  for (std::size_t i = 0; i < 7; ++i) out[i + 1] = ac_scaled[i] * scale[i];
  return out;
}

namespace detail {

const CoreConstants& core_constants() {
  static const CoreConstants k = [] {
    const auto& t = trig_constants();
    return CoreConstants{t.s[4], t.s[2], t.s[6] - t.s[2], t.s[2] + t.s[6]};
  }();
  return k;
}

void require_zero_total(double total, std::span<const double> u, const char* where) {
  double peak = 0.0;
  for (double v : u) peak = std::max(peak, std::abs(v));
  if (std::abs(total) > kNullMeanTolerance * static_cast<double>(u.size()) * peak) {
    throw NullMeanError(std::string(where) +
                        ": accumulated input does not end at zero (raw signal mean is not zero)");
  }
}

}  // namespace detail

ScaledSpectrum8 fast8_scaled(std::span<const double> input, Scenario scenario) {
  const Fast8Output<double> r = fast8_pipeline(input, scenario);
  return ScaledSpectrum8{r.dc, r.ac_scaled, scale_vector()};
}

Spectrum fast8(std::span<const double> input, Scenario scenario, bool scaled) {
  const Fast8Output<double> r = fast8_pipeline(input, scenario);
  if (scaled) {
    Spectrum out = real_spectrum({r.dc, r.ac_scaled[0], r.ac_scaled[1], r.ac_scaled[2],
                                  r.ac_scaled[3], r.ac_scaled[4], r.ac_scaled[5],
                                  r.ac_scaled[6]});
    out.scaled = true;
    out.scale.assign(1, 1.0);
    out.scale.insert(out.scale.end(), scale_vector().begin(), scale_vector().end());
    return out;
  }
  const std::array<double, 8> exact = apply_scale(r);
  return real_spectrum(std::vector<double>(exact.begin(), exact.end()));
}

}  // namespace sbpdct
