#include "sbpdct/sbp.hpp"

#include <numbers>

namespace sbpdct {

using std::numbers::pi;

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::Arbitrary: return "arbitrary";
    case Scenario::NullMean: return "null-mean";
    case Scenario::Accumulated: return "accumulated";
    case Scenario::NullMeanAccumulated: return "null-mean-accumulated";
  }
  return "?";
}

std::string_view roman(Scenario s) {
  switch (s) {
    case Scenario::Arbitrary: return "i";
    case Scenario::NullMean: return "ii";
    case Scenario::Accumulated: return "iii";
    case Scenario::NullMeanAccumulated: return "iv";
  }
  return "?";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : kAllScenarios) {
    if (name == to_string(s) || name == roman(s)) return s;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(name) +
                              "' (expected arbitrary|null-mean|accumulated|"
                              "null-mean-accumulated or i|ii|iii|iv)");
}

bool has_null_mean(std::span<const double> x) {
  double sum = 0.0;
  double peak = 0.0;
  for (double v : x) {
    sum += v;
    peak = std::max(peak, std::abs(v));
  }
  if (x.empty() || peak == 0.0) return true;
  return std::abs(sum) / static_cast<double>(x.size()) <= kNullMeanTolerance * peak;
}

void require_null_mean(std::span<const double> x, std::string_view where) {
  if (!has_null_mean(x)) {
    throw NullMeanError(std::string(where) +
                        ": input does not have zero mean (remove the DC level first)");
  }
}

std::vector<double> remove_dc(std::span<const double> x) {
  DcRemoval<double> r = remove_dc_head(x);
  const double mean = r.sum * (1.0 / static_cast<double>(x.size()));
  r.head.push_back(x.back() - mean);
  return std::move(r.head);
}

Spectrum sbp_transform(std::span<const double> x, KernelId id) {
  if (x.size() < 2) throw std::invalid_argument("sbp_transform: length must be at least 2");
  require_null_mean(x, "sbp_transform");
  const std::size_t n_len = x.size();
  const std::vector<double> z = accumulate(x);
  Spectrum out;
  out.values.assign(n_len, {0.0, 0.0});
  for (std::size_t k = 0; k < n_len; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n + 1 < n_len; ++n) {
      acc += z[n] * (kernel_value(id, n_len, n + 1, k) - kernel_value(id, n_len, n, k));
    }
    out.values[k] = -acc;
  }
  return out;
}

double dct_delta_kernel(std::size_t n_len, std::size_t n, std::size_t k) {
  if (n_len < 2 || n + 2 > n_len || k < 1 || k >= n_len) {
    throw std::out_of_range("dct_delta_kernel: need 0 <= n <= N-2 and 1 <= k <= N-1 (N=" +
                            std::to_string(n_len) + ", n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  }
  const double len = static_cast<double>(n_len);
  const double dk = static_cast<double>(k);
  return -2.0 * std::sin(dk * pi / (2.0 * len)) *
         std::sin(dk * pi * static_cast<double>(n + 1) / len);
}

double sbp_dct_post_factor(std::size_t n_len, std::size_t k) {
  return dct_normalization(n_len, k) * 2.0 *
         std::sin(static_cast<double>(k) * pi / (2.0 * static_cast<double>(n_len)));
}

DenseMatrix sbp_sine_matrix(std::size_t n_len) {
  if (n_len < 2) throw std::invalid_argument("sbp_sine_matrix: N must be at least 2");
  const std::size_t m = n_len - 1;
  DenseMatrix s(m, m);
  const double len = static_cast<double>(n_len);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t n = 0; n < m; ++n)
      s(r, n) = std::sin(static_cast<double>(r + 1) * pi * static_cast<double>(n + 1) / len);
  return s;
}

Spectrum sbp_dct_general(std::span<const double> x, bool scaled) {
  if (x.size() < 2) throw std::invalid_argument("sbp_dct_general: length must be at least 2");
  require_null_mean(x, "sbp_dct_general");
  const std::size_t n_len = x.size();
  const std::vector<double> z = accumulate(x);
  const std::vector<double> bare =
      mat_vec(sbp_sine_matrix(n_len), std::span<const double>(z.data(), n_len - 1));

  Spectrum out;
  out.values.assign(n_len, {0.0, 0.0});
  out.scaled = scaled;
  if (scaled) out.scale.assign(n_len, 1.0);
  for (std::size_t k = 1; k < n_len; ++k) {
    const double factor = sbp_dct_post_factor(n_len, k);
    if (scaled) {
      out.values[k] = bare[k - 1];
      out.scale[k] = factor;
    } else {
      out.values[k] = factor * bare[k - 1];
    }
  }
  return out;
}

}  // namespace sbpdct
