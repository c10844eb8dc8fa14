#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbpdct/counting.hpp"
#include "sbpdct/reference.hpp"

namespace sbpdct {

/// Input conventions: raw or prefix-summed, with or without a known zero mean.
enum class Scenario { Arbitrary, NullMean, Accumulated, NullMeanAccumulated };

inline constexpr Scenario kAllScenarios[] = {Scenario::Arbitrary, Scenario::NullMean,
                                             Scenario::Accumulated,
                                             Scenario::NullMeanAccumulated};

std::string_view to_string(Scenario s);
/// Roman numeral tag (i)..(iv).
std::string_view roman(Scenario s);
/// Accepts `arbitrary|null-mean|accumulated|null-mean-accumulated` and `i|ii|iii|iv`.
Scenario parse_scenario(std::string_view name);

inline bool is_accumulated(Scenario s) {
  return s == Scenario::Accumulated || s == Scenario::NullMeanAccumulated;
}
inline bool is_null_mean(Scenario s) {
  return s == Scenario::NullMean || s == Scenario::NullMeanAccumulated;
}

/// Raised when an operation that relies on sum(x) == 0 receives a signal
/// whose mean is not zero.
class NullMeanError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Tolerance used for the zero-mean precondition, relative to max |x|.
inline constexpr double kNullMeanTolerance = 1e-12;

bool has_null_mean(std::span<const double> x);
void require_null_mean(std::span<const double> x, std::string_view where);

template <class T>
void require_null_mean_values(std::span<const T> x, std::string_view where) {
  const std::vector<double> v = values_of(x);
  require_null_mean(v, where);
}

// -- accumulation and differencing -------------------------------------------

/// Inclusive prefix sums z[n] = x[0] + ... + x[n]; N-1 additions.
template <class T>
std::vector<T> accumulate(std::span<const T> x) {
  std::vector<T> z;
  z.reserve(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) z.push_back(n == 0 ? x[0] : z.back() + x[n]);
  return z;
}

/// Inverse of accumulate: x[0] = u[0], x[n] = u[n] - u[n-1]; N-1 subtractions.
template <class T>
std::vector<T> forward_difference_signal(std::span<const T> u) {
  if (u.size() < 2) throw std::invalid_argument("forward_difference_signal: length must be at least 2");
  std::vector<T> x;
  x.reserve(u.size());
  x.push_back(u[0]);
  for (std::size_t n = 1; n < u.size(); ++n) x.push_back(u[n] - u[n - 1]);
  return x;
}

// -- DC removal ----------------------------------------------------------------

inline void require_power_of_two(std::size_t n, std::string_view where) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw std::invalid_argument(std::string(where) + ": length " + std::to_string(n) +
                                " is not a power of two");
  }
}

template <class T>
struct DcRemoval {
  T sum;                  ///< x[0] + ... + x[N-1]; equals X[0] of the DCT.
  std::vector<T> head;    ///< x[n] - mean for n = 0..N-2.
};

/// The DC-removal stage as it feeds the accumulator: N-1 additions for the
/// sum, a shift for the mean and N-1 subtractions. The last centered sample
/// is never formed, since the accumulator's final output is zero by
/// construction.
template <class T>
DcRemoval<T> remove_dc_head(std::span<const T> x) {
  require_power_of_two(x.size(), "remove_dc");
  T sum = x[0];
  for (std::size_t n = 1; n < x.size(); ++n) sum = sum + x[n];
  const T mean = sum * (1.0 / static_cast<double>(x.size()));
  DcRemoval<T> out{sum, {}};
  out.head.reserve(x.size() - 1);
  for (std::size_t n = 0; n + 1 < x.size(); ++n) out.head.push_back(x[n] - mean);
  return out;
}

/// x - mean(x), full length.
std::vector<double> remove_dc(std::span<const double> x);

/// Given u = accumulate(x), returns accumulate(x - mean(x)) without
/// differencing: z[n] = u[n] - (n+1) u[N-1] / N, z[N-1] = 0. The multiples
/// (n+1)m of m = u[N-1]/N come from shifts plus one addition per odd
/// multiple below N-1; (N-1)m is u[N-1] - m. For N = 8 that is 3 + 7 = 10
/// additions and no non-trivial products.
template <class T>
std::vector<T> remove_dc_accumulated(std::span<const T> u) {
  const std::size_t n_len = u.size();
  require_power_of_two(n_len, "remove_dc_accumulated");
  const T& total = u[n_len - 1];
  std::vector<T> multiple(n_len);  // multiple[k] = k * m, k = 1..N-1
  multiple[1] = total * (1.0 / static_cast<double>(n_len));
  for (std::size_t k = 2; k < n_len; ++k) {
    if (k == n_len - 1) {
      multiple[k] = total - multiple[1];
    } else if (k % 2 == 0) {
      multiple[k] = multiple[k / 2] * 2.0;
    } else {
      multiple[k] = multiple[k - 1] + multiple[1];
    }
  }
  std::vector<T> z;
  z.reserve(n_len);
  for (std::size_t n = 0; n + 1 < n_len; ++n) z.push_back(u[n] - multiple[n + 1]);
  z.push_back(T(0.0));
  return z;
}

inline std::vector<double> accumulate(const std::vector<double>& x) {
  return accumulate(std::span<const double>(x));
}
inline std::vector<double> forward_difference_signal(const std::vector<double>& u) {
  return forward_difference_signal(std::span<const double>(u));
}
inline std::vector<double> remove_dc_accumulated(const std::vector<double>& u) {
  return remove_dc_accumulated(std::span<const double>(u));
}

// -- generic summation-by-parts transform --------------------------------------

/// X[k] = -sum_{n=0}^{N-2} z[n] (ker[n+1,k] - ker[n,k]), z = accumulate(x).
/// Requires a zero-mean x (NullMeanError otherwise).
Spectrum sbp_transform(std::span<const double> x, KernelId id);

/// ker[n+1,k] - ker[n,k] for the unnormalized DCT-II kernel,
/// = -2 sin(k pi / 2N) sin(k pi (n+1) / N). Valid for 0 <= n <= N-2, 1 <= k <= N-1.
double dct_delta_kernel(std::size_t n_len, std::size_t n, std::size_t k);

/// Diagonal post-factor (4/sqrt N) alpha_k 2 sin(k pi / 2N).
double sbp_dct_post_factor(std::size_t n_len, std::size_t k);

/// The (N-1)x(N-1) sine matrix sin(k pi (n+1) / N), rows k = 1..N-1.
DenseMatrix sbp_sine_matrix(std::size_t n_len);

/// DCT of a zero-mean signal of any length via the sine matrix on the
/// accumulated input. X[0] = 0. With `scaled`, values hold the bare sine
/// products and `scale` holds the post-factors.
Spectrum sbp_dct_general(std::span<const double> x, bool scaled);

}  // namespace sbpdct
