#include "sbpdct/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sbpdct {

using std::numbers::pi;

std::string_view to_string(KernelId id) {
  switch (id) {
    case KernelId::DFT: return "DFT";
    case KernelId::DHT: return "DHT";
    case KernelId::DCT2: return "DCT2";
    case KernelId::DST4: return "DST4";
  }
  return "?";
}

std::vector<double> Spectrum::real() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.real());
  return out;
}

std::vector<double> Spectrum::descaled_real() const {
  std::vector<double> out = real();
  if (scaled) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= scale.at(k);
  }
  return out;
}

Spectrum real_spectrum(std::vector<double> values) {
  Spectrum s;
  s.values.reserve(values.size());
  for (double v : values) s.values.emplace_back(v, 0.0);
  return s;
}

double dct_normalization(std::size_t n, std::size_t k) {
  // 4 / sqrt(2N) keeps row 0 exactly 1 for N = 8.
  if (k == 0) return 4.0 / std::sqrt(2.0 * static_cast<double>(n));
  return 4.0 / std::sqrt(static_cast<double>(n));
}

DenseMatrix dct_matrix(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dct_matrix: N must be at least 2");
  DenseMatrix m(n, n);
  const double two_n = 2.0 * static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double norm = dct_normalization(n, k);
    for (std::size_t i = 0; i < n; ++i) {
      m(k, i) = k == 0 ? norm : norm * std::cos(pi * static_cast<double>((2 * i + 1) * k) / two_n);
    }
  }
  return m;
}

Spectrum dct_forward(std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("dct_forward: signal length must be at least 2");
  return real_spectrum(mat_vec(dct_matrix(x.size()), x));
}

std::vector<double> dct_inverse(const Spectrum& spectrum) {
  if (spectrum.scaled) {
    throw std::invalid_argument("dct_inverse: spectrum is scaled; apply its scale vector first");
  }
  const std::vector<double> coeffs = spectrum.real();
  const DenseMatrix ct = dct_matrix(coeffs.size()).transposed();
  std::vector<double> x = mat_vec(ct, coeffs);
  for (double& v : x) v /= 8.0;
  return x;
}

std::complex<double> kernel_value(KernelId id, std::size_t n_len, std::size_t n, std::size_t k) {
  if (n >= n_len || k >= n_len) {
    throw std::out_of_range("kernel_value: index (" + std::to_string(n) + ", " +
                            std::to_string(k) + ") outside length " + std::to_string(n_len));
  }
  const double len = static_cast<double>(n_len);
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  switch (id) {
    case KernelId::DFT: {
      // Reduce nk mod N first so large products keep full accuracy.
      const double t = 2.0 * pi * static_cast<double>((n * k) % n_len) / len;
      return {std::cos(t), -std::sin(t)};
    }
    case KernelId::DHT: {
      const double t = 2.0 * pi * static_cast<double>((n * k) % n_len) / len;
      return {std::cos(t) + std::sin(t), 0.0};
    }
    case KernelId::DCT2:
      return {std::cos(pi * (2.0 * dn + 1.0) * dk / (2.0 * len)), 0.0};
    case KernelId::DST4:
      return {std::sin(pi / len * (dk + 0.5) * (dn + 0.5)), 0.0};
  }
  throw std::invalid_argument("kernel_value: unknown kernel");
}

Spectrum direct_transform(std::span<const double> x, KernelId id) {
  if (x.size() < 2) throw std::invalid_argument("direct_transform: signal length must be at least 2");
  const std::size_t n_len = x.size();
  Spectrum out;
  out.values.assign(n_len, {0.0, 0.0});
  for (std::size_t k = 0; k < n_len; ++k)
    for (std::size_t n = 0; n < n_len; ++n) out.values[k] += x[n] * kernel_value(id, n_len, n, k);
  return out;
}

}  // namespace sbpdct
