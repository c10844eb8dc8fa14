#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "sbpdct/numerics.hpp"

namespace sbpdct {

enum class KernelId { DFT, DHT, DCT2, DST4 };

inline constexpr KernelId kAllKernels[] = {KernelId::DFT, KernelId::DHT, KernelId::DCT2,
                                           KernelId::DST4};

std::string_view to_string(KernelId id);

/// Transform-domain vector. Real kernels leave the imaginary parts at zero.
/// When `scaled` is set, the true coefficients are values[k] * scale[k].
struct Spectrum {
  std::vector<std::complex<double>> values;
  bool scaled = false;
  std::vector<double> scale;

  std::size_t size() const { return values.size(); }
  std::vector<double> real() const;
  /// values with the scale vector applied (identity when not scaled).
  std::vector<double> descaled_real() const;
};

Spectrum real_spectrum(std::vector<double> values);

/// C_N with entry (k,n) = (4/sqrt N) * alpha_k * cos(pi (2n+1) k / 2N),
/// alpha_0 = 1/sqrt 2, alpha_k = 1 otherwise. Row 0 is all ones for N = 8.
DenseMatrix dct_matrix(std::size_t n);

/// Per-row normalization (4/sqrt N) * alpha_k.
double dct_normalization(std::size_t n, std::size_t k);

Spectrum dct_forward(std::span<const double> x);
/// C_N^T X / 8. Holds for every N because C_N is 2 sqrt 2 times an orthonormal matrix.
std::vector<double> dct_inverse(const Spectrum& spectrum);

std::complex<double> kernel_value(KernelId id, std::size_t n_len, std::size_t n, std::size_t k);

/// X[k] = sum_n x[n] ker[n,k], no normalization.
Spectrum direct_transform(std::span<const double> x, KernelId id);

}  // namespace sbpdct
