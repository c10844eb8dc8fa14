#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sbpdct/random.hpp"
#include "sbpdct/reference.hpp"

using namespace sbpdct;

namespace {

double max_abs(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("dct matrix entries") {
  const DenseMatrix c = dct_matrix(8);
  CHECK(c(0, 0) == 1.0);
  CHECK(std::abs(c(1, 0) - 1.38703984532214746) < 1e-14);
  const DenseMatrix c2 = dct_matrix(2);
  CHECK(std::abs(c2(0, 0) - 2.0) < 1e-14);
  CHECK(std::abs(c2(0, 1) - 2.0) < 1e-14);
  CHECK(std::abs(c2(1, 0) - 2.0) < 1e-14);
  CHECK(std::abs(c2(1, 1) + 2.0) < 1e-14);
  CHECK_THROWS_AS(dct_matrix(1), std::invalid_argument);
}

TEST_CASE("dct matrix structure") {
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    const DenseMatrix c = dct_matrix(n);
    for (std::size_t k = 1; k < n; ++k) {
      double s = 0.0;
      for (double e : c.row(k)) s += e;
      CHECK(std::abs(s) < 1e-12);
    }
    for (double e : c.row(0)) CHECK(std::abs(e - 4.0 / std::sqrt(2.0 * n)) < 1e-15);
  }
  const DenseMatrix c = dct_matrix(8);
  CHECK(max_abs_diff(c * c.transposed(), 8.0 * DenseMatrix::identity(8)) < 1e-12);
}

TEST_CASE("dct forward") {
  CHECK(dct_forward(std::vector<double>(8, 1.0)).real()[0] == 8.0);
  const auto zeros = dct_forward(std::vector<double>(8, 0.0)).real();
  for (double v : zeros) CHECK(v == 0.0);

  // mpmath reference values for the alternating signal.
  const std::vector<double> alt{1, -1, 1, -1, 1, -1, 1, -1};
  const std::vector<double> x = dct_forward(alt).real();
  const double want[8] = {0.0, 1.44191964401389583, 0.0, 1.70086018953451290,
                          0.0, 2.54551716114566788, 0.0, 7.24901957082310274};
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(x[k] - want[k]) < 1e-13);

  SignalRng rng(11);
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<double> v = rng.signal(n);
      const auto got = dct_forward(v).real();
      CHECK(max_abs(got, mat_vec(dct_matrix(n), v)) < 1e-12);
      double sum = 0.0;
      for (double e : v) sum += e;
      CHECK(std::abs(got[0] - sum * 4.0 / std::sqrt(2.0 * n)) < 1e-12);
    }
  }
}

TEST_CASE("dct inverse") {
  const std::vector<double> ones(8, 1.0);
  CHECK(max_abs(dct_inverse(dct_forward(ones)), ones) < 1e-15);
  CHECK(max_abs(dct_inverse(real_spectrum({8, 0, 0, 0, 0, 0, 0, 0})), ones) < 1e-15);

  SignalRng rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = trial % 2 ? 8 : 16;
    const std::vector<double> x = rng.signal(n);
    worst = std::max(worst, max_abs(dct_inverse(dct_forward(x)), x));
  }
  CHECK(worst <= 1e-12);

  Spectrum s = dct_forward(ones);
  s.scaled = true;
  s.scale.assign(8, 1.0);
  CHECK_THROWS_AS(dct_inverse(s), std::invalid_argument);
}

TEST_CASE("kernel values") {
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(kernel_value(KernelId::DHT, 8, n, 0) == std::complex<double>(1.0, 0.0));
    CHECK(kernel_value(KernelId::DHT, 8, 0, n) == std::complex<double>(1.0, 0.0));
  }
  CHECK(std::abs(kernel_value(KernelId::DCT2, 8, 0, 1).real() - 0.980785280403230449) < 1e-15);
  const auto w = kernel_value(KernelId::DFT, 4, 1, 1);
  CHECK(std::abs(w.real()) < 1e-15);
  CHECK(w.imag() == doctest::Approx(-1.0));
  CHECK(kernel_value(KernelId::DST4, 4, 0, 0).real() ==
        doctest::Approx(std::sin(std::numbers::pi / 16.0)));
  CHECK_THROWS_AS(kernel_value(KernelId::DCT2, 8, 8, 0), std::out_of_range);
  CHECK_THROWS_AS(kernel_value(KernelId::DFT, 8, 0, 9), std::out_of_range);
}

TEST_CASE("direct transform") {
  for (std::size_t n : {4u, 8u}) {
    const Spectrum s = direct_transform(std::vector<double>(n, 1.0), KernelId::DCT2);
    CHECK(s.values[0].real() == doctest::Approx(static_cast<double>(n)));
  }
  for (const auto& v : direct_transform(std::vector<double>(8, 0.0), KernelId::DHT).values) {
    CHECK(v == std::complex<double>(0.0, 0.0));
  }
  const Spectrum impulse = direct_transform(std::vector<double>{1, 0, 0, 0}, KernelId::DFT);
  for (const auto& v : impulse.values) {
    CHECK(v.real() == doctest::Approx(1.0));
    CHECK(v.imag() == doctest::Approx(0.0));
  }

  SignalRng rng(9);
  for (std::size_t n : {4u, 8u, 16u}) {
    const std::vector<double> x = rng.signal(n);
    const auto bare = direct_transform(x, KernelId::DCT2).real();
    const auto want = dct_forward(x).real();
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(bare[k] * dct_normalization(n, k) - want[k]) < 1e-12);
    }
  }
}
