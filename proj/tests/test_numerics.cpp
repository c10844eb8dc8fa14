#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "sbpdct/counting.hpp"
#include "sbpdct/numerics.hpp"
#include "sbpdct/random.hpp"
#include "sbpdct/reference.hpp"

using namespace sbpdct;

TEST_CASE("trig constants") {
  const auto& t = trig_constants();
  CHECK(t.c[4] == doctest::Approx(0.7071067811865476).epsilon(1e-16));
  CHECK(std::abs(t.c[4] - t.s[4]) <= 1e-15);
  // mpmath, 30 digits
  CHECK(std::abs(t.c[1] - 0.980785280403230449) < 1e-15);
  CHECK(std::abs(t.s[1] - 0.195090322016128268) < 1e-15);
  for (int k = 1; k < 8; ++k) CHECK(std::abs(t.c[k] * t.c[k] + t.s[k] * t.s[k] - 1.0) <= 1e-15);
  CHECK(std::abs(t.s[2] + t.s[6] - std::numbers::sqrt2 * t.c[2]) <= 1e-15);
  CHECK(std::abs(t.s[6] - t.s[2] - std::numbers::sqrt2 * t.s[2]) <= 1e-15);
}

TEST_CASE("cyclic forward difference") {
  SUBCASE("constant row") {
    const DenseMatrix m{{5, 5, 5, 5}, {5, 5, 5, 5}, {5, 5, 5, 5}, {5, 5, 5, 5}};
    const DenseMatrix d = cyclic_forward_diff(m);
    for (double e : d.entries()) CHECK(e == 0.0);
  }
  SUBCASE("wrap term") {
    const DenseMatrix m{{0, 1, 3, 6}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    const DenseMatrix d = cyclic_forward_diff(m);
    CHECK(d(0, 0) == 1.0);
    CHECK(d(0, 1) == 2.0);
    CHECK(d(0, 2) == 3.0);
    CHECK(d(0, 3) == -6.0);
  }
  SUBCASE("dct matrix entry") {
    const DenseMatrix d = cyclic_forward_diff(dct_matrix(8));
    CHECK(std::abs(d(1, 7) - 2.77407969064429492) < 1e-14);
  }
  SUBCASE("non-square rejected") {
    CHECK_THROWS_AS(cyclic_forward_diff(DenseMatrix(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("rows with equal sums difference to zero-sum rows") {
  SignalRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    // The cyclic difference of any row telescopes to zero.
    DenseMatrix m(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = rng.uniform(-3, 3);
    const DenseMatrix d = cyclic_forward_diff(m);
    for (std::size_t r = 0; r < 6; ++r) {
      double s = 0.0;
      for (double e : d.row(r)) s += e;
      CHECK(std::abs(s) < 1e-13);
    }
  }
}

TEST_CASE("trivial multiplicands") {
  CHECK(is_trivial_multiplicand(2.0));
  CHECK(is_trivial_multiplicand(1.0));
  CHECK(is_trivial_multiplicand(-1.0));
  CHECK(is_trivial_multiplicand(0.0));
  CHECK(is_trivial_multiplicand(0.125));
  for (int k = -10; k <= 10; ++k) {
    CHECK(is_trivial_multiplicand(std::ldexp(1.0, k)));
    CHECK(is_trivial_multiplicand(-std::ldexp(1.0, k)));
  }
  CHECK(is_trivial_multiplicand(2.0 * std::numbers::sqrt2 * trig_constants().s[4]));
  CHECK_FALSE(is_trivial_multiplicand(2.0 * std::numbers::sqrt2 * std::sin(std::numbers::pi / 16)));
  CHECK_FALSE(is_trivial_multiplicand(0.5411961001461970));
  CHECK_FALSE(is_trivial_multiplicand(3.0));
  CHECK_FALSE(is_trivial_multiplicand(std::numbers::sqrt2));
}

TEST_CASE("mat_vec") {
  const std::vector<double> v{1, 2, 3};
  CHECK(mat_vec(DenseMatrix::identity(3), v) == v);
  CHECK(mat_vec(DenseMatrix(2, 2), std::vector<double>{7, 9}) == std::vector<double>{0, 0});
  const std::vector<double> ones(8, 1.0);
  const std::vector<double> x = mat_vec(dct_matrix(8), ones);
  CHECK(x[0] == doctest::Approx(8.0));
  for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(x[k]) < 1e-14);
  CHECK_THROWS_AS(mat_vec(DenseMatrix(2, 3), std::vector<double>{1, 2}), std::invalid_argument);
}

TEST_CASE("counting scalar") {
  SUBCASE("tallies runtime arithmetic only") {
    OpTally t;
    const CountingScalar a(1.5, t), b(2.25, t);
    const CountingScalar k1 = CountingScalar(3.0) * 0.5;  // constant folding
    CHECK(t == OpTally{});
    const CountingScalar s = a + b;
    const CountingScalar d = a - b;
    const CountingScalar p = s * 0.3;
    const CountingScalar q = d * 2.0;
    const CountingScalar r = -p;
    const CountingScalar m = a * b;
    (void)k1;
    (void)r;
    CHECK(t.additions == 2);
    CHECK(t.nontrivial_mults == 2);
    CHECK(t.trivial_mults == 1);
    CHECK(q.value() == (1.5 - 2.25) * 2.0);
    CHECK(m.value() == 1.5 * 2.25);
  }
  SUBCASE("value transparent") {
    SignalRng rng(3);
    const std::vector<double> x = rng.signal(8);
    OpTally t;
    const auto xc = instrument(x, t);
    const DenseMatrix c = dct_matrix(8);
    const auto plain = mat_vec(c, x);
    const auto counted = mat_vec(c, std::span<const CountingScalar>(xc));
    for (std::size_t i = 0; i < 8; ++i) CHECK(plain[i] == counted[i].value());
    CHECK(t.additions == 56);
    CHECK(t.nontrivial_mults + t.trivial_mults == 64);
  }
  SUBCASE("mixing sinks is an error") {
    OpTally t1, t2;
    CHECK_THROWS_AS(CountingScalar(1.0, t1) + CountingScalar(1.0, t2), std::logic_error);
  }
}
