#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sbpdct/random.hpp"
#include "sbpdct/rivals.hpp"

using namespace sbpdct;

namespace {

double rel_err(const std::vector<double>& got, const std::vector<double>& want) {
  double diff = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    diff = std::max(diff, std::abs(got[i] - want[i]));
    peak = std::max(peak, std::abs(want[i]));
  }
  return peak > 0.0 ? diff / peak : diff;
}

template <class F>
OpTally tally_of(F&& f) {
  OpTally t;
  const auto xc = instrument(std::vector<double>{3, 1, 4, 1, 5, 9, 2, 6}, t);
  (void)f(std::span<const CountingScalar>(xc));
  return t;
}

}  // namespace

TEST_CASE("loeffler") {
  const auto dc = loeffler8(std::vector<double>(8, 1.0)).real();
  CHECK(dc[0] == 8.0);
  for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(dc[k]) < 1e-14);

  SignalRng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<double> x = rng.signal(8);
    REQUIRE(rel_err(loeffler8(x).real(), dct_forward(x).real()) <= 1e-10);
  }
  const OpTally t = tally_of([](auto x) { return loeffler8_generic(x); });
  CHECK(t.nontrivial_mults == 11);
  CHECK(t.additions == 29);
  CHECK_THROWS_AS(loeffler8(std::vector<double>(4, 0.0)), std::invalid_argument);
}

TEST_CASE("arai") {
  const Spectrum dc = arai8(std::vector<double>(8, 1.0));
  CHECK(dc.values[0].real() == doctest::Approx(8.0 / arai_scale_vector()[0]));
  for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(dc.values[k].real()) < 1e-14);

  SignalRng rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<double> x = rng.signal(8);
    REQUIRE(rel_err(arai8(x).descaled_real(), dct_forward(x).real()) <= 1e-10);
  }
  const OpTally t = tally_of([](auto x) { return arai8_generic(x); });
  CHECK(t.nontrivial_mults == 5);
  CHECK(t.additions >= 28);
  CHECK(t.additions <= 29);
}

TEST_CASE("naive") {
  SignalRng rng(41);
  const std::vector<double> x = rng.signal(8);
  CHECK(naive8(x).real() == dct_forward(x).real());
  for (double v : naive8(std::vector<double>(8, 0.0)).real()) CHECK(v == 0.0);
  const OpTally t = tally_of([](auto x) { return naive8_generic(x); });
  CHECK(t.additions == 56);
  CHECK(t.nontrivial_mults + t.trivial_mults == 64);
  CHECK(t.trivial_mults == 16);
}

TEST_CASE("rivals under every scenario") {
  SignalRng rng(43);
  for (AlgorithmId alg : kAllAlgorithms) {
    for (Scenario s : kAllScenarios) {
      CAPTURE(to_string(alg));
      CAPTURE(to_string(s));
      for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> raw = is_null_mean(s) ? rng.null_mean_signal(8) : rng.signal(8);
        const std::vector<double> in = is_accumulated(s) ? accumulate(raw) : raw;
        const auto got = run_algorithm<double>(alg, std::span<const double>(in), s, false);
        CHECK(rel_err(std::vector<double>(got.begin(), got.end()), dct_forward(raw).real()) <= 1e-10);
        if (supports_scaled(alg)) {
          const auto sc = run_algorithm<double>(alg, std::span<const double>(in), s, true);
          const auto scale = algorithm_scale(alg);
          std::vector<double> d(8);
          for (std::size_t k = 0; k < 8; ++k) d[k] = sc[k] * scale[k];
          CHECK(rel_err(d, dct_forward(raw).real()) <= 1e-10);
        }
      }
    }
  }
  const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(run_algorithm<double>(AlgorithmId::Loeffler, std::span<const double>(x),
                                        Scenario::Arbitrary, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_algorithm<double>(AlgorithmId::Arai, std::span<const double>(x),
                                        Scenario::NullMean, false),
                  NullMeanError);
}

TEST_CASE("algorithm names") {
  for (AlgorithmId id : kAllAlgorithms) CHECK(parse_algorithm(to_string(id)) == id);
  CHECK_THROWS_AS(parse_algorithm("chen"), std::invalid_argument);
}
