#include "sbpdct/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sbpdct/fast8.hpp"
#include "sbpdct/format.hpp"
#include "sbpdct/image2d.hpp"
#include "sbpdct/metrics.hpp"
#include "sbpdct/random.hpp"
#include "sbpdct/reference.hpp"
#include "sbpdct/rivals.hpp"
#include "sbpdct/sbp.hpp"

namespace sbpdct {

namespace {

double peak(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

double rel_err(std::span<const double> got, std::span<const double> want) {
  double diff = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) diff = std::max(diff, std::abs(got[i] - want[i]));
  const double scale = peak(want);
  return scale > 0.0 ? diff / scale : diff;
}

CheckResult bound_check(std::string name, double err, double tol) {
  return {std::move(name), err <= tol, "max_err=" + fmt12(err) + " tol=" + fmt12(tol)};
}

std::string tally_text(const OpTally& t) {
  return "mults=" + std::to_string(t.nontrivial_mults) + " adds=" + std::to_string(t.additions);
}

CheckResult count_check(std::string name, const OpTally& t, std::size_t mults, std::size_t adds) {
  const bool ok = t.nontrivial_mults == mults && t.additions == adds;
  return {std::move(name), ok,
          tally_text(t) + " expected mults=" + std::to_string(mults) +
              " adds=" + std::to_string(adds)};
}

/// Input in the scenario's convention plus the raw signal it represents.
struct ScenarioSample {
  std::vector<double> input;
  std::vector<double> raw;
};

ScenarioSample draw(SignalRng& rng, Scenario s) {
  ScenarioSample out;
  out.raw = is_null_mean(s) ? rng.null_mean_signal(8) : rng.signal(8);
  out.input = is_accumulated(s) ? accumulate(out.raw) : out.raw;
  return out;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> checks;
  SignalRng rng(opts.seed);

  // Trigonometric identities used by the rotation stage.
  {
    const auto& t = trig_constants();
    double err = 0.0;
    for (int k = 1; k < 8; ++k) err = std::max(err, std::abs(t.c[k] * t.c[k] + t.s[k] * t.s[k] - 1.0));
    err = std::max(err, std::abs(t.s[2] + t.s[6] - std::numbers::sqrt2 * t.c[2]));
    err = std::max(err, std::abs(t.s[6] - t.s[2] - std::numbers::sqrt2 * t.s[2]));
    checks.push_back(bound_check("trig-identities", err, 1e-15));
  }

  checks.push_back(
      bound_check("factorization-identity", max_abs_diff(materialize_ctilde(), ctilde_direct()), 1e-12));
  {
    const DenseMatrix diff = cyclic_forward_diff(dct_matrix(8)).block(1, 0, 7, 7);
    checks.push_back(
        bound_check("difference-matrix", max_abs_diff(-1.0 * diff, ctilde_direct()), 1e-12));
  }

  for (Scenario s : kAllScenarios) {
    double worst = 0.0;
    double worst_scaled = 0.0;
    for (std::size_t i = 0; i < opts.trials; ++i) {
      const ScenarioSample smp = draw(rng, s);
      const std::vector<double> want = dct_forward(smp.raw).real();
      const std::vector<double> got = fast8(smp.input, s, false).real();
      worst = std::max(worst, rel_err(got, want));
      const auto scaled = fast8_scaled(smp.input, s).descaled();
      for (std::size_t k = 0; k < 8; ++k) worst_scaled = std::max(worst_scaled, std::abs(scaled[k] - got[k]));
    }
    checks.push_back(bound_check("fast8-oracle-" + std::string(to_string(s)), worst, 1e-10));
    checks.push_back(bound_check("fast8-scaled-consistency-" + std::string(to_string(s)), worst_scaled, 0.0));
  }

  for (AlgorithmId alg : {AlgorithmId::Loeffler, AlgorithmId::Arai, AlgorithmId::Naive}) {
    double worst = 0.0;
    for (std::size_t i = 0; i < opts.trials; ++i) {
      const std::vector<double> x = rng.signal(8);
      const std::vector<double> want = dct_forward(x).real();
      const std::vector<double> got = [&] {
        switch (alg) {
          case AlgorithmId::Arai: return arai8(x).descaled_real();
          case AlgorithmId::Naive: return naive8(x).real();
          default: return loeffler8(x).real();
        }
      }();
      worst = std::max(worst, rel_err(got, want));
    }
    checks.push_back(bound_check("rival-oracle-" + std::string(to_string(alg)), worst, 1e-10));
  }

  for (KernelId id : kAllKernels) {
    for (std::size_t n : {4u, 8u, 16u}) {
      double worst = 0.0;
      for (int trial = 0; trial < 200; ++trial) {
        const std::vector<double> x = rng.null_mean_signal(n);
        const Spectrum a = sbp_transform(x, id);
        const Spectrum b = direct_transform(x, id);
        double diff = 0.0;
        double mag = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          diff = std::max(diff, std::abs(a.values[k] - b.values[k]));
          mag = std::max(mag, std::abs(b.values[k]));
        }
        worst = std::max(worst, mag > 0.0 ? diff / mag : diff);
      }
      checks.push_back(bound_check(
          "sbp-kernel-" + std::string(to_string(id)) + "-N" + std::to_string(n), worst, 1e-9));
    }
  }

  for (std::size_t n : {4u, 8u, 16u, 32u}) {
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::vector<double> x = rng.null_mean_signal(n);
      std::vector<double> want = dct_forward(x).real();
      std::vector<double> got = sbp_dct_general(x, false).real();
      want.erase(want.begin());
      got.erase(got.begin());
      worst = std::max(worst, rel_err(got, want));
    }
    checks.push_back(bound_check("sbp-dct-general-N" + std::to_string(n), worst, 1e-10));
  }

  {
    OpTally core;
    const std::vector<double> z = rng.signal(7);
    const auto zc = instrument(z, core);
    (void)fast8_core(std::span<const CountingScalar>(zc));
    checks.push_back(count_check("opcount-core", core, 5, 19));
    checks.push_back(count_check("opcount-proposed-i", measure_ops(AlgorithmId::Proposed, Scenario::Arbitrary, false), 11, 39));
    checks.push_back(count_check("opcount-proposed-ii", measure_ops(AlgorithmId::Proposed, Scenario::NullMean, false), 11, 25));
    checks.push_back(count_check("opcount-proposed-iv", measure_ops(AlgorithmId::Proposed, Scenario::NullMeanAccumulated, true), 5, 19));
    const OpTally iii = measure_ops(AlgorithmId::Proposed, Scenario::Accumulated, true);
    checks.push_back({"opcount-proposed-iii", iii.nontrivial_mults == 5 && iii.additions >= 29 && iii.additions <= 31,
                      tally_text(iii) + " paper adds=30"});
    checks.push_back(count_check("opcount-loeffler", measure_ops(AlgorithmId::Loeffler, Scenario::Arbitrary, false), 11, 29));
    const OpTally arai = measure_ops(AlgorithmId::Arai, Scenario::Arbitrary, true);
    checks.push_back({"opcount-arai", arai.nontrivial_mults == 5 && arai.additions >= 28 && arai.additions <= 29,
                      tally_text(arai) + " paper adds=28"});
    checks.push_back({"mu8-bound", min_mult_bound(8) == 11 &&
                                       measure_ops(AlgorithmId::Proposed, Scenario::Arbitrary, false).nontrivial_mults == 11,
                      "mu(8)=" + std::to_string(min_mult_bound(8))});
  }

  {
    Image img;
    img.width = img.height = 64;
    img.pixels.resize(64 * 64);
    for (auto& p : img.pixels) p = rng.byte();
    const ImageTransformResult r = transform_image(img, AlgorithmId::Proposed, std::nullopt);
    checks.push_back({"image-roundtrip-psnr", r.psnr_db >= 100.0, "psnr_db=" + fmt12(r.psnr_db) + " min=100"});

    const QuantTable q = QuantTable::jpeg_luminance();
    std::size_t compared = 0;
    std::size_t equal = 0;
    for (std::size_t b = 0; b < 64; ++b) {
      Block8 block{};
      for (auto& v : block) v = static_cast<double>(rng.byte()) - 128.0;
      const Dct2Result scaled = dct2_block(block, AlgorithmId::Proposed, true);
      const Dct2Result exact = dct2_block(block, AlgorithmId::Naive, false);
      const auto qa = quantize_absorbed(scaled.coeffs, scaled.scale, q);
      const auto qe = quantize_exact(exact.coeffs, q);
      for (std::size_t i = 0; i < 64; ++i) {
        if (near_rounding_tie(exact.coeffs[i], q[i])) continue;
        ++compared;
        if (qa[i] == qe[i]) ++equal;
      }
    }
    const double frac = compared ? static_cast<double>(equal) / static_cast<double>(compared) : 0.0;
    checks.push_back({"absorbed-quantization", frac >= 0.999,
                      "agree=" + std::to_string(equal) + "/" + std::to_string(compared)});
  }
  return checks;
}

std::string render_verification(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
    if (!c.passed) ++failed;
  }
  os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace sbpdct
