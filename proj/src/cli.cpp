#include "sbpdct/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sbpdct/fast8.hpp"
#include "sbpdct/format.hpp"
#include "sbpdct/image2d.hpp"
#include "sbpdct/metrics.hpp"
#include "sbpdct/random.hpp"
#include "sbpdct/rivals.hpp"
#include "sbpdct/verify.hpp"

namespace sbpdct {

namespace {

/// Usage or I/O problem: reported on stderr, exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<double> read_signal_file(const std::string& path) {
  if (path == "-") return parse_signal(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open signal file '" + path + "'");
  return parse_signal(in);
}

Image load_image(const std::string& path) {
  try {
    return read_pgm_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(std::string("unreadable image: ") + e.what());
  }
}

struct Options {
  std::string algorithm = "proposed";
  std::string scenario = "arbitrary";
  bool scaled = false;
  std::string in;
  std::string out;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  bool csv = false;
  double quant_scale = 1.0;
  bool no_quant = false;
  std::size_t size = 64;
};

// Writes to --out when given, otherwise to the command's stdout.
void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + opt.out + "'");
}

int cmd_transform(const Options& opt, std::ostream& out) {
  const AlgorithmId alg = parse_algorithm(opt.algorithm);
  const Scenario scenario = parse_scenario(opt.scenario);
  const std::vector<double> x = read_signal_file(opt.in);
  if (x.size() != 8) {
    throw UsageError("signal must have 8 samples, got " + std::to_string(x.size()));
  }
  const std::array<double, 8> coeffs =
      run_algorithm<double>(alg, std::span<const double>(x), scenario, opt.scaled);
  std::ostringstream os;
  if (opt.scaled) {
    const std::array<double, 8> scale = algorithm_scale(alg);
    os << "# coefficient,scale\n";
    for (std::size_t k = 0; k < 8; ++k) os << fmt12(coeffs[k]) << "," << fmt12(scale[k]) << "\n";
  } else {
    for (double c : coeffs) os << fmt12(c) << "\n";
  }
  emit(opt, out, os.str());
  return kExitOk;
}

std::optional<QuantTable> quant_table(const Options& opt) {
  if (opt.no_quant) return std::nullopt;
  return QuantTable::jpeg_luminance(opt.quant_scale);
}

int cmd_transform2d(const Options& opt, std::ostream& out) {
  const AlgorithmId alg = parse_algorithm(opt.algorithm);
  const Image img = load_image(opt.in);
  const ImageTransformResult r = transform_image(img, alg, quant_table(opt));
  std::ostringstream os;
  write_coefficients_csv(os, r.coefficients);
  emit(opt, out, os.str());
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const std::vector<CheckResult> checks = run_verification({opt.seed, opt.trials});
  emit(opt, out, "seed=" + std::to_string(opt.seed) + "\n" + render_verification(checks));
  for (const auto& c : checks) {
    if (!c.passed) return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_opcount(const Options& opt, std::ostream& out) {
  const AlgorithmId alg = parse_algorithm(opt.algorithm);
  const Scenario scenario = parse_scenario(opt.scenario);
  if (opt.scaled && !supports_scaled(alg)) {
    throw UsageError(std::string(to_string(alg)) + " has no scaled form");
  }
  const OpTally t = measure_ops(alg, scenario, opt.scaled);
  emit(opt, out,
       "mults=" + std::to_string(t.nontrivial_mults) + " adds=" + std::to_string(t.additions) + "\n");
  return kExitOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
  const auto rows = complexity_report();
  emit(opt, out, opt.csv ? render_csv(rows) : render_table(rows));
  return kExitOk;
}

Image synthetic_image(std::size_t size, std::uint64_t seed) {
  // Smooth gradient plus mild noise, so quantization has something to keep.
  SignalRng rng(seed);
  Image img;
  img.width = img.height = size;
  img.pixels.resize(size * size);
  for (std::size_t y = 0; y < size; ++y)
    for (std::size_t x = 0; x < size; ++x) {
      const double base = 128.0 + 60.0 * std::sin(0.11 * static_cast<double>(x)) *
                                      std::cos(0.07 * static_cast<double>(y));
      const double v = base + rng.uniform(-8.0, 8.0);
      img.pixels[y * size + x] = static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
    }
  return img;
}

int cmd_demo(const Options& opt, std::ostream& out) {
  const AlgorithmId alg = parse_algorithm(opt.algorithm);
  const Image img = opt.in.empty() ? synthetic_image(opt.size, opt.seed) : load_image(opt.in);
  const ImageTransformResult r = transform_image(img, alg, quant_table(opt));
  std::size_t nonzero = 0;
  for (const auto& b : r.coefficients)
    for (double v : b) nonzero += v != 0.0;
  if (!opt.out.empty()) {
    try {
      write_pgm_file(opt.out, r.reconstruction);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  out << "image=" << img.width << "x" << img.height << " blocks=" << r.coefficients.size()
      << " algorithm=" << to_string(alg) << "\n"
      << "nonzero_coefficients=" << nonzero << "/" << r.coefficients.size() * 64 << "\n"
      << "psnr_db=" << fmt12(r.psnr_db) << "\n";
  return kExitOk;
}

}  // namespace

std::vector<double> parse_signal(std::istream& in) {
  std::vector<double> x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string tok = trim(line);
    if (tok.empty()) continue;
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed signal file: line " + std::to_string(lineno) +
                                  " ('" + tok + "') is not a number");
    }
    x.push_back(v);
  }
  return x;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Summation-by-parts DCT toolkit"};
  app.require_subcommand(1, 1);
  Options opt;

  const auto add_alg = [&](CLI::App* c) {
    c->add_option("--algorithm", opt.algorithm, "naive|proposed|loeffler|arai")->capture_default_str();
  };
  const auto add_scenario = [&](CLI::App* c) {
    c->add_option("--scenario", opt.scenario,
                  "arbitrary|null-mean|accumulated|null-mean-accumulated (or i|ii|iii|iv)")
        ->capture_default_str();
  };
  const auto add_quant = [&](CLI::App* c) {
    c->add_option("--quant-scale", opt.quant_scale, "multiplier for the JPEG luminance table")
        ->capture_default_str();
    c->add_flag("--no-quant", opt.no_quant, "skip quantization");
  };

  CLI::App* transform = app.add_subcommand("transform", "8-point transform of a signal file");
  add_alg(transform);
  add_scenario(transform);
  transform->add_flag("--scaled", opt.scaled, "emit scaled coefficients and the scale vector");
  transform->add_option("--in", opt.in, "signal file ('-' for stdin)")->required();
  transform->add_option("--out", opt.out, "output file");

  CLI::App* transform2d = app.add_subcommand("transform2d", "blockwise 2D DCT of a PGM image");
  add_alg(transform2d);
  add_quant(transform2d);
  transform2d->add_option("--in", opt.in, "binary PGM image")->required();
  transform2d->add_option("--out", opt.out, "coefficient CSV");

  CLI::App* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--seed", opt.seed)->capture_default_str();
  verify->add_option("--trials", opt.trials, "random inputs per scenario")->capture_default_str();
  verify->add_option("--out", opt.out, "report file");

  CLI::App* opcount = app.add_subcommand("opcount", "count arithmetic of one algorithm");
  add_alg(opcount);
  add_scenario(opcount);
  opcount->add_flag("--scaled", opt.scaled, "stop before the scale stage");

  CLI::App* table = app.add_subcommand("table", "print the complexity comparison table");
  table->add_flag("--csv", opt.csv, "CSV instead of aligned text");
  table->add_option("--out", opt.out, "output file");

  CLI::App* demo = app.add_subcommand("demo-compress", "quantize and reconstruct an image");
  add_alg(demo);
  add_quant(demo);
  demo->add_option("--in", opt.in, "binary PGM image (synthetic when omitted)");
  demo->add_option("--out", opt.out, "reconstructed PGM");
  demo->add_option("--seed", opt.seed, "seed for the synthetic image")->capture_default_str();
  demo->add_option("--size", opt.size, "synthetic image side")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform) return cmd_transform(opt, out);
    if (*transform2d) return cmd_transform2d(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*opcount) return cmd_opcount(opt, out);
    if (*table) return cmd_table(opt, out);
    if (*demo) return cmd_demo(opt, out);
  } catch (const NullMeanError& e) {
    err << "error: scenario/input mismatch: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sbpdct
