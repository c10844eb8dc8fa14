#include "sbpdct/image2d.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "sbpdct/format.hpp"

namespace sbpdct {

QuantTable::QuantTable(const std::array<double, 64>& steps) : steps_(steps) {
  for (double s : steps_) {
    if (!(s >= 1.0)) throw std::invalid_argument("QuantTable: step sizes must be >= 1");
  }
}

QuantTable QuantTable::uniform(double step) {
  std::array<double, 64> s{};
  s.fill(step);
  return QuantTable(s);
}

QuantTable QuantTable::jpeg_luminance(double factor) {
  static constexpr std::array<int, 64> kLuma = {
      16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
      14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
      18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
      49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};
  if (!(factor > 0.0)) throw std::invalid_argument("QuantTable: factor must be positive");
  std::array<double, 64> s{};
  for (std::size_t i = 0; i < 64; ++i) s[i] = std::max(1.0, std::round(kLuma[i] * factor));
  return QuantTable(s);
}

namespace {

std::array<double, 8> transform_line(const std::array<double, 8>& line, AlgorithmId alg,
                                     bool scaled) {
  return run_algorithm<double>(alg, std::span<const double>(line), Scenario::Arbitrary, scaled);
}

}  // namespace

Dct2Result dct2_block(const Block8& block, AlgorithmId alg, bool scaled) {
  if (scaled && !supports_scaled(alg)) scaled = false;
  Block8 rows{};
  for (std::size_t r = 0; r < 8; ++r) {
    std::array<double, 8> line{};
    std::copy_n(block.begin() + static_cast<std::ptrdiff_t>(r * 8), 8, line.begin());
    const auto out = transform_line(line, alg, scaled);
    std::copy(out.begin(), out.end(), rows.begin() + static_cast<std::ptrdiff_t>(r * 8));
  }
  Dct2Result res;
  for (std::size_t c = 0; c < 8; ++c) {
    std::array<double, 8> line{};
    for (std::size_t r = 0; r < 8; ++r) line[r] = rows[r * 8 + c];
    const auto out = transform_line(line, alg, scaled);
    for (std::size_t r = 0; r < 8; ++r) res.coeffs[r * 8 + c] = out[r];
  }
  const std::array<double, 8> s = scaled ? algorithm_scale(alg) : std::array<double, 8>{1, 1, 1, 1, 1, 1, 1, 1};
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) res.scale[r * 8 + c] = s[r] * s[c];
  return res;
}

namespace {

const DenseMatrix& c8() {
  static const DenseMatrix m = dct_matrix(8);
  return m;
}

DenseMatrix to_matrix(const Block8& b) { return DenseMatrix(8, 8, std::vector<double>(b.begin(), b.end())); }

Block8 to_block(const DenseMatrix& m) {
  Block8 b{};
  std::copy(m.entries().begin(), m.entries().end(), b.begin());
  return b;
}

}  // namespace

Block8 dct2_reference(const Block8& block) {
  return to_block(c8() * to_matrix(block) * c8().transposed());
}

Block8 idct2_block(const Block8& coeffs) {
  return to_block((1.0 / 64.0) * (c8().transposed() * to_matrix(coeffs) * c8()));
}

Block8 idct2_block(const Dct2Result& forward) {
  for (double s : forward.scale) {
    if (s != 1.0) {
      throw std::invalid_argument("idct2_block: coefficients are scaled; apply the scale matrix first");
    }
  }
  return idct2_block(forward.coeffs);
}

double round_half_away(double v) { return std::round(v); }

std::array<double, 64> effective_table(const QuantTable& q, const Block8& scale) {
  std::array<double, 64> eff{};
  for (std::size_t i = 0; i < 64; ++i) {
    if (scale[i] == 0.0) throw std::invalid_argument("effective_table: zero scale entry");
    eff[i] = q[i] / scale[i];
  }
  return eff;
}

std::array<std::int64_t, 64> quantize_absorbed(const Block8& scaled_coeffs, const Block8& scale,
                                               const QuantTable& q) {
  const std::array<double, 64> eff = effective_table(q, scale);
  std::array<std::int64_t, 64> out{};
  for (std::size_t i = 0; i < 64; ++i) {
    out[i] = static_cast<std::int64_t>(round_half_away(scaled_coeffs[i] / eff[i]));
  }
  return out;
}

std::array<std::int64_t, 64> quantize_exact(const Block8& coeffs, const QuantTable& q) {
  std::array<std::int64_t, 64> out{};
  for (std::size_t i = 0; i < 64; ++i) {
    out[i] = static_cast<std::int64_t>(round_half_away(coeffs[i] / q[i]));
  }
  return out;
}

bool near_rounding_tie(double coeff, double step, double band) {
  const double v = std::abs(coeff / step);
  return std::abs((v - std::floor(v)) - 0.5) < band;
}

double psnr(const std::vector<double>& reference, const std::vector<double>& test) {
  if (reference.size() != test.size() || reference.empty()) {
    throw std::invalid_argument("psnr: size mismatch");
  }
  double sse = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = reference[i] - test[i];
    sse += d * d;
  }
  if (sse == 0.0) return kPsnrCap;
  const double mse = sse / static_cast<double>(reference.size());
  return std::min(kPsnrCap, 10.0 * std::log10(255.0 * 255.0 / mse));
}

ImageTransformResult transform_image(const Image& img, AlgorithmId alg,
                                     const std::optional<QuantTable>& q) {
  if (img.width == 0 || img.height == 0 || img.pixels.size() != img.width * img.height) {
    throw std::invalid_argument("transform_image: malformed image");
  }
  ImageTransformResult res;
  res.blocks_x = (img.width + 7) / 8;
  res.blocks_y = (img.height + 7) / 8;
  const std::size_t pw = res.blocks_x * 8;
  const std::size_t ph = res.blocks_y * 8;
  const bool scaled = q.has_value() && supports_scaled(alg);

  std::vector<double> recon(pw * ph, 0.0);
  res.coefficients.reserve(res.blocks_x * res.blocks_y);
  for (std::size_t by = 0; by < res.blocks_y; ++by) {
    for (std::size_t bx = 0; bx < res.blocks_x; ++bx) {
      Block8 block{};
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
          const std::size_t x = std::min(bx * 8 + c, img.width - 1);
          const std::size_t y = std::min(by * 8 + r, img.height - 1);
          block[r * 8 + c] = static_cast<double>(img.at(x, y)) - 128.0;
        }

      const Dct2Result fwd = dct2_block(block, alg, scaled);
      Block8 exact{};
      if (q) {
        const auto ints = quantize_absorbed(fwd.coeffs, fwd.scale, *q);
        Block8 stored{};
        for (std::size_t i = 0; i < 64; ++i) {
          stored[i] = static_cast<double>(ints[i]);
          exact[i] = stored[i] * (*q)[i];
        }
        res.coefficients.push_back(stored);
      } else {
        for (std::size_t i = 0; i < 64; ++i) exact[i] = fwd.coeffs[i] * fwd.scale[i];
        res.coefficients.push_back(exact);
      }

      const Block8 back = idct2_block(exact);
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
          recon[(by * 8 + r) * pw + bx * 8 + c] = back[r * 8 + c] + 128.0;
    }
  }

  std::vector<double> original;
  std::vector<double> cropped;
  original.reserve(img.pixels.size());
  cropped.reserve(img.pixels.size());
  res.reconstruction.width = img.width;
  res.reconstruction.height = img.height;
  res.reconstruction.pixels.reserve(img.pixels.size());
  for (std::size_t y = 0; y < img.height; ++y)
    for (std::size_t x = 0; x < img.width; ++x) {
      const double v = recon[y * pw + x];
      original.push_back(static_cast<double>(img.at(x, y)));
      cropped.push_back(v);
      res.reconstruction.pixels.push_back(
          static_cast<std::uint8_t>(std::clamp(round_half_away(v), 0.0, 255.0)));
    }
  res.psnr_db = psnr(original, cropped);
  return res;
}

namespace {

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int ch = in.peek();
    if (ch == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      in.get();
    } else {
      return;
    }
  }
}

std::size_t read_header_number(std::istream& in, const char* what) {
  skip_separators(in);
  long long v = -1;
  if (!(in >> v) || v <= 0) throw std::runtime_error(std::string("PGM: bad ") + what);
  return static_cast<std::size_t>(v);
}

}  // namespace

Image read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5') {
    throw std::runtime_error("PGM: not a binary (P5) graymap");
  }
  Image img;
  img.width = read_header_number(in, "width");
  img.height = read_header_number(in, "height");
  const std::size_t maxval = read_header_number(in, "maxval");
  if (maxval != 255) throw std::runtime_error("PGM: only maxval 255 is supported");
  const int sep = in.get();
  if (sep != ' ' && sep != '\t' && sep != '\n' && sep != '\r') {
    throw std::runtime_error("PGM: missing separator before raster");
  }
  img.pixels.resize(img.width * img.height);
  if (!in.read(reinterpret_cast<char*>(img.pixels.data()),
               static_cast<std::streamsize>(img.pixels.size()))) {
    throw std::runtime_error("PGM: truncated raster");
  }
  return img;
}

Image read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const Image& img) {
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
}

void write_pgm_file(const std::string& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_pgm(out, img);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_coefficients_csv(std::ostream& out, const std::vector<Block8>& blocks) {
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < 64; ++i) {
      if (i) out << ',';
      out << fmt12(b[i]);
    }
    out << '\n';
  }
}

}  // namespace sbpdct
