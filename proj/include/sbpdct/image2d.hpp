#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sbpdct/rivals.hpp"

namespace sbpdct {

/// 8-bit grayscale, row-major.
struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
};

/// 8x8 values, row-major: index = row * 8 + col.
using Block8 = std::array<double, 64>;

/// 8x8 quantizer step sizes, all >= 1.
class QuantTable {
 public:
  explicit QuantTable(const std::array<double, 64>& steps);
  static QuantTable uniform(double step);
  /// The usual JPEG luminance table, multiplied by `factor` and clamped below at 1.
  static QuantTable jpeg_luminance(double factor = 1.0);

  double operator[](std::size_t i) const { return steps_[i]; }
  const std::array<double, 64>& steps() const { return steps_; }

 private:
  std::array<double, 64> steps_;
};

struct Dct2Result {
  Block8 coeffs{};
  Block8 scale{};  ///< exact = coeffs * scale entrywise; all ones when unscaled
};

/// Row pass then column pass of the 1D algorithm (Scenario (i) per line).
Dct2Result dct2_block(const Block8& block, AlgorithmId alg, bool scaled);

/// C8^T X C8 / 64.
Block8 idct2_block(const Block8& coeffs);
/// Same, for a forward result; rejects scaled coefficients.
Block8 idct2_block(const Dct2Result& forward);

/// Matrix form C8 B C8^T, used as the reference.
Block8 dct2_reference(const Block8& block);

/// Half away from zero.
double round_half_away(double v);

/// Precomputed q[i] / scale[i].
std::array<double, 64> effective_table(const QuantTable& q, const Block8& scale);

/// round(scaled / (q / scale)): quantizing a scaled spectrum against the
/// absorbed table gives the same integers as quantizing the exact spectrum by q.
std::array<std::int64_t, 64> quantize_absorbed(const Block8& scaled_coeffs, const Block8& scale,
                                               const QuantTable& q);
std::array<std::int64_t, 64> quantize_exact(const Block8& coeffs, const QuantTable& q);

/// True when coeffs[i] / q[i] lies within `band` of a half-integer.
bool near_rounding_tie(double coeff, double step, double band = 1e-9);

inline constexpr double kPsnrCap = 999.0;

/// Peak 255; identical inputs give kPsnrCap.
double psnr(const std::vector<double>& reference, const std::vector<double>& test);

struct ImageTransformResult {
  std::size_t blocks_x = 0;
  std::size_t blocks_y = 0;
  /// One entry per block in raster order: exact coefficients, or the
  /// quantized integers when a table was given.
  std::vector<Block8> coefficients;
  Image reconstruction;
  double psnr_db = 0.0;
};

/// Edge-replication padding to multiples of 8, level shift by -128,
/// blockwise forward transform, optional quantization (absorbed into the
/// table for scaled algorithms), inverse, crop.
ImageTransformResult transform_image(const Image& img, AlgorithmId alg,
                                     const std::optional<QuantTable>& q);

/// Binary PGM (P5, maxval 255). Throws std::runtime_error on malformed input.
Image read_pgm(std::istream& in);
Image read_pgm_file(const std::string& path);
void write_pgm(std::ostream& out, const Image& img);
void write_pgm_file(const std::string& path, const Image& img);

/// One line per block in raster order, 64 comma-separated values.
void write_coefficients_csv(std::ostream& out, const std::vector<Block8>& blocks);

}  // namespace sbpdct
