#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbpdct {

/// cos(kπ/16) and sin(kπ/16) for k = 0..7. Index 0 holds cos 0 / sin 0.
struct TrigConstants {
  std::array<double, 8> c{};
  std::array<double, 8> s{};
};

const TrigConstants& trig_constants();

class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  /// Row-major nested initializer, rows must be of equal length.
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const double> entries() const { return entries_; }

  DenseMatrix transposed() const;
  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(double k, const DenseMatrix& m);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Row-wise cyclic forward difference: out(i,j) = m(i,(j+1) mod N) - m(i,j).
DenseMatrix cyclic_forward_diff(const DenseMatrix& m);

/// True when |a| is 0 or 2^k (k integral, 1 included) within 1e-12, i.e. the
/// product can be realized by a sign change and a shift.
bool is_trivial_multiplicand(double a);

/// Matrix-vector product. Each row is accumulated left to right starting from
/// the first product, so an R x C matrix costs R*C products and R*(C-1) sums
/// for any scalar type T that supports `T * double` and `T + T`.
template <class T>
std::vector<T> mat_vec(const DenseMatrix& m, std::span<const T> v) {
  if (m.cols() != v.size()) {
    throw std::invalid_argument("mat_vec: matrix has " + std::to_string(m.cols()) +
                                " columns but vector has length " + std::to_string(v.size()));
  }
  std::vector<T> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    T acc = v[0] * m(r, 0);
    for (std::size_t c = 1; c < m.cols(); ++c) acc = acc + v[c] * m(r, c);
    out.push_back(acc);
  }
  return out;
}

inline std::vector<double> mat_vec(const DenseMatrix& m, const std::vector<double>& v) {
  return mat_vec<double>(m, std::span<const double>(v));
}

}  // namespace sbpdct
