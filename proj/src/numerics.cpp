#include "sbpdct/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sbpdct {

const TrigConstants& trig_constants() {
  static const TrigConstants table = [] {
    TrigConstants t;
    for (int k = 0; k < 8; ++k) {
      const double angle = k * std::numbers::pi / 16.0;
      t.c[k] = std::cos(angle);
      t.s[k] = std::sin(angle);
    }
    // Exact symmetric value for the quarter-angle slot.
    t.c[4] = t.s[4] = std::numbers::sqrt2 / 2.0;
    return t;
  }();
  return table;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : DenseMatrix(rows, cols, std::vector<double>(rows * cols, 0.0)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("DenseMatrix: empty shape");
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("DenseMatrix: entry count does not match shape");
  }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("DenseMatrix: empty shape");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("DenseMatrix: ragged rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("DenseMatrix::block");
  DenseMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix product: shape mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseMatrix operator*(double k, const DenseMatrix& m) {
  DenseMatrix out = m;
  for (auto& e : out.entries_) e *= k;
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("DenseMatrix difference: shape mismatch");
  }
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  const DenseMatrix d = a - b;
  double worst = 0.0;
  for (double e : d.entries()) worst = std::max(worst, std::abs(e));
  return worst;
}

DenseMatrix cyclic_forward_diff(const DenseMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("cyclic_forward_diff: matrix is not square");
  const std::size_t n = m.cols();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, (j + 1) % n) - m(i, j);
  return out;
}

bool is_trivial_multiplicand(double a) {
  constexpr double kTol = 1e-12;
  const double mag = std::abs(a);
  if (mag <= kTol) return true;
  // Nearest power of two in log space, then compare in linear space.
  const double nearest = std::exp2(std::round(std::log2(mag)));
  return std::abs(mag - nearest) <= kTol * std::max(1.0, nearest);
}

}  // namespace sbpdct
