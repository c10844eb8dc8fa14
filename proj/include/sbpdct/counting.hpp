#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "sbpdct/numerics.hpp"

namespace sbpdct {

/// Arithmetic tally for one measurement session. Subtractions count as
/// additions; sign changes are free.
struct OpTally {
  std::size_t nontrivial_mults = 0;
  std::size_t trivial_mults = 0;
  std::size_t additions = 0;

  friend bool operator==(const OpTally&, const OpTally&) = default;
  friend OpTally operator+(OpTally a, const OpTally& b) {
    a.nontrivial_mults += b.nontrivial_mults;
    a.trivial_mults += b.trivial_mults;
    a.additions += b.additions;
    return a;
  }
  friend std::ostream& operator<<(std::ostream& os, const OpTally& t) {
    return os << "mults=" << t.nontrivial_mults << " trivial=" << t.trivial_mults
              << " adds=" << t.additions;
  }
};

/// A double that reports every runtime multiplication and addition to an
/// OpTally sink. Values without a sink are constants: operations among
/// constants fold for free. Unary minus never counts.
class CountingScalar {
 public:
  CountingScalar() = default;
  /// Constant (no sink).
  CountingScalar(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  CountingScalar(double v, OpTally& sink) : value_(v), sink_(&sink) {}

  double value() const { return value_; }
  bool is_constant() const { return sink_ == nullptr; }
  OpTally* sink() const { return sink_; }

  friend CountingScalar operator+(const CountingScalar& a, const CountingScalar& b) {
    return {a.value_ + b.value_, add_sink(a, b)};
  }
  friend CountingScalar operator-(const CountingScalar& a, const CountingScalar& b) {
    return {a.value_ - b.value_, add_sink(a, b)};
  }
  friend CountingScalar operator-(const CountingScalar& a) { return {-a.value_, a.sink_}; }

  friend CountingScalar operator*(const CountingScalar& a, const CountingScalar& b) {
    OpTally* sink = merge(a.sink_, b.sink_);
    if (sink != nullptr) {
      if (a.sink_ != nullptr && b.sink_ != nullptr) {
        ++sink->nontrivial_mults;
      } else {
        const double k = a.sink_ == nullptr ? a.value_ : b.value_;
        ++(is_trivial_multiplicand(k) ? sink->trivial_mults : sink->nontrivial_mults);
      }
    }
    return {a.value_ * b.value_, sink};
  }

  CountingScalar& operator+=(const CountingScalar& b) { return *this = *this + b; }
  CountingScalar& operator-=(const CountingScalar& b) { return *this = *this - b; }
  CountingScalar& operator*=(const CountingScalar& b) { return *this = *this * b; }

 private:
  CountingScalar(double v, OpTally* sink) : value_(v), sink_(sink) {}

  static OpTally* merge(OpTally* a, OpTally* b) {
    if (a != nullptr && b != nullptr && a != b) {
      throw std::logic_error("CountingScalar: operands belong to different tallies");
    }
    return a != nullptr ? a : b;
  }
  static OpTally* add_sink(const CountingScalar& a, const CountingScalar& b) {
    OpTally* sink = merge(a.sink_, b.sink_);
    if (sink != nullptr) ++sink->additions;
    return sink;
  }

  double value_ = 0.0;
  OpTally* sink_ = nullptr;
};

inline double value_of(double v) { return v; }
inline double value_of(const CountingScalar& v) { return v.value(); }

/// Lift plain samples into runtime CountingScalars bound to `sink`.
inline std::vector<CountingScalar> instrument(std::span<const double> x, OpTally& sink) {
  std::vector<CountingScalar> out;
  out.reserve(x.size());
  for (double v : x) out.emplace_back(v, sink);
  return out;
}

template <class T>
std::vector<double> values_of(std::span<const T> x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(value_of(v));
  return out;
}

}  // namespace sbpdct
