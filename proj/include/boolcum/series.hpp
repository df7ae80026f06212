#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "boolcum/scalar.hpp"

namespace boolcum {

/// Formal power series sum_k c_k z^k modulo z^N. The order N travels with the
/// value; operations on series of different orders are rejected.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Scalar> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries constant(std::size_t order, const Scalar& c);
  static TruncatedSeries one(std::size_t order) { return constant(order, Scalar(1)); }
  /// c * z^power (zero when power >= order).
  static TruncatedSeries monomial(std::size_t order, std::size_t power, const Scalar& c);

  std::size_t order() const { return coeffs_.size(); }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

inline TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f + g;
}
inline TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f * g;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

}  // namespace boolcum
