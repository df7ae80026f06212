#include "boolcum/series.hpp"

#include <ostream>
#include <string>

#include "boolcum/errors.hpp"

namespace boolcum {

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.order() != g.order()) {
    throw OrderMismatch("series orders differ: " + std::to_string(f.order()) + " vs " +
                        std::to_string(g.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw OutOfRange("series order must be positive");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Scalar>(order));
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Scalar& c) {
  return monomial(order, 0, c);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t power, const Scalar& c) {
  std::vector<Scalar> coeffs(order);
  if (power < order) coeffs[power] = c;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  std::vector<Scalar> out(f.coeffs_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += g.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  std::vector<Scalar> out(f.coeffs_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= g.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g);
  const std::size_t n = f.order();
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return TruncatedSeries(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
  os << '(';
  for (std::size_t k = 0; k < f.order(); ++k) os << (k ? ", " : "") << f[k];
  return os << " mod z^" << f.order() << ')';
}

}  // namespace boolcum
