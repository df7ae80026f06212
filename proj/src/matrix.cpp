#include "boolcum/matrix.hpp"

#include <ostream>
#include <string>

#include "boolcum/errors.hpp"

namespace boolcum {

namespace {

void require_same_dim(const MatrixB& a, const MatrixB& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

MatrixB::MatrixB(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw OutOfRange("matrix dimension must be positive");
}

MatrixB::MatrixB(std::size_t dim, std::vector<Scalar> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw OutOfRange("matrix dimension must be positive");
  if (entries_.size() != dim * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries_.size()));
  }
}

MatrixB MatrixB::identity(std::size_t dim) {
  MatrixB m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

MatrixB MatrixB::unit(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= dim || j >= dim) throw OutOfRange("matrix unit index out of range");
  MatrixB m(dim);
  m(i, j) = 1;
  return m;
}

MatrixB MatrixB::basis(std::size_t dim, std::size_t index) {
  return unit(dim, index / dim, index % dim);
}

bool MatrixB::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

MatrixB& MatrixB::operator+=(const MatrixB& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

MatrixB& MatrixB::operator-=(const MatrixB& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

MatrixB& MatrixB::operator*=(const Scalar& factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

MatrixB operator*(const MatrixB& a, const MatrixB& b) {
  require_same_dim(a, b);
  const std::size_t d = a.dim();
  MatrixB out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MatrixB& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace boolcum
