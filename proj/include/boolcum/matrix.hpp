#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "boolcum/scalar.hpp"

namespace boolcum {

/// Dense square matrix over exact rationals; the concrete base algebra for
/// operator-valued computations. Entries are stored row-major, so entry
/// (i, j) is also the coordinate of the matrix unit E_ij, whose basis index
/// is i * dim + j.
class MatrixB {
 public:
  explicit MatrixB(std::size_t dim);
  MatrixB(std::size_t dim, std::vector<Scalar> entries);

  static MatrixB zero(std::size_t dim) { return MatrixB(dim); }
  static MatrixB identity(std::size_t dim);
  /// Matrix unit E_ij (0-based indices).
  static MatrixB unit(std::size_t dim, std::size_t i, std::size_t j);
  /// Matrix unit addressed by its basis index i * dim + j.
  static MatrixB basis(std::size_t dim, std::size_t index);
  /// 1x1 matrix holding a scalar.
  static MatrixB scalar(const Scalar& s) { return MatrixB(1, {s}); }

  std::size_t dim() const { return dim_; }
  std::size_t basis_size() const { return dim_ * dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  /// Coordinates in the matrix-unit basis.
  const std::vector<Scalar>& coords() const { return entries_; }
  bool is_zero() const;

  MatrixB& operator+=(const MatrixB& other);
  MatrixB& operator-=(const MatrixB& other);
  MatrixB& operator*=(const Scalar& factor);

  friend MatrixB operator+(MatrixB a, const MatrixB& b) { return a += b; }
  friend MatrixB operator-(MatrixB a, const MatrixB& b) { return a -= b; }
  friend MatrixB operator-(MatrixB a) { return a *= Scalar(-1); }
  friend MatrixB operator*(MatrixB a, const Scalar& s) { return a *= s; }
  friend MatrixB operator*(const Scalar& s, MatrixB a) { return a *= s; }
  friend MatrixB operator*(const MatrixB& a, const MatrixB& b);

  friend bool operator==(const MatrixB& a, const MatrixB& b) = default;

 private:
  std::size_t dim_;
  std::vector<Scalar> entries_;
};

inline MatrixB matrix_add(const MatrixB& a, const MatrixB& b) { return a + b; }
inline MatrixB matrix_mul(const MatrixB& a, const MatrixB& b) { return a * b; }
inline MatrixB matrix_scale(const MatrixB& a, const Scalar& s) { return a * s; }

/// Multiplicative unit of the same algebra as a reference element.
inline Scalar unit_like(const Scalar&) { return Scalar(1); }
inline MatrixB unit_like(const MatrixB& m) { return MatrixB::identity(m.dim()); }

std::ostream& operator<<(std::ostream& os, const MatrixB& m);

}  // namespace boolcum
