#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "boolcum/matrix.hpp"

namespace boolcum {

/// Multilinear map B^n -> B over the d x d matrix algebra, stored as its values
/// on every n-tuple of matrix units. A tuple (e_1, ..., e_n) of basis indices
/// is flattened with e_1 most significant, base d^2.
class MultilinearMap {
 public:
  /// The zero map.
  MultilinearMap(std::size_t arity, std::size_t dim);
  MultilinearMap(std::size_t arity, std::size_t dim, std::vector<MatrixB> table);

  /// Arity-0 map holding a single value.
  static MultilinearMap constant(const MatrixB& value);
  /// Arity-1 map f -> f.
  static MultilinearMap identity(std::size_t dim);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  std::size_t basis_size() const { return dim_ * dim_; }
  std::size_t table_size() const { return table_.size(); }

  const MatrixB& at(std::size_t flat) const { return table_[flat]; }
  MatrixB& at(std::size_t flat) { return table_[flat]; }
  const MatrixB& at(std::span<const std::size_t> basis) const { return table_[flat_index(basis)]; }
  const std::vector<MatrixB>& table() const { return table_; }

  std::size_t flat_index(std::span<const std::size_t> basis) const;
  std::vector<std::size_t> basis_indices(std::size_t flat) const;
  /// The matrix units making up tuple `flat`.
  std::vector<MatrixB> basis_arguments(std::size_t flat) const;

  /// Multilinear expansion over the nonzero coordinates of the arguments.
  MatrixB evaluate(std::span<const MatrixB> args) const;
  MatrixB evaluate(const std::vector<MatrixB>& args) const {
    return evaluate(std::span<const MatrixB>(args));
  }

  MultilinearMap& operator+=(const MultilinearMap& other);
  friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
  friend bool operator==(const MultilinearMap&, const MultilinearMap&) = default;

 private:
  std::size_t arity_;
  std::size_t dim_;
  std::vector<MatrixB> table_;
};

/// Truncated multilinear function series (F_0, ..., F_{N-1}) with F_k of
/// arity k, under componentwise sum and the formal product
///   (FG)_n(f_1..f_n) = sum_{k=0}^n F_k(f_1..f_k) G_{n-k}(f_{k+1}..f_n).
class MulSeries {
 public:
  explicit MulSeries(std::vector<MultilinearMap> components);

  static MulSeries zero(std::size_t order, std::size_t dim);
  /// F_0 = identity matrix, all other components zero.
  static MulSeries one(std::size_t order, std::size_t dim);
  /// F_1 = (f -> f), all other components zero.
  static MulSeries identity_function(std::size_t order, std::size_t dim);

  std::size_t order() const { return components_.size(); }
  std::size_t dim() const { return components_.front().dim(); }
  const MultilinearMap& component(std::size_t k) const { return components_.at(k); }
  const std::vector<MultilinearMap>& components() const { return components_; }

  friend MulSeries operator+(const MulSeries& f, const MulSeries& g);
  friend MulSeries operator*(const MulSeries& f, const MulSeries& g);
  friend bool operator==(const MulSeries&, const MulSeries&) = default;

 private:
  std::vector<MultilinearMap> components_;
};

inline MulSeries mulseries_add(const MulSeries& f, const MulSeries& g) { return f + g; }
inline MulSeries mulseries_mul(const MulSeries& f, const MulSeries& g) { return f * g; }

}  // namespace boolcum
