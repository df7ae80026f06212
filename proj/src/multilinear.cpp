#include "boolcum/multilinear.hpp"

#include <string>

#include "boolcum/errors.hpp"

namespace boolcum {

namespace {

std::size_t checked_table_size(std::size_t arity, std::size_t dim) {
  if (dim == 0) throw OutOfRange("dimension must be positive");
  std::size_t size = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    if (size > (std::size_t{1} << 24) / (dim * dim)) {
      throw OutOfRange("multilinear table too large for arity " + std::to_string(arity));
    }
    size *= dim * dim;
  }
  return size;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

void require_compatible(const MulSeries& f, const MulSeries& g) {
  if (f.order() != g.order()) {
    throw OrderMismatch("series orders differ: " + std::to_string(f.order()) + " vs " +
                        std::to_string(g.order()));
  }
  if (f.dim() != g.dim()) throw DimensionMismatch("series dimensions differ");
}

}  // namespace

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t dim)
    : arity_(arity), dim_(dim), table_(checked_table_size(arity, dim), MatrixB(dim)) {}

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t dim, std::vector<MatrixB> table)
    : arity_(arity), dim_(dim), table_(std::move(table)) {
  if (table_.size() != checked_table_size(arity, dim)) {
    throw DimensionMismatch("table of arity " + std::to_string(arity) + " needs " +
                            std::to_string(checked_table_size(arity, dim)) + " entries");
  }
  for (const auto& m : table_) {
    if (m.dim() != dim) throw DimensionMismatch("table entry has the wrong dimension");
  }
}

MultilinearMap MultilinearMap::constant(const MatrixB& value) {
  return MultilinearMap(0, value.dim(), {value});
}

MultilinearMap MultilinearMap::identity(std::size_t dim) {
  MultilinearMap map(1, dim);
  for (std::size_t e = 0; e < dim * dim; ++e) map.table_[e] = MatrixB::basis(dim, e);
  return map;
}

std::size_t MultilinearMap::flat_index(std::span<const std::size_t> basis) const {
  if (basis.size() != arity_) throw OutOfRange("basis tuple has the wrong length");
  std::size_t flat = 0;
  for (std::size_t e : basis) {
    if (e >= basis_size()) throw OutOfRange("basis index out of range");
    flat = flat * basis_size() + e;
  }
  return flat;
}

std::vector<std::size_t> MultilinearMap::basis_indices(std::size_t flat) const {
  std::vector<std::size_t> out(arity_);
  for (std::size_t k = arity_; k-- > 0;) {
    out[k] = flat % basis_size();
    flat /= basis_size();
  }
  return out;
}

std::vector<MatrixB> MultilinearMap::basis_arguments(std::size_t flat) const {
  std::vector<MatrixB> out;
  out.reserve(arity_);
  for (std::size_t e : basis_indices(flat)) out.push_back(MatrixB::basis(dim_, e));
  return out;
}

MatrixB MultilinearMap::evaluate(std::span<const MatrixB> args) const {
  if (args.size() != arity_) {
    throw OutOfRange("map of arity " + std::to_string(arity_) + " given " +
                     std::to_string(args.size()) + " arguments");
  }
  // Nonzero coordinates of each argument.
  std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> support(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    if (args[k].dim() != dim_) throw DimensionMismatch("argument has the wrong dimension");
    const auto& coords = args[k].coords();
    for (std::size_t e = 0; e < coords.size(); ++e) {
      if (!coords[e].is_zero()) support[k].emplace_back(e, &coords[e]);
    }
    if (support[k].empty()) return MatrixB(dim_);
  }
  MatrixB out(dim_);
  std::vector<std::size_t> choice(arity_, 0);
  while (true) {
    std::size_t flat = 0;
    Scalar coeff(1);
    for (std::size_t k = 0; k < arity_; ++k) {
      const auto& [e, c] = support[k][choice[k]];
      flat = flat * basis_size() + e;
      coeff *= *c;
    }
    out += table_[flat] * coeff;
    std::size_t k = arity_;
    while (k > 0) {
      --k;
      if (++choice[k] < support[k].size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
    if (arity_ == 0) return out;
  }
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& other) {
  if (arity_ != other.arity_ || dim_ != other.dim_) {
    throw DimensionMismatch("cannot add multilinear maps of different shapes");
  }
  for (std::size_t k = 0; k < table_.size(); ++k) table_[k] += other.table_[k];
  return *this;
}

MulSeries::MulSeries(std::vector<MultilinearMap> components) : components_(std::move(components)) {
  if (components_.empty()) throw OutOfRange("series order must be positive");
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].arity() != k) throw DimensionMismatch("component k must have arity k");
    if (components_[k].dim() != components_[0].dim()) {
      throw DimensionMismatch("series components must share a dimension");
    }
  }
}

MulSeries MulSeries::zero(std::size_t order, std::size_t dim) {
  std::vector<MultilinearMap> c;
  c.reserve(order);
  for (std::size_t k = 0; k < order; ++k) c.emplace_back(k, dim);
  return MulSeries(std::move(c));
}

MulSeries MulSeries::one(std::size_t order, std::size_t dim) {
  MulSeries s = zero(order, dim);
  s.components_[0] = MultilinearMap::constant(MatrixB::identity(dim));
  return s;
}

MulSeries MulSeries::identity_function(std::size_t order, std::size_t dim) {
  MulSeries s = zero(order, dim);
  if (order > 1) s.components_[1] = MultilinearMap::identity(dim);
  return s;
}

MulSeries operator+(const MulSeries& f, const MulSeries& g) {
  require_compatible(f, g);
  std::vector<MultilinearMap> c = f.components_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += g.components_[k];
  return MulSeries(std::move(c));
}

MulSeries operator*(const MulSeries& f, const MulSeries& g) {
  require_compatible(f, g);
  const std::size_t d = f.dim();
  const std::size_t base = d * d;
  MulSeries out = MulSeries::zero(f.order(), d);
  for (std::size_t n = 0; n < f.order(); ++n) {
    MultilinearMap& target = out.components_[n];
    for (std::size_t flat = 0; flat < target.table_size(); ++flat) {
      MatrixB acc(d);
      for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t split = power(base, n - k);
        const MatrixB& left = f.components_[k].at(flat / split);
        if (left.is_zero()) continue;
        const MatrixB& right = g.components_[n - k].at(flat % split);
        if (right.is_zero()) continue;
        acc += left * right;
      }
      target.at(flat) = std::move(acc);
    }
  }
  return out;
}

}  // namespace boolcum
