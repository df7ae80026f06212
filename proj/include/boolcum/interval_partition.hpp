#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "boolcum/errors.hpp"

namespace boolcum {

/// Partition of {1, ..., n} into consecutive blocks, stored as the ordered
/// list of block sizes (a composition of n).
class IntervalPartition {
 public:
  explicit IntervalPartition(std::vector<std::size_t> block_sizes);

  const std::vector<std::size_t>& block_sizes() const { return sizes_; }
  std::size_t block_count() const { return sizes_.size(); }
  std::size_t ground_size() const { return ground_; }

  /// Block sizes of the form "[2,1,1]".
  std::string str() const;

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
  friend auto operator<=>(const IntervalPartition& a, const IntervalPartition& b) {
    return a.sizes_ <=> b.sizes_;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::size_t ground_ = 0;
};

/// All interval partitions of {1, ..., n}, lexicographically ordered by block
/// sizes. There are 2^(n-1) of them.
std::vector<IntervalPartition> enumerate_interval_partitions(std::size_t n);

/// Block sizes of `first` followed by those of `second`.
IntervalPartition juxtapose(const IntervalPartition& first, const IntervalPartition& second);

/// Groups `args` into ordered per-block products: for block sizes
/// (s_1, ..., s_q) returns (a_1 ... a_{s_1}, a_{s_1+1} ... a_{s_1+s_2}, ...).
/// Products keep argument order, so T may be non-commutative.
template <class T>
std::vector<T> apply_pi(const IntervalPartition& gamma, std::span<const T> args) {
  if (args.size() != gamma.ground_size()) {
    throw OutOfRange("apply_pi: partition of " + std::to_string(gamma.ground_size()) +
                     " points applied to " + std::to_string(args.size()) + " arguments");
  }
  std::vector<T> out;
  out.reserve(gamma.block_count());
  std::size_t pos = 0;
  for (std::size_t size : gamma.block_sizes()) {
    T product = args[pos];
    for (std::size_t k = 1; k < size; ++k) product = product * args[pos + k];
    out.push_back(std::move(product));
    pos += size;
  }
  return out;
}

template <class T>
std::vector<T> apply_pi(const IntervalPartition& gamma, const std::vector<T>& args) {
  return apply_pi(gamma, std::span<const T>(args));
}

std::ostream& operator<<(std::ostream& os, const IntervalPartition& gamma);

}  // namespace boolcum
