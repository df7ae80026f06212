#include "boolcum/interval_partition.hpp"

#include <ostream>

namespace boolcum {

IntervalPartition::IntervalPartition(std::vector<std::size_t> block_sizes)
    : sizes_(std::move(block_sizes)) {
  if (sizes_.empty()) throw OutOfRange("interval partition needs at least one block");
  for (std::size_t s : sizes_) {
    if (s == 0) throw OutOfRange("interval partition blocks must be nonempty");
    ground_ += s;
  }
}

std::string IntervalPartition::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(sizes_[k]);
  }
  return out + ']';
}

namespace {

void enumerate_into(std::size_t remaining, std::vector<std::size_t>& prefix,
                    std::vector<IntervalPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    enumerate_into(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntervalPartition> enumerate_interval_partitions(std::size_t n) {
  if (n == 0) throw OutOfRange("interval partitions need a nonempty ground set");
  if (n > 30) throw OutOfRange("refusing to enumerate 2^" + std::to_string(n - 1) + " partitions");
  std::vector<IntervalPartition> out;
  out.reserve(std::size_t{1} << (n - 1));
  std::vector<std::size_t> prefix;
  enumerate_into(n, prefix, out);
  return out;
}

IntervalPartition juxtapose(const IntervalPartition& first, const IntervalPartition& second) {
  std::vector<std::size_t> sizes = first.block_sizes();
  sizes.insert(sizes.end(), second.block_sizes().begin(), second.block_sizes().end());
  return IntervalPartition(std::move(sizes));
}

std::ostream& operator<<(std::ostream& os, const IntervalPartition& gamma) {
  return os << gamma.str();
}

}  // namespace boolcum
