#include "boolcum/random.hpp"

namespace boolcum {

std::size_t random_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Scalar random_scalar(Rng& rng) {
  const long num = std::uniform_int_distribution<long>(-6, 6)(rng);
  const long den = std::uniform_int_distribution<long>(1, 4)(rng);
  return Scalar(num, den);
}

MatrixB random_matrix(Rng& rng, std::size_t dim) {
  std::vector<Scalar> entries;
  entries.reserve(dim * dim);
  for (std::size_t k = 0; k < dim * dim; ++k) entries.push_back(random_scalar(rng));
  return MatrixB(dim, std::move(entries));
}

MomentSeq random_moments(Rng& rng, std::size_t order) {
  std::vector<Scalar> m;
  m.reserve(order);
  for (std::size_t k = 0; k < order; ++k) m.push_back(random_scalar(rng));
  return MomentSeq(std::move(m));
}

}  // namespace boolcum
