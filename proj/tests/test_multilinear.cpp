#include <gtest/gtest.h>

#include <vector>

#include "boolcum/multilinear.hpp"
#include "boolcum/random.hpp"

using namespace boolcum;

namespace {

MultilinearMap random_map(Rng& rng, std::size_t arity, std::size_t dim) {
  MultilinearMap f(arity, dim);
  for (std::size_t i = 0; i < f.table_size(); ++i) f.at(i) = random_matrix(rng, dim);
  return f;
}

MulSeries random_series(Rng& rng, std::size_t order, std::size_t dim) {
  std::vector<MultilinearMap> c;
  for (std::size_t k = 0; k < order; ++k) c.push_back(random_map(rng, k, dim));
  return MulSeries(c);
}

}  // namespace

TEST(Multilinear, IndexingRoundTrip) {
  const MultilinearMap f(3, 2);
  EXPECT_EQ(f.table_size(), 64u);
  for (std::size_t flat = 0; flat < f.table_size(); ++flat) {
    const auto idx = f.basis_indices(flat);
    EXPECT_EQ(f.flat_index(idx), flat);
  }
  // First slot is most significant.
  const std::vector<std::size_t> t{1, 0, 3};
  EXPECT_EQ(f.flat_index(t), 1u * 16 + 0 * 4 + 3);
}

TEST(Multilinear, EvaluateIsMultilinear) {
  Rng rng(61);
  const MultilinearMap f = random_map(rng, 2, 2);
  const MatrixB a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2);
  const Scalar s = random_scalar(rng);
  EXPECT_EQ(f.evaluate({a + s * b, c}), f.evaluate({a, c}) + s * f.evaluate({b, c}));
  EXPECT_EQ(f.evaluate({c, a + b}), f.evaluate({c, a}) + f.evaluate({c, b}));
  for (std::size_t flat = 0; flat < f.table_size(); ++flat)
    EXPECT_EQ(f.evaluate(f.basis_arguments(flat)), f.at(flat));
  EXPECT_EQ(MultilinearMap::identity(2).evaluate({a}), a);
  EXPECT_EQ(MultilinearMap::constant(a).evaluate(std::vector<MatrixB>{}), a);
}

TEST(Multilinear, FirstOrderProduct) {
  Rng rng(62);
  const MulSeries F = random_series(rng, 3, 2), G = random_series(rng, 3, 2);
  const MulSeries FG = F * G;
  const MatrixB f = random_matrix(rng, 2);
  const MatrixB F0 = F.component(0).at(0), G0 = G.component(0).at(0);
  EXPECT_EQ(FG.component(0).at(0), F0 * G0);
  EXPECT_EQ(FG.component(1).evaluate({f}), F0 * G.component(1).evaluate({f}) + F.component(1).evaluate({f}) * G0);
  const MatrixB g = random_matrix(rng, 2);
  EXPECT_EQ(FG.component(2).evaluate({f, g}),
            F0 * G.component(2).evaluate({f, g}) + F.component(1).evaluate({f}) * G.component(1).evaluate({g}) +
                F.component(2).evaluate({f, g}) * G0);
}

TEST(Multilinear, SeriesRingLaws) {
  Rng rng(63);
  const MulSeries F = random_series(rng, 4, 2), G = random_series(rng, 4, 2), H = random_series(rng, 4, 2);
  const MulSeries one = MulSeries::one(4, 2), zero = MulSeries::zero(4, 2);
  EXPECT_EQ(one * G, G);
  EXPECT_EQ(G * one, G);
  EXPECT_EQ(F + zero, F);
  EXPECT_EQ(F + G, G + F);
  EXPECT_EQ((F * G) * H, F * (G * H));
  EXPECT_EQ(F * (G + H), F * G + F * H);
  EXPECT_NE(F * G, G * F);
}

TEST(Multilinear, IdentityFunctionShiftsArguments) {
  // (I G)_k(f_1..f_k) = f_1 G_{k-1}(f_2..f_k).
  Rng rng(64);
  const MulSeries G = random_series(rng, 4, 2);
  const MulSeries IG = MulSeries::identity_function(4, 2) * G;
  EXPECT_TRUE(IG.component(0).at(0).is_zero());
  const MatrixB a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2);
  EXPECT_EQ(IG.component(3).evaluate({a, b, c}), a * G.component(2).evaluate({b, c}));
}

TEST(Multilinear, ShapeChecks) {
  EXPECT_THROW(MulSeries({MultilinearMap(1, 2)}), Error);
  EXPECT_THROW((MulSeries::one(3, 2) + MulSeries::one(2, 2)), Error);
  EXPECT_THROW((MulSeries::one(2, 2) * MulSeries::one(2, 3)), Error);
  EXPECT_THROW(MultilinearMap(1, 2, std::vector<MatrixB>(3, MatrixB(2))), Error);
}
