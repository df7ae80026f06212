#include <gtest/gtest.h>

#include <vector>

#include "boolcum/interval_partition.hpp"
#include "boolcum/operator_valued.hpp"

using namespace boolcum;

namespace {

constexpr std::size_t D = 2;

OVElement M(const MatrixB& g) { return OVElement::matrix(g); }

// Test-local oracle: Moebius inversion over interval partitions of the lower
// arguments; the upper argument sitting on each cut multiplies in between.
MatrixB moebius_ov_cumulant(const OVJointState& s, const std::vector<OVElement>& lower,
                            const std::vector<MatrixB>& upper) {
  const std::size_t n = lower.size();
  MatrixB total(s.dim());
  for (const auto& g : enumerate_interval_partitions(n)) {
    MatrixB prod = MatrixB::identity(s.dim());
    std::size_t pos = 0;
    for (std::size_t size : g.block_sizes()) {
      if (pos > 0) prod = prod * upper[pos - 1];
      OVElement block = lower[pos];
      for (std::size_t k = 1; k < size; ++k) block = block * M(upper[pos + k - 1]) * lower[pos + k];
      prod = prod * ov_phi(s, block);
      pos += size;
    }
    total += g.block_count() % 2 == 1 ? prod : -prod;
  }
  return total;
}

}  // namespace

TEST(OperatorValued, PhiFactorsAcrossLetterChanges) {
  Rng rng(71);
  const OVJointState s = random_ov_joint_state(rng, 4, D);
  const OVElement x = OVElement::x(D), y = OVElement::y(D);
  const MatrixB f = random_matrix(rng, D), f1 = random_matrix(rng, D), f2 = random_matrix(rng, D);
  const MatrixB mx1 = s.x().moment(1).at(0), my1 = s.y().moment(1).at(0);
  EXPECT_EQ(ov_phi(s, x * M(f) * y), mx1 * f * my1);
  EXPECT_EQ(ov_phi(s, x * M(f1) * x * M(f2) * y), s.x().moment(2).evaluate({f1}) * f2 * my1);
  EXPECT_EQ(ov_phi(s, M(f1) * x * M(f2)), f1 * mx1 * f2);
  EXPECT_EQ(ov_phi(s, x * M(f1) * x * M(f2) * x), s.x().moment(3).evaluate({f1, f2}));
  EXPECT_EQ(ov_phi(s, OVElement::unit(D)), MatrixB::identity(D));
}

TEST(OperatorValued, SecondCumulant) {
  Rng rng(72);
  const OVDistribution d = random_ov_distribution(rng, 4, D);
  const MulSeries B = ov_moments_to_cumulants(d);
  const MatrixB f = random_matrix(rng, D);
  const MatrixB m1 = d.moment(1).at(0);
  EXPECT_EQ(B.component(0).at(0), m1);
  EXPECT_EQ(B.component(1).evaluate({f}), d.moment(2).evaluate({f}) - m1 * f * m1);
}

TEST(OperatorValued, SingleCumulantGeneratesProducts) {
  // Only b^1 = u nonzero gives m^n(f_1..f_{n-1}) = u f_1 u ... f_{n-1} u.
  Rng rng(73);
  const MatrixB u = random_matrix(rng, D);
  std::vector<MultilinearMap> c{MultilinearMap::constant(u)};
  for (std::size_t k = 1; k < 4; ++k) c.emplace_back(k, D);
  const OVDistribution m = ov_cumulants_to_moments(MulSeries(c));
  const MatrixB f1 = random_matrix(rng, D), f2 = random_matrix(rng, D), f3 = random_matrix(rng, D);
  EXPECT_EQ(m.moment(1).at(0), u);
  EXPECT_EQ(m.moment(2).evaluate({f1}), u * f1 * u);
  EXPECT_EQ(m.moment(4).evaluate({f1, f2, f3}), u * f1 * u * f2 * u * f3 * u);
}

TEST(OperatorValued, RoundTripAndSeriesRelation) {
  Rng rng(74);
  for (int i = 0; i < 3; ++i) {
    const OVDistribution d = random_ov_distribution(rng, 5, D);
    const MulSeries B = ov_moments_to_cumulants(d);
    EXPECT_EQ(ov_cumulants_to_moments(B), d);
    EXPECT_TRUE(satisfies_moment_cumulant_relation(d.as_series(), B));
    const MulSeries I = MulSeries::identity_function(5, D);
    EXPECT_EQ(d.as_series(), B * (MulSeries::one(5, D) + I * d.as_series()));
  }
  const OVDistribution d = random_ov_distribution(rng, 3, D);
  MulSeries B = ov_moments_to_cumulants(d);
  EXPECT_FALSE(satisfies_moment_cumulant_relation(d.as_series(), B + MulSeries::one(3, D)));
}

TEST(OperatorValued, CumulantsMatchMoebiusOracle) {
  Rng rng(75);
  for (int i = 0; i < 15; ++i) {
    const OVJointState s = random_ov_joint_state(rng, 8, D);
    const std::size_t n = random_index(rng, 1, 4);
    std::vector<OVElement> lower;
    std::vector<MatrixB> upper;
    for (std::size_t k = 0; k < n; ++k) lower.push_back(random_ov_entry(rng, D));
    for (std::size_t k = 1; k < n; ++k) upper.push_back(random_matrix(rng, D));
    EXPECT_EQ(ov_mixed_cumulant(s, lower, upper), moebius_ov_cumulant(s, lower, upper));
  }
}

TEST(OperatorValued, CumulantTableMatchesMixedCumulant) {
  Rng rng(76);
  const OVJointState s = random_ov_joint_state(rng, 4, D);
  const MulSeries B = ov_moments_to_cumulants(s.x());
  const std::vector<OVElement> xs(3, OVElement::x(D));
  const std::vector<MatrixB> f{random_matrix(rng, D), random_matrix(rng, D)};
  EXPECT_EQ(B.component(2).evaluate(f), ov_mixed_cumulant(s, xs, f));
}

TEST(OperatorValued, AdjacentXYVanishes) {
  Rng rng(77);
  const OVJointState s = random_ov_joint_state(rng, 6, D);
  const std::vector<OVElement> lower{OVElement::x(D), OVElement::y(D)};
  const std::vector<MatrixB> upper{random_matrix(rng, D)};
  EXPECT_TRUE(ov_mixed_cumulant(s, lower, upper).is_zero());
  EXPECT_THROW(ov_mixed_cumulant(s, lower, std::vector<MatrixB>{}), OutOfRange);
}

TEST(OperatorValued, ShiftByOne) {
  Rng rng(78);
  const OVJointState s = random_ov_joint_state(rng, 4, D);
  const MulSeries B = ov_moments_to_cumulants(s.x());
  const MulSeries shifted = ov_shift_one(B);
  const MatrixB f1 = random_matrix(rng, D), f2 = random_matrix(rng, D);
  EXPECT_EQ(shifted.component(0).at(0), MatrixB::identity(D) + B.component(0).at(0));
  EXPECT_EQ(shifted.component(1).evaluate({f1}), B.component(1).evaluate({f1}));
  EXPECT_EQ(shifted.component(2).evaluate({f1, f2}),
            B.component(2).evaluate({f1, f2}) + B.component(1).evaluate({f1 * f2}));
  const OVElement one_plus_x = OVElement::unit(D) + OVElement::x(D);
  EXPECT_EQ(shifted, ov_moments_to_cumulants(ov_moments_of(s, one_plus_x, 4)));
}

TEST(OperatorValued, Convolutions) {
  Rng rng(79);
  const OVJointState s = random_ov_joint_state(rng, 4, D);
  const OVElement x = OVElement::x(D), y = OVElement::y(D);
  EXPECT_EQ(ov_bconv_add(s), ov_moments_to_cumulants(ov_moments_of(s, x + y, 4)));
  const MulSeries lhs = ov_shift_one(ov_bconv_mul(s));
  const MulSeries rhs = ov_shift_one(ov_moments_to_cumulants(s.x())) * ov_shift_one(ov_moments_to_cumulants(s.y()));
  EXPECT_EQ(lhs, rhs);
  // Independent route: moments of (1 + X)(1 + Y) directly.
  const OVElement one = OVElement::unit(D);
  EXPECT_EQ(lhs, ov_moments_to_cumulants(ov_moments_of(s, (one + x) * (one + y), 4)));
}

TEST(OperatorValued, MomentsOfMatchPhi) {
  Rng rng(84);
  for (int i = 0; i < 10; ++i) {
    const OVJointState s = random_ov_joint_state(rng, 9, D);
    const OVElement z = random_ov_entry(rng, D) + random_ov_entry(rng, D);
    const OVDistribution m = ov_moments_of(s, z, 3);
    EXPECT_EQ(m.moment(1).at(0), ov_phi(s, z));
    const MatrixB f = random_matrix(rng, D), g = random_matrix(rng, D);
    EXPECT_EQ(m.moment(2).evaluate({f}), ov_phi(s, z * M(f) * z));
    EXPECT_EQ(m.moment(3).evaluate({f, g}), ov_phi(s, z * M(f) * z * M(g) * z));
  }
}

TEST(OperatorValued, ZeroFactor) {
  Rng rng(80);
  const OVDistribution y = random_ov_distribution(rng, 4, D);
  const OVJointState s(OVDistribution::zero(4, D), y);
  EXPECT_EQ(ov_bconv_mul(s), ov_moments_to_cumulants(y));
  EXPECT_EQ(ov_bconv_add(s), ov_moments_to_cumulants(y));
}

TEST(OperatorValued, DimensionOneCollapse) {
  Rng rng(81);
  for (int i = 0; i < 10; ++i) {
    const JointState js = random_joint_state(rng, 6);
    const OVJointState s = ov_from_scalar(js);
    EXPECT_EQ(scalar_coefficients(ov_moments_to_cumulants(s.x())), moments_to_cumulants(js.x()).values());
    EXPECT_EQ(scalar_coefficients(ov_bconv_add(s)), moments_to_cumulants(bconv_add(js.x(), js.y())).values());
    EXPECT_EQ(scalar_coefficients(ov_bconv_mul(s)), moments_to_cumulants(bconv_mul(js.x(), js.y())).values());
    EXPECT_EQ(scalar_coefficients(ov_shift_one(ov_moments_to_cumulants(s.x()))),
              shift_one(moments_to_cumulants(js.x())).values());
    const TruncatedSeries B = b_transform(js.x());
    EXPECT_EQ(mulseries_from_scalar(B), ov_moments_to_cumulants(s.x()));
  }
}

TEST(OperatorValued, Sweeps) {
  Rng rng(82);
  const OVJointState s = random_ov_joint_state(rng, 8, D);
  for (std::size_t len = 2; len <= 4; ++len)
    for (std::size_t n = 0; n + 2 <= len; ++n) EXPECT_TRUE(verify_ov_vanishing(s, n, len - 2 - n, rng, 2).ok());
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(verify_ov_matrix_entries(s, n, rng, 2).ok());
    EXPECT_TRUE(verify_ov_product_rules(s, n, rng, 2).ok());
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_TRUE(verify_unit_upper_arguments(s, n, rng, 2).ok());
    EXPECT_TRUE(verify_bimodule_transfer(s, n, rng, 2).ok());
  }
}

TEST(OperatorValued, MatrixEntryRules) {
  Rng rng(83);
  const OVJointState s = random_ov_joint_state(rng, 6, D);
  const OVElement a1 = random_ov_entry(rng, D), a2 = random_ov_entry(rng, D);
  const MatrixB f = random_matrix(rng, D), f1 = random_matrix(rng, D), f2 = random_matrix(rng, D);
  const std::vector<OVElement> mid{a1, M(f), a2}, first{M(f), a1, a2};
  const std::vector<MatrixB> up{f1, f2};
  EXPECT_TRUE(ov_mixed_cumulant(s, first, up).is_zero());
  EXPECT_EQ(ov_mixed_cumulant(s, mid, up),
            ov_mixed_cumulant(s, std::vector<OVElement>{a1, a2}, std::vector<MatrixB>{f1 * f * f2}));
}
