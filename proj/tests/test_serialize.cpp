#include <gtest/gtest.h>

#include "boolcum/errors.hpp"
#include "boolcum/serialize.hpp"

using namespace boolcum;
using namespace boolcum::io;

namespace {

template <class T, class Parse>
void expect_round_trip(const T& value, Parse parse) {
  const json j = to_json(value);
  EXPECT_EQ(parse(j), value);
  EXPECT_EQ(parse(parse_text(j.dump())), value);
}

}  // namespace

TEST(Serialize, Scalars) {
  EXPECT_EQ(to_json(Scalar(-3, 6)), "-1/2");
  EXPECT_EQ(scalar_from_json(json(7)), Scalar(7));
  expect_round_trip(Scalar(22, 7), scalar_from_json);
  EXPECT_THROW(scalar_from_json(json(1.5)), ParseError);
  EXPECT_THROW(scalar_from_json(json("x")), ParseError);
}

TEST(Serialize, RoundTripsEveryType) {
  Rng rng(91);
  expect_round_trip(random_matrix(rng, 3), matrix_from_json);
  expect_round_trip(TruncatedSeries({1, Scalar(1, 2), -4}), series_from_json);
  expect_round_trip(IntervalPartition({2, 1, 1}), partition_from_json);
  expect_round_trip(random_moments(rng, 5), moments_from_json);
  expect_round_trip(CumulantSeq(random_moments(rng, 4).values()), cumulants_from_json);
  expect_round_trip(AlgElement::x() + Scalar(1, 2) * AlgElement::word("XY") + AlgElement::unit(),
                    alg_element_from_json);

  const JointState js = random_joint_state(rng, 4);
  const json jj = to_json(js);
  const JointState back = joint_state_from_json(jj);
  EXPECT_EQ(back.x(), js.x());
  EXPECT_EQ(back.y(), js.y());

  const OVDistribution d = random_ov_distribution(rng, 3, 2);
  expect_round_trip(d, ov_distribution_from_json);
  expect_round_trip(ov_moments_to_cumulants(d), mulseries_from_json);
  const MultilinearMap f = d.moment(3);
  EXPECT_EQ(multilinear_from_json(to_json(f), 2), f);

  const OVJointState s = random_ov_joint_state(rng, 3, 2);
  const OVJointState s2 = ov_joint_state_from_json(parse_text(to_json(s).dump()));
  EXPECT_EQ(s2.x(), s.x());
  EXPECT_EQ(s2.y(), s.y());
}

TEST(Serialize, BasisKeys) {
  const MultilinearMap f(2, 2);
  EXPECT_EQ(basis_key(f, f.flat_index(std::vector<std::size_t>{1, 2})), "0,1;1,0");
  EXPECT_EQ(basis_key(MultilinearMap(0, 2), 0), "");
  // Missing keys read as zero.
  const MultilinearMap sparse = multilinear_from_json(parse_text(R"({"arity":1,"table":{"1,1":[["1","0"],["0","2"]]}})"), 2);
  EXPECT_TRUE(sparse.at(0).is_zero());
  EXPECT_EQ(sparse.at(3), MatrixB(2, {1, 0, 0, 2}));
}

TEST(Serialize, MalformedInputs) {
  EXPECT_THROW(parse_text("{\"order\": "), ParseError);
  EXPECT_THROW(moments_from_json(parse_text(R"({"moments":["1"]})")), ParseError);
  EXPECT_THROW(moments_from_json(parse_text(R"({"order":2,"moments":["1"]})")), ParseError);
  EXPECT_THROW(matrix_from_json(parse_text(R"([["1","2"],["3"]])")), ParseError);
  EXPECT_THROW(partition_from_json(parse_text("[2, 0]")), Error);
  EXPECT_THROW(multilinear_from_json(parse_text(R"({"arity":1,"table":{"2,0":[["1","0"],["0","1"]]}})"), 2),
               ParseError);
  EXPECT_THROW(alg_element_from_json(parse_text(R"({"terms":{"XZ":"1"}})")), ParseError);
}
