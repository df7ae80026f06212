#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boolcum/boolean_model.hpp"
#include "boolcum/matrix.hpp"
#include "boolcum/multilinear.hpp"
#include "boolcum/random.hpp"
#include "boolcum/report.hpp"
#include "boolcum/scalar_boolean.hpp"

namespace boolcum {

/// Operator-valued moments m^n(f_1..f_{n-1}) = Phi(X f_1 X ... f_{n-1} X) for
/// n = 1..N; moment n is a multilinear map of arity n - 1.
class OVDistribution {
 public:
  explicit OVDistribution(std::vector<MultilinearMap> moments);

  static OVDistribution zero(std::size_t order, std::size_t dim);

  std::size_t order() const { return moments_.size(); }
  std::size_t dim() const { return moments_.front().dim(); }
  /// Moment n (1-based), of arity n - 1.
  const MultilinearMap& moment(std::size_t n) const;
  const std::vector<MultilinearMap>& moments() const { return moments_; }

  /// Moments 1..order.
  OVDistribution truncated(std::size_t order) const;

  /// The series M with component k = moment k + 1.
  MulSeries as_series() const { return MulSeries(moments_); }
  static OVDistribution from_series(const MulSeries& m) { return OVDistribution(m.components()); }

  friend bool operator==(const OVDistribution&, const OVDistribution&) = default;

 private:
  std::vector<MultilinearMap> moments_;
};

OVDistribution random_ov_distribution(Rng& rng, std::size_t order, std::size_t dim);

/// Marginal operator-valued distributions of a pair (X, Y) that is boolean
/// independent over the matrix algebra.
class OVJointState {
 public:
  OVJointState(OVDistribution x, OVDistribution y);

  const OVDistribution& x() const { return x_; }
  const OVDistribution& y() const { return y_; }
  std::size_t order() const { return x_.order(); }
  std::size_t dim() const { return x_.dim(); }

 private:
  OVDistribution x_;
  OVDistribution y_;
};

OVJointState random_ov_joint_state(Rng& rng, std::size_t order, std::size_t dim);

enum class Letter : char { X = 'X', Y = 'Y' };

/// g_0 L_1 g_1 L_2 ... L_r g_r with letters L_i and matrices g_i. The scalar
/// coefficient lives in g_0. With r = 0 this is the matrix g_0 itself.
struct OVMonomial {
  MatrixB head;
  std::vector<std::pair<Letter, MatrixB>> tail;

  std::string str() const;
};

OVMonomial operator*(const OVMonomial& a, const OVMonomial& b);

/// Finite sum of monomials: an element of the algebra generated by X, Y and
/// the matrices.
class OVElement {
 public:
  explicit OVElement(std::size_t dim) : dim_(dim) {}

  static OVElement letter(Letter l, std::size_t dim);
  static OVElement x(std::size_t dim) { return letter(Letter::X, dim); }
  static OVElement y(std::size_t dim) { return letter(Letter::Y, dim); }
  static OVElement matrix(const MatrixB& g);
  static OVElement unit(std::size_t dim) { return matrix(MatrixB::identity(dim)); }
  /// A scalar word over {X, Y} with identity matrices between letters.
  static OVElement from_alg(const AlgElement& a, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<OVMonomial>& terms() const { return terms_; }

  OVElement& operator+=(const OVElement& other);
  friend OVElement operator+(OVElement a, const OVElement& b) { return a += b; }
  friend OVElement operator*(const OVElement& a, const OVElement& b);

  std::string str() const;

 private:
  std::size_t dim_;
  std::vector<OVMonomial> terms_;
};

/// Phi of an interleaved word: the word is cut wherever the letter changes;
/// each run contributes the marginal moment map of its letter evaluated at
/// the matrices inside the run, and the matrices at the cuts multiply in
/// between. Outer matrices factor out on both sides.
MatrixB ov_phi_word(const OVJointState& s, const OVMonomial& w);
MatrixB ov_phi(const OVJointState& s, const OVElement& a);

/// b^n_{X_1..X_n}(f_1..f_{n-1}) from
///   Phi(X_1 f_1 ... f_{n-1} X_n) = sum_k b^k_{X_1..X_k}(f_1..f_{k-1}) f_k Phi(X_{k+1} ... X_n).
MatrixB ov_mixed_cumulant(const OVJointState& s, std::span<const OVElement> lower,
                          std::span<const MatrixB> upper);

/// Matrix-valued cumulant of Phi in the scalar sense, with no matrices
/// between the entries: Phi(a_1 ... a_n) = sum_k b^k(a_1..a_k) Phi(a_{k+1} ... a_n).
MatrixB functional_cumulant(const OVJointState& s, std::span<const OVElement> entries);

/// Cumulant series B with component k = b^{k+1}, solved triangularly per
/// basis tuple.
MulSeries ov_moments_to_cumulants(const OVDistribution& d);

/// Inverse of ov_moments_to_cumulants. Throws std::logic_error if the result
/// fails M = B(1 + I M).
OVDistribution ov_cumulants_to_moments(const MulSeries& b);

/// M == B (1 + I M) as multilinear function series.
bool satisfies_moment_cumulant_relation(const MulSeries& moments, const MulSeries& cumulants);

/// Cumulant series of 1 + X: component 0 gains the identity, and
///   b^n_{1+X}(f_1..f_{n-1}) = sum over interval partitions g of {1..n-1} of
///   b^{|g|+1}_X(grouped products of f by g).
MulSeries ov_shift_one(const MulSeries& b);

/// Moment family of an element Z under the joint state, up to `order`. Words
/// are read left to right and reduced run by run, merging partial words that
/// only differ in their already-closed prefix.
OVDistribution ov_moments_of(const OVJointState& s, const OVElement& z, std::size_t order);

/// B_{X+Y} = B_X + B_Y.
MulSeries ov_bconv_add(const OVJointState& s);
/// Cumulant series of Z = X + Y + XY, from joint-model moments of Z.
MulSeries ov_bconv_mul(const OVJointState& s);

/// Dimension-1 embeddings of scalar data.
OVDistribution ov_from_scalar(const MomentSeq& m);
OVJointState ov_from_scalar(const JointState& s);
MulSeries mulseries_from_scalar(const TruncatedSeries& f);
/// Reads a dimension-1 series back as scalars.
std::vector<Scalar> scalar_coefficients(const MulSeries& f);

/// Lower-argument pool: X, Y, XY, YX, X + Y, g, g X h, X g X with random g, h.
OVElement random_ov_entry(Rng& rng, std::size_t dim);

/// Adjacent X, Y lower entries kill the cumulant for every basis upper tuple.
Report verify_ov_vanishing(const OVJointState& s, std::size_t n, std::size_t m, Rng& rng,
                           std::size_t samples);
/// A matrix lower entry: first or last vanishes; interior merges into the
/// neighbouring upper arguments.
Report verify_ov_matrix_entries(const OVJointState& s, std::size_t n, Rng& rng,
                                std::size_t samples);
/// An XY lower entry splits the cumulant into an X-ended and a Y-started factor.
Report verify_ov_product_rules(const OVJointState& s, std::size_t n, Rng& rng,
                               std::size_t samples);
/// Evaluating at identity upper arguments gives the scalar-sense cumulant of Phi.
Report verify_unit_upper_arguments(const OVJointState& s, std::size_t n, Rng& rng,
                                   std::size_t samples);
/// f_0 b^n_X(h_1 f_1, ..., h_{n-1} f_{n-1}) h_n equals the scalar-sense
/// cumulant with entries (f_0 X h_1, f_1 X h_2, ..., f_{n-1} X h_n).
Report verify_bimodule_transfer(const OVJointState& s, std::size_t n, Rng& rng,
                                std::size_t samples);

}  // namespace boolcum
