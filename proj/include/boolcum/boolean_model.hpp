#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolcum/random.hpp"
#include "boolcum/report.hpp"
#include "boolcum/scalar.hpp"
#include "boolcum/scalar_boolean.hpp"

namespace boolcum {

/// Word over the alphabet {X, Y}. The empty word is the unit.
using Word = std::string;

/// Non-commutative polynomial in X and Y with rational coefficients: a finite
/// linear combination of words. Zero coefficients are never stored.
class AlgElement {
 public:
  AlgElement() = default;

  static AlgElement unit() { return word(""); }
  static AlgElement word(std::string_view w, const Scalar& coeff = Scalar(1));
  static AlgElement x() { return word("X"); }
  static AlgElement y() { return word("Y"); }

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Longest word appearing with nonzero coefficient.
  std::size_t degree() const;

  AlgElement& operator+=(const AlgElement& other);
  AlgElement& operator*=(const Scalar& c);

  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) {
    return a += b * Scalar(-1);
  }
  friend AlgElement operator*(AlgElement a, const Scalar& c) { return a *= c; }
  friend AlgElement operator*(const Scalar& c, AlgElement a) { return a *= c; }
  /// Concatenation product; the unit is absorbed.
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend bool operator==(const AlgElement&, const AlgElement&) = default;

  /// Human-readable form, e.g. "X + 1/2*XY + 1".
  std::string str() const;

 private:
  void add_term(const Word& w, const Scalar& c);
  std::map<Word, Scalar> terms_;
};

AlgElement power(const AlgElement& a, std::size_t n);

/// Marginal moment sequences of a boolean independent pair (X, Y). The joint
/// functional is the run factorization of words.
class JointState {
 public:
  JointState(MomentSeq x, MomentSeq y);

  const MomentSeq& x() const { return x_; }
  const MomentSeq& y() const { return y_; }
  std::size_t order() const { return x_.order(); }

 private:
  MomentSeq x_;
  MomentSeq y_;
};

JointState random_joint_state(Rng& rng, std::size_t order);

/// phi of a nonempty word: the product of marginal moments m_{run length}
/// over its maximal runs of equal letters.
Scalar phi_word(const JointState& s, std::string_view w);

/// Linear extension of phi_word with phi(1) = 1.
Scalar phi_elem(const JointState& s, const AlgElement& a);

/// b^n(a_1, ..., a_n) by the recurrence
///   b^k(a_1..a_k) = phi(a_1 ... a_k) - sum_{j<k} b^j(a_1..a_j) phi(a_{j+1} ... a_k).
Scalar mixed_cumulant(const JointState& s, std::span<const AlgElement> entries);
/// b^1 .. b^n of every prefix of `entries`.
std::vector<Scalar> mixed_cumulant_prefixes(const JointState& s,
                                            std::span<const AlgElement> entries);

/// {X, Y, XY, YX, X + Y, X^2, 1}.
std::vector<AlgElement> structured_pool();

/// A pool element or a random rational combination of two of them. The unit
/// is excluded unless `allow_unit`.
AlgElement random_entry(Rng& rng, bool allow_unit);

/// b^{n+m+2}(a_1..a_n, X, Y, a_{n+3}..a_{n+m+2}) == 0 for `samples` random
/// choices of the surrounding entries.
Report verify_vanishing(const JointState& s, std::size_t n, std::size_t m, Rng& rng,
                        std::size_t samples);

/// Unit entries: b^{n+1}(1, a..) = b^{n+1}(a.., 1) = 0 and an interior unit
/// drops out, b^{n+1}(a_1..a_k, 1, a_{k+1}..a_n) = b^n(a_1..a_n).
Report verify_unit_rules(const JointState& s, std::size_t n, Rng& rng, std::size_t samples);

/// Product entries, for every position k = 0..n:
///   b^{n+1}(a_1..a_k, XY, a_{k+1}..a_n) = b^{k+1}(a_1..a_k, X) b^{n-k+1}(Y, a_{k+1}..a_n)
/// and b^{n+2} vanishes with adjacent entries (XY, XY), (Y, XY) or (XY, X).
Report verify_product_rules(const JointState& s, std::size_t n, Rng& rng, std::size_t samples);

std::string describe_entries(std::span<const AlgElement> entries);

}  // namespace boolcum
