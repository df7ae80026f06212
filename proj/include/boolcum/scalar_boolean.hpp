#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boolcum/errors.hpp"
#include "boolcum/scalar.hpp"
#include "boolcum/series.hpp"

namespace boolcum {

/// Finite sequence s_1, ..., s_N of exact scalars, indexed from 1. The tag
/// keeps moment and cumulant sequences apart at compile time.
template <class Tag>
class OneBasedSeq {
 public:
  explicit OneBasedSeq(std::vector<Scalar> values) : values_(std::move(values)) {
    if (values_.empty()) throw OutOfRange("sequence order must be at least 1");
  }

  static OneBasedSeq zero(std::size_t order) { return OneBasedSeq(std::vector<Scalar>(order)); }

  std::size_t order() const { return values_.size(); }
  const Scalar& at(std::size_t n) const {
    if (n == 0 || n > values_.size()) {
      throw OutOfRange("index " + std::to_string(n) + " outside 1.." +
                       std::to_string(values_.size()));
    }
    return values_[n - 1];
  }
  const std::vector<Scalar>& values() const { return values_; }

  /// The first `order` terms.
  OneBasedSeq truncated(std::size_t order) const {
    if (order == 0 || order > values_.size()) throw OutOfRange("cannot truncate to that order");
    return OneBasedSeq(std::vector<Scalar>(values_.begin(), values_.begin() + order));
  }

  friend bool operator==(const OneBasedSeq&, const OneBasedSeq&) = default;

 private:
  std::vector<Scalar> values_;
};

struct MomentTag {};
struct CumulantTag {};

/// m_n = phi(X^n) for n = 1..N; m_0 = 1 is implicit.
using MomentSeq = OneBasedSeq<MomentTag>;
/// b_n = b^n(X, ..., X) for n = 1..N.
using CumulantSeq = OneBasedSeq<CumulantTag>;

/// Triangular solve of m_n = sum_{k=1}^n b_k m_{n-k}.
CumulantSeq moments_to_cumulants(const MomentSeq& m);
/// Forward run of the same recurrence.
MomentSeq cumulants_to_moments(const CumulantSeq& b);

/// m_n as the sum over all interval partitions of {1..n} of the product of
/// the cumulants indexed by the block sizes.
Scalar moments_via_compositions(const CumulantSeq& b, std::size_t n);

/// Cumulants of 1 + X from those of X:
///   b_1 -> 1 + b_1,   b_n -> sum_{k=0}^{n-2} C(n-2, k) b_{k+2}  (n >= 2).
CumulantSeq shift_one(const CumulantSeq& b);

/// Moments of 1 + X by binomial expansion of (1 + X)^n.
MomentSeq shift_moments(const MomentSeq& m);

/// Moments of X + Y for boolean independent X, Y (cumulants add).
MomentSeq bconv_add(const MomentSeq& mX, const MomentSeq& mY);

/// Cumulants of Z = X + Y + XY for boolean independent X, Y:
///   b_n(Z) = b_n(X) + b_n(Y) + sum_{k=1}^n b_k(X) b_{n-k+1}(Y).
CumulantSeq product_cumulants(const CumulantSeq& bX, const CumulantSeq& bY);

/// Moments of Z = X + Y + XY, so that 1 + Z = (1 + X)(1 + Y).
MomentSeq bconv_mul(const MomentSeq& mX, const MomentSeq& mY);

/// B_X(z) = sum_n b_n z^{n-1}.
TruncatedSeries b_transform(const MomentSeq& m);
/// M_X(z) = sum_n m_n z^{n-1}.
TruncatedSeries m_transform(const MomentSeq& m);
TruncatedSeries as_series(const CumulantSeq& b);
TruncatedSeries as_series(const MomentSeq& m);

struct MultiplicativeCheck {
  bool holds = false;
  /// Index k of the first z^k coefficient where the two sides differ.
  std::optional<std::size_t> first_mismatch;
  TruncatedSeries lhs;  // B_{(1+X)(1+Y)}
  TruncatedSeries rhs;  // B_{1+X} * B_{1+Y}
};

/// Compares B_{(1+X)(1+Y)} with B_{1+X} B_{1+Y} modulo z^N. The left side is
/// obtained from the moments of 1 + Z; the right side from shift_one applied
/// in cumulant coordinates.
MultiplicativeCheck check_multiplicative(const MomentSeq& mX, const MomentSeq& mY);

/// sum_{k=a}^{n-b} C(k, a) C(n-k, b) == C(n+1, a+b+1), in exact integers.
bool binomial_identity_check(long n, long a, long b);

}  // namespace boolcum
