#include "boolcum/scalar_boolean.hpp"

#include "boolcum/interval_partition.hpp"

namespace boolcum {

namespace {

template <class A, class B>
void require_same_order(const OneBasedSeq<A>& x, const OneBasedSeq<B>& y) {
  if (x.order() != y.order()) {
    throw OrderMismatch("sequence orders differ: " + std::to_string(x.order()) + " vs " +
                        std::to_string(y.order()));
  }
}

}  // namespace

CumulantSeq moments_to_cumulants(const MomentSeq& m) {
  const auto& mv = m.values();
  const std::size_t N = m.order();
  std::vector<Scalar> b(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Scalar acc = mv[n - 1];
    for (std::size_t k = 1; k < n; ++k) acc -= b[k - 1] * mv[n - k - 1];
    b[n - 1] = std::move(acc);
  }
  return CumulantSeq(std::move(b));
}

MomentSeq cumulants_to_moments(const CumulantSeq& b) {
  const auto& bv = b.values();
  const std::size_t N = b.order();
  std::vector<Scalar> m(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Scalar acc = bv[n - 1];
    for (std::size_t k = 1; k < n; ++k) acc += bv[k - 1] * m[n - k - 1];
    m[n - 1] = std::move(acc);
  }
  return MomentSeq(std::move(m));
}

Scalar moments_via_compositions(const CumulantSeq& b, std::size_t n) {
  if (n == 0 || n > b.order()) {
    throw OutOfRange("composition sum needs 1 <= n <= " + std::to_string(b.order()));
  }
  Scalar total;
  for (const auto& gamma : enumerate_interval_partitions(n)) {
    Scalar term(1);
    for (std::size_t size : gamma.block_sizes()) term *= b.at(size);
    total += term;
  }
  return total;
}

CumulantSeq shift_one(const CumulantSeq& b) {
  const std::size_t N = b.order();
  std::vector<Scalar> out(N);
  out[0] = Scalar(1) + b.at(1);
  for (std::size_t n = 2; n <= N; ++n) {
    Scalar acc;
    for (std::size_t k = 0; k <= n - 2; ++k) {
      acc += Scalar(mpq_class(binomial(n - 2, k))) * b.at(k + 2);
    }
    out[n - 1] = std::move(acc);
  }
  return CumulantSeq(std::move(out));
}

MomentSeq shift_moments(const MomentSeq& m) {
  const std::size_t N = m.order();
  std::vector<Scalar> out(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Scalar acc(1);  // k = 0 term, phi(1) = 1
    for (std::size_t k = 1; k <= n; ++k) acc += Scalar(mpq_class(binomial(n, k))) * m.at(k);
    out[n - 1] = std::move(acc);
  }
  return MomentSeq(std::move(out));
}

MomentSeq bconv_add(const MomentSeq& mX, const MomentSeq& mY) {
  require_same_order(mX, mY);
  const auto bX = moments_to_cumulants(mX);
  const auto bY = moments_to_cumulants(mY);
  std::vector<Scalar> b(mX.order());
  for (std::size_t n = 1; n <= b.size(); ++n) b[n - 1] = bX.at(n) + bY.at(n);
  return cumulants_to_moments(CumulantSeq(std::move(b)));
}

CumulantSeq product_cumulants(const CumulantSeq& bX, const CumulantSeq& bY) {
  require_same_order(bX, bY);
  const std::size_t N = bX.order();
  std::vector<Scalar> out(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Scalar acc = bX.at(n) + bY.at(n);
    for (std::size_t k = 1; k <= n; ++k) acc += bX.at(k) * bY.at(n - k + 1);
    out[n - 1] = std::move(acc);
  }
  return CumulantSeq(std::move(out));
}

MomentSeq bconv_mul(const MomentSeq& mX, const MomentSeq& mY) {
  require_same_order(mX, mY);
  return cumulants_to_moments(
      product_cumulants(moments_to_cumulants(mX), moments_to_cumulants(mY)));
}

TruncatedSeries as_series(const CumulantSeq& b) { return TruncatedSeries(b.values()); }
TruncatedSeries as_series(const MomentSeq& m) { return TruncatedSeries(m.values()); }

TruncatedSeries b_transform(const MomentSeq& m) { return as_series(moments_to_cumulants(m)); }
TruncatedSeries m_transform(const MomentSeq& m) { return as_series(m); }

MultiplicativeCheck check_multiplicative(const MomentSeq& mX, const MomentSeq& mY) {
  require_same_order(mX, mY);
  auto lhs = b_transform(shift_moments(bconv_mul(mX, mY)));
  auto rhs = as_series(shift_one(moments_to_cumulants(mX))) *
             as_series(shift_one(moments_to_cumulants(mY)));
  std::optional<std::size_t> mismatch;
  for (std::size_t k = 0; k < lhs.order(); ++k) {
    if (lhs[k] != rhs[k]) {
      mismatch = k;
      break;
    }
  }
  return {!mismatch.has_value(), mismatch, std::move(lhs), std::move(rhs)};
}

bool binomial_identity_check(long n, long a, long b) {
  if (a < 0 || b < 0 || a + b > n) {
    throw OutOfRange("binomial identity needs 0 <= a, 0 <= b, a + b <= n");
  }
  mpz_class lhs = 0;
  for (long k = a; k <= n - b; ++k) lhs += binomial(k, a) * binomial(n - k, b);
  return lhs == binomial(n + 1, a + b + 1);
}

}  // namespace boolcum
