#include "boolcum/operator_valued.hpp"

#include <sstream>
#include <stdexcept>

#include "boolcum/errors.hpp"
#include "boolcum/interval_partition.hpp"

namespace boolcum {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

bool has_zero_matrix(const OVMonomial& w) {
  if (w.head.is_zero()) return true;
  for (const auto& [letter, g] : w.tail) {
    if (g.is_zero()) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Distributions and joint states

OVDistribution::OVDistribution(std::vector<MultilinearMap> moments) : moments_(std::move(moments)) {
  if (moments_.empty()) throw OutOfRange("distribution order must be at least 1");
  for (std::size_t k = 0; k < moments_.size(); ++k) {
    if (moments_[k].arity() != k) {
      throw DimensionMismatch("moment " + std::to_string(k + 1) + " must have arity " +
                              std::to_string(k));
    }
    if (moments_[k].dim() != moments_[0].dim()) {
      throw DimensionMismatch("moments must share a dimension");
    }
  }
}

OVDistribution OVDistribution::zero(std::size_t order, std::size_t dim) {
  return from_series(MulSeries::zero(order, dim));
}

const MultilinearMap& OVDistribution::moment(std::size_t n) const {
  if (n == 0 || n > moments_.size()) {
    throw OutOfRange("moment " + std::to_string(n) + " outside 1.." +
                     std::to_string(moments_.size()));
  }
  return moments_[n - 1];
}

OVDistribution OVDistribution::truncated(std::size_t order) const {
  if (order == 0 || order > moments_.size()) throw OutOfRange("cannot truncate to that order");
  return OVDistribution(std::vector<MultilinearMap>(moments_.begin(), moments_.begin() + order));
}

OVDistribution random_ov_distribution(Rng& rng, std::size_t order, std::size_t dim) {
  std::vector<MultilinearMap> moments;
  moments.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    MultilinearMap map(k, dim);
    for (std::size_t flat = 0; flat < map.table_size(); ++flat) {
      map.at(flat) = random_matrix(rng, dim);
    }
    moments.push_back(std::move(map));
  }
  return OVDistribution(std::move(moments));
}

OVJointState::OVJointState(OVDistribution x, OVDistribution y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.order() != y_.order()) throw OrderMismatch("joint state marginals must share an order");
  if (x_.dim() != y_.dim()) throw DimensionMismatch("joint state marginals must share a dimension");
}

OVJointState random_ov_joint_state(Rng& rng, std::size_t order, std::size_t dim) {
  auto x = random_ov_distribution(rng, order, dim);
  auto y = random_ov_distribution(rng, order, dim);
  return OVJointState(std::move(x), std::move(y));
}

// ---------------------------------------------------------------------------
// Elements

std::string OVMonomial::str() const {
  std::ostringstream os;
  os << head;
  std::string out = os.str();
  for (const auto& [letter, g] : tail) {
    std::ostringstream gs;
    gs << g;
    out += std::string(" ") + static_cast<char>(letter) + " " + gs.str();
  }
  return out;
}

OVMonomial operator*(const OVMonomial& a, const OVMonomial& b) {
  OVMonomial out{a.head, a.tail};
  if (out.tail.empty()) {
    out.head = a.head * b.head;
  } else {
    out.tail.back().second = out.tail.back().second * b.head;
  }
  out.tail.insert(out.tail.end(), b.tail.begin(), b.tail.end());
  return out;
}

OVElement OVElement::letter(Letter l, std::size_t dim) {
  OVElement e(dim);
  e.terms_.push_back({MatrixB::identity(dim), {{l, MatrixB::identity(dim)}}});
  return e;
}

OVElement OVElement::matrix(const MatrixB& g) {
  OVElement e(g.dim());
  if (!g.is_zero()) e.terms_.push_back({g, {}});
  return e;
}

OVElement OVElement::from_alg(const AlgElement& a, std::size_t dim) {
  OVElement out(dim);
  for (const auto& [word, coeff] : a.terms()) {
    OVMonomial m{MatrixB::identity(dim) * coeff, {}};
    for (char c : word) m.tail.emplace_back(c == 'X' ? Letter::X : Letter::Y, MatrixB::identity(dim));
    out.terms_.push_back(std::move(m));
  }
  return out;
}

OVElement& OVElement::operator+=(const OVElement& other) {
  if (dim_ != other.dim_) throw DimensionMismatch("element dimensions differ");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

OVElement operator*(const OVElement& a, const OVElement& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("element dimensions differ");
  OVElement out(a.dim_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& u : a.terms_) {
    for (const auto& v : b.terms_) {
      OVMonomial w = u * v;
      if (!has_zero_matrix(w)) out.terms_.push_back(std::move(w));
    }
  }
  return out;
}

std::string OVElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) out += (out.empty() ? "" : " + ") + t.str();
  return out;
}

// ---------------------------------------------------------------------------
// Conditional expectation of the joint model

MatrixB ov_phi_word(const OVJointState& s, const OVMonomial& w) {
  if (w.head.dim() != s.dim()) throw DimensionMismatch("word and state dimensions differ");
  if (w.tail.empty()) return w.head;
  MatrixB out = w.head;
  const std::size_t r = w.tail.size();
  std::vector<MatrixB> interior;
  std::size_t i = 0;
  while (i < r) {
    const Letter letter = w.tail[i].first;
    interior.clear();
    while (i + 1 < r && w.tail[i + 1].first == letter) {
      interior.push_back(w.tail[i].second);
      ++i;
    }
    const OVDistribution& marginal = letter == Letter::X ? s.x() : s.y();
    const std::size_t run = interior.size() + 1;
    if (run > marginal.order()) {
      throw OutOfRange("run of length " + std::to_string(run) + " exceeds moment order " +
                       std::to_string(marginal.order()));
    }
    out = out * marginal.moment(run).evaluate(interior);
    out = out * w.tail[i].second;  // the cut, or the trailing matrix after the last run
    ++i;
  }
  return out;
}

MatrixB ov_phi(const OVJointState& s, const OVElement& a) {
  MatrixB out(s.dim());
  for (const auto& t : a.terms()) out += ov_phi_word(s, t);
  return out;
}

// ---------------------------------------------------------------------------
// Mixed cumulants

MatrixB ov_mixed_cumulant(const OVJointState& s, std::span<const OVElement> lower,
                          std::span<const MatrixB> upper) {
  const std::size_t n = lower.size();
  if (n == 0) throw OutOfRange("cumulants need at least one lower argument");
  if (upper.size() + 1 != n) throw OutOfRange("need exactly one upper argument fewer than lower");
  std::vector<std::vector<MatrixB>> seg(n, std::vector<MatrixB>(n + 1, MatrixB(s.dim())));
  for (std::size_t i = 0; i < n; ++i) {
    OVElement product = lower[i];
    seg[i][i + 1] = ov_phi(s, product);
    for (std::size_t k = i + 2; k <= n; ++k) {
      product = product * OVElement::matrix(upper[k - 2]) * lower[k - 1];
      seg[i][k] = ov_phi(s, product);
    }
  }
  std::vector<MatrixB> b;
  b.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    MatrixB acc = seg[0][k];
    for (std::size_t j = 1; j < k; ++j) acc -= b[j - 1] * upper[j - 1] * seg[j][k];
    b.push_back(std::move(acc));
  }
  return b.back();
}

MatrixB functional_cumulant(const OVJointState& s, std::span<const OVElement> entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw OutOfRange("cumulants need at least one entry");
  std::vector<std::vector<MatrixB>> seg(n, std::vector<MatrixB>(n + 1, MatrixB(s.dim())));
  for (std::size_t i = 0; i < n; ++i) {
    OVElement product = entries[i];
    seg[i][i + 1] = ov_phi(s, product);
    for (std::size_t k = i + 2; k <= n; ++k) {
      product = product * entries[k - 1];
      seg[i][k] = ov_phi(s, product);
    }
  }
  std::vector<MatrixB> b;
  b.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    MatrixB acc = seg[0][k];
    for (std::size_t j = 1; j < k; ++j) acc -= b[j - 1] * seg[j][k];
    b.push_back(std::move(acc));
  }
  return b.back();
}

// ---------------------------------------------------------------------------
// Moment <-> cumulant series

namespace {

// Sum over k = 1..n-1 of left_k(e_1..e_{k-1}) e_k right_{n-k}(e_{k+1}..e_{n-1}),
// where left_k and right_j are arity k-1 and j-1 maps.
MatrixB cross_terms(const std::vector<MultilinearMap>& left,
                    const std::vector<MultilinearMap>& right, std::size_t n, std::size_t flat,
                    std::size_t d) {
  const std::size_t base = d * d;
  MatrixB acc(d);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t tail = power(base, n - k - 1);
    const std::size_t head = flat / (tail * base);
    const std::size_t e = (flat / tail) % base;
    const MatrixB& l = left[k - 1].at(head);
    const MatrixB& r = right[n - k - 1].at(flat % tail);
    const std::size_t i = e / d;
    const std::size_t j = e % d;
    // l * E_ij * r has entries l(p, i) r(j, q).
    for (std::size_t p = 0; p < d; ++p) {
      if (l(p, i).is_zero()) continue;
      for (std::size_t q = 0; q < d; ++q) {
        if (!r(j, q).is_zero()) acc(p, q) += l(p, i) * r(j, q);
      }
    }
  }
  return acc;
}

}  // namespace

MulSeries ov_moments_to_cumulants(const OVDistribution& dist) {
  const std::size_t N = dist.order();
  std::vector<MultilinearMap> b;
  b.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    MultilinearMap bn = dist.moment(n);
    for (std::size_t flat = 0; flat < bn.table_size(); ++flat) {
      bn.at(flat) -= cross_terms(b, dist.moments(), n, flat, dist.dim());
    }
    b.push_back(std::move(bn));
  }
  return MulSeries(std::move(b));
}

OVDistribution ov_cumulants_to_moments(const MulSeries& cumulants) {
  const std::size_t N = cumulants.order();
  std::vector<MultilinearMap> m;
  m.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    MultilinearMap mn = cumulants.component(n - 1);
    for (std::size_t flat = 0; flat < mn.table_size(); ++flat) {
      mn.at(flat) += cross_terms(cumulants.components(), m, n, flat, cumulants.dim());
    }
    m.push_back(std::move(mn));
  }
  OVDistribution out(std::move(m));
  if (!satisfies_moment_cumulant_relation(out.as_series(), cumulants)) {
    throw std::logic_error("moment series fails M = B(1 + I M)");
  }
  return out;
}

bool satisfies_moment_cumulant_relation(const MulSeries& moments, const MulSeries& cumulants) {
  const std::size_t N = moments.order();
  const std::size_t d = moments.dim();
  const MulSeries rhs =
      cumulants * (MulSeries::one(N, d) + MulSeries::identity_function(N, d) * moments);
  return rhs == moments;
}

MulSeries ov_shift_one(const MulSeries& b) {
  const std::size_t N = b.order();
  const std::size_t d = b.dim();
  std::vector<MultilinearMap> out;
  out.reserve(N);
  out.push_back(MultilinearMap::constant(MatrixB::identity(d) + b.component(0).at(0)));
  for (std::size_t k = 1; k < N; ++k) {
    const auto partitions = enumerate_interval_partitions(k);
    MultilinearMap ck(k, d);
    for (std::size_t flat = 0; flat < ck.table_size(); ++flat) {
      const std::vector<MatrixB> args = ck.basis_arguments(flat);
      MatrixB acc(d);
      for (const auto& gamma : partitions) {
        acc += b.component(gamma.block_count()).evaluate(apply_pi(gamma, args));
      }
      ck.at(flat) = std::move(acc);
    }
    out.push_back(std::move(ck));
  }
  return MulSeries(std::move(out));
}

// ---------------------------------------------------------------------------
// Convolutions

namespace {

// A partially read word, reduced as far as the run factorization allows:
// left * m_L(interior) * trailing once the current run of letter L closes.
// With no letter read yet the whole word so far sits in `left`.
struct PendingRun {
  bool started = false;
  Letter letter = Letter::X;
  std::vector<MatrixB> interior;
  MatrixB trailing;
  MatrixB left;
};

using RunStates = std::vector<PendingRun>;

MatrixB close_run(const OVJointState& s, const PendingRun& st) {
  const OVDistribution& marginal = st.letter == Letter::X ? s.x() : s.y();
  const std::size_t run = st.interior.size() + 1;
  if (run > marginal.order()) {
    throw OutOfRange("run of length " + std::to_string(run) + " exceeds moment order " +
                     std::to_string(marginal.order()));
  }
  return st.left * marginal.moment(run).evaluate(st.interior) * st.trailing;
}

// The value is linear in `left`, so states with equal remaining data merge.
void add_state(RunStates& states, PendingRun st) {
  if (st.left.is_zero() || st.trailing.is_zero()) return;
  for (auto& other : states) {
    if (other.started == st.started && other.letter == st.letter && other.trailing == st.trailing &&
        other.interior == st.interior) {
      other.left += st.left;
      return;
    }
  }
  states.push_back(std::move(st));
}

// Appends `insert * z` to every state.
RunStates extend(const OVJointState& s, const RunStates& in, const MatrixB& insert, const OVElement& z) {
  RunStates out;
  for (const auto& st : in) {
    for (const auto& mono : z.terms()) {
      PendingRun cur = st;
      const MatrixB pre = insert * mono.head;
      if (cur.started) {
        cur.trailing = cur.trailing * pre;
      } else {
        cur.left = cur.left * pre;
      }
      for (const auto& [letter, g] : mono.tail) {
        if (cur.started && cur.letter == letter) {
          cur.interior.push_back(cur.trailing);
        } else {
          if (cur.started) cur.left = close_run(s, cur);
          cur.started = true;
          cur.letter = letter;
          cur.interior.clear();
        }
        cur.trailing = g;
      }
      add_state(out, std::move(cur));
    }
  }
  return out;
}

MatrixB state_value(const OVJointState& s, const RunStates& states) {
  MatrixB out(s.dim());
  for (const auto& st : states) out += st.started ? close_run(s, st) : st.left;
  return out;
}

void fill_moments(const OVJointState& s, const OVElement& z, const RunStates& prefix,
                  std::size_t depth, std::size_t flat, MultilinearMap& target) {
  if (depth == target.arity()) {
    target.at(flat) = state_value(s, prefix);
    return;
  }
  const std::size_t d = s.dim();
  for (std::size_t e = 0; e < d * d; ++e) {
    fill_moments(s, z, extend(s, prefix, MatrixB::basis(d, e), z), depth + 1, flat * d * d + e, target);
  }
}

}  // namespace

OVDistribution ov_moments_of(const OVJointState& s, const OVElement& z, std::size_t order) {
  if (z.dim() != s.dim()) throw DimensionMismatch("element and state dimensions differ");
  const std::size_t d = s.dim();
  const RunStates start{{false, Letter::X, {}, MatrixB::identity(d), MatrixB::identity(d)}};
  const RunStates first = extend(s, start, MatrixB::identity(d), z);
  std::vector<MultilinearMap> moments;
  moments.reserve(order);
  for (std::size_t n = 1; n <= order; ++n) {
    MultilinearMap mn(n - 1, d);
    fill_moments(s, z, first, 0, 0, mn);
    moments.push_back(std::move(mn));
  }
  return OVDistribution(std::move(moments));
}

MulSeries ov_bconv_add(const OVJointState& s) {
  return ov_moments_to_cumulants(s.x()) + ov_moments_to_cumulants(s.y());
}

MulSeries ov_bconv_mul(const OVJointState& s) {
  const std::size_t d = s.dim();
  const OVElement X = OVElement::x(d);
  const OVElement Y = OVElement::y(d);
  return ov_moments_to_cumulants(ov_moments_of(s, X + Y + X * Y, s.order()));
}

// ---------------------------------------------------------------------------
// Dimension-1 embeddings

OVDistribution ov_from_scalar(const MomentSeq& m) {
  std::vector<MultilinearMap> moments;
  for (std::size_t n = 1; n <= m.order(); ++n) {
    moments.emplace_back(n - 1, 1, std::vector<MatrixB>{MatrixB::scalar(m.at(n))});
  }
  return OVDistribution(std::move(moments));
}

OVJointState ov_from_scalar(const JointState& s) {
  return OVJointState(ov_from_scalar(s.x()), ov_from_scalar(s.y()));
}

MulSeries mulseries_from_scalar(const TruncatedSeries& f) {
  std::vector<MultilinearMap> c;
  for (std::size_t k = 0; k < f.order(); ++k) {
    c.emplace_back(k, 1, std::vector<MatrixB>{MatrixB::scalar(f[k])});
  }
  return MulSeries(std::move(c));
}

std::vector<Scalar> scalar_coefficients(const MulSeries& f) {
  if (f.dim() != 1) throw DimensionMismatch("scalar read-back needs dimension 1");
  std::vector<Scalar> out;
  for (const auto& c : f.components()) out.push_back(c.at(0)(0, 0));
  return out;
}

// ---------------------------------------------------------------------------
// Verification sweeps

OVElement random_ov_entry(Rng& rng, std::size_t dim) {
  auto pick = [&]() -> OVElement {
    const OVElement X = OVElement::x(dim);
    const OVElement Y = OVElement::y(dim);
    switch (random_index(rng, 0, 7)) {
      case 0: return X;
      case 1: return Y;
      case 2: return X * Y;
      case 3: return Y * X;
      case 4: return X + Y;
      case 5: return OVElement::matrix(random_matrix(rng, dim));
      case 6: {
        auto g = OVElement::matrix(random_matrix(rng, dim));
        return g * X * OVElement::matrix(random_matrix(rng, dim));
      }
      default: return X * OVElement::matrix(random_matrix(rng, dim)) * X;
    }
  };
  if (random_index(rng, 0, 3) != 0) return pick();
  const auto c1 = OVElement::matrix(MatrixB::identity(dim) * random_scalar(rng));
  const auto c2 = OVElement::matrix(MatrixB::identity(dim) * random_scalar(rng));
  return c1 * pick() + c2 * pick();
}

namespace {

std::vector<OVElement> random_ov_entries(Rng& rng, std::size_t count, std::size_t dim) {
  std::vector<OVElement> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_ov_entry(rng, dim));
  return out;
}

std::vector<MatrixB> random_matrices(Rng& rng, std::size_t count, std::size_t dim) {
  std::vector<MatrixB> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_matrix(rng, dim));
  return out;
}

MatrixB random_unit(Rng& rng, std::size_t dim) {
  return MatrixB::basis(dim, random_index(rng, 0, dim * dim - 1));
}

template <class T>
std::vector<T> splice(const std::vector<T>& a, std::size_t pos, std::initializer_list<T> inserted) {
  std::vector<T> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), inserted);
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(pos), a.end());
  return out;
}

template <class T>
std::vector<T> slice(const std::vector<T>& a, std::size_t from, std::size_t to) {
  return std::vector<T>(a.begin() + static_cast<std::ptrdiff_t>(from),
                        a.begin() + static_cast<std::ptrdiff_t>(to));
}

std::string describe(const std::vector<OVElement>& lower, const std::vector<MatrixB>& upper) {
  std::ostringstream os;
  os << "lower(";
  for (std::size_t k = 0; k < lower.size(); ++k) os << (k ? "; " : "") << lower[k].str();
  os << ") upper(";
  for (std::size_t k = 0; k < upper.size(); ++k) os << (k ? "; " : "") << upper[k];
  os << ")";
  return os.str();
}

std::string show(const MatrixB& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace

Report verify_ov_vanishing(const OVJointState& s, std::size_t n, std::size_t m, Rng& rng,
                           std::size_t samples) {
  Report report;
  const std::size_t d = s.dim();
  const std::size_t length = n + m + 2;
  const MultilinearMap shape(length - 1, d);
  for (std::size_t t = 0; t < samples; ++t) {
    auto lower = splice(random_ov_entries(rng, n + m, d), n, {OVElement::x(d), OVElement::y(d)});
    for (std::size_t flat = 0; flat < shape.table_size(); ++flat) {
      const auto upper = shape.basis_arguments(flat);
      const MatrixB value = ov_mixed_cumulant(s, lower, upper);
      report.record(value.is_zero(), "ov-vanishing-adjacent-xy",
                    describe(lower, upper) + " = " + show(value));
    }
  }
  return report;
}

Report verify_ov_matrix_entries(const OVJointState& s, std::size_t n, Rng& rng,
                                std::size_t samples) {
  if (n == 0) throw OutOfRange("matrix-entry rules need n >= 1");
  Report report;
  const std::size_t d = s.dim();
  for (std::size_t t = 0; t < samples; ++t) {
    const auto a = random_ov_entries(rng, n, d);
    const MatrixB f = random_matrix(rng, d);
    const auto fe = OVElement::matrix(f);
    const auto upper = random_matrices(rng, n, d);

    const auto first = splice(a, 0, {fe});
    const MatrixB v_first = ov_mixed_cumulant(s, first, upper);
    report.record(v_first.is_zero(), "ov-matrix-first-vanishes",
                  describe(first, upper) + " = " + show(v_first));

    const auto last = splice(a, n, {fe});
    const MatrixB v_last = ov_mixed_cumulant(s, last, upper);
    report.record(v_last.is_zero(), "ov-matrix-last-vanishes",
                  describe(last, upper) + " = " + show(v_last));

    for (std::size_t k = 1; k < n; ++k) {
      const auto lower = splice(a, k, {fe});
      std::vector<MatrixB> merged = slice(upper, 0, k - 1);
      merged.push_back(upper[k - 1] * f * upper[k]);
      const auto rest = slice(upper, k + 1, n);
      merged.insert(merged.end(), rest.begin(), rest.end());
      const MatrixB lhs = ov_mixed_cumulant(s, lower, upper);
      const MatrixB rhs = ov_mixed_cumulant(s, a, merged);
      report.record(lhs == rhs, "ov-matrix-interior-merges",
                    describe(lower, upper) + " = " + show(lhs) + " vs " + show(rhs));
    }
  }
  return report;
}

Report verify_ov_product_rules(const OVJointState& s, std::size_t n, Rng& rng,
                               std::size_t samples) {
  Report report;
  const std::size_t d = s.dim();
  const OVElement X = OVElement::x(d);
  const OVElement Y = OVElement::y(d);
  for (std::size_t t = 0; t < samples; ++t) {
    const auto a = random_ov_entries(rng, n, d);
    const auto upper = random_matrices(rng, n, d);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto lower = splice(a, k, {X * Y});
      auto left = slice(a, 0, k);
      left.push_back(X);
      std::vector<OVElement> right{Y};
      const auto rest = slice(a, k, n);
      right.insert(right.end(), rest.begin(), rest.end());
      const MatrixB lhs = ov_mixed_cumulant(s, lower, upper);
      const MatrixB rhs = ov_mixed_cumulant(s, left, slice(upper, 0, k)) *
                          ov_mixed_cumulant(s, right, slice(upper, k, n));
      report.record(lhs == rhs, "ov-product-entry-factorizes",
                    describe(lower, upper) + " = " + show(lhs) + " vs " + show(rhs));
    }
  }
  return report;
}

Report verify_unit_upper_arguments(const OVJointState& s, std::size_t n, Rng& rng,
                                   std::size_t samples) {
  if (n == 0) throw OutOfRange("need n >= 1");
  Report report;
  const std::size_t d = s.dim();
  const std::vector<MatrixB> units(n - 1, MatrixB::identity(d));
  for (std::size_t t = 0; t < samples; ++t) {
    const auto lower = random_ov_entries(rng, n, d);
    const MatrixB lhs = ov_mixed_cumulant(s, lower, units);
    const MatrixB rhs = functional_cumulant(s, lower);
    report.record(lhs == rhs, "unit-upper-arguments",
                  describe(lower, units) + " = " + show(lhs) + " vs " + show(rhs));
  }
  // Same statement through the cumulant table of X.
  if (n <= s.order()) {
    const MulSeries bx = ov_moments_to_cumulants(s.x().truncated(n));
    const std::vector<OVElement> xs(n, OVElement::x(d));
    const MatrixB lhs = bx.component(n - 1).evaluate(units);
    const MatrixB rhs = functional_cumulant(s, xs);
    report.record(lhs == rhs, "unit-upper-arguments",
                  "table of X at identities: " + show(lhs) + " vs " + show(rhs));
  }
  return report;
}

Report verify_bimodule_transfer(const OVJointState& s, std::size_t n, Rng& rng,
                                std::size_t samples) {
  if (n == 0 || n > s.order()) throw OutOfRange("need 1 <= n <= order");
  Report report;
  const std::size_t d = s.dim();
  const MulSeries bx = ov_moments_to_cumulants(s.x().truncated(n));
  const OVElement X = OVElement::x(d);
  for (std::size_t t = 0; t < samples; ++t) {
    // f_0..f_{n-1}, h_1..h_n
    std::vector<MatrixB> f, h;
    for (std::size_t k = 0; k < n; ++k) f.push_back(random_unit(rng, d));
    for (std::size_t k = 0; k < n; ++k) h.push_back(random_unit(rng, d));
    std::vector<MatrixB> args;
    for (std::size_t k = 1; k < n; ++k) args.push_back(h[k - 1] * f[k]);
    const MatrixB lhs = f[0] * bx.component(n - 1).evaluate(args) * h[n - 1];

    std::vector<OVElement> entries;
    for (std::size_t k = 0; k < n; ++k) {
      entries.push_back(OVElement::matrix(f[k]) * X * OVElement::matrix(h[k]));
    }
    const MatrixB rhs = functional_cumulant(s, entries);
    std::ostringstream witness;
    witness << "f = (";
    for (std::size_t k = 0; k < n; ++k) witness << (k ? "; " : "") << f[k];
    witness << ") h = (";
    for (std::size_t k = 0; k < n; ++k) witness << (k ? "; " : "") << h[k];
    witness << ") lhs " << lhs << " rhs " << rhs;
    report.record(lhs == rhs, "bimodule-transfer", witness.str());
  }
  return report;
}

}  // namespace boolcum
