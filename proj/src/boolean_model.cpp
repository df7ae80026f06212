#include "boolcum/boolean_model.hpp"

#include <algorithm>

#include "boolcum/errors.hpp"

namespace boolcum {

AlgElement AlgElement::word(std::string_view w, const Scalar& coeff) {
  for (char c : w) {
    if (c != 'X' && c != 'Y') throw ParseError("word letters must be X or Y: '" + std::string(w) + "'");
  }
  AlgElement a;
  a.add_term(Word(w), coeff);
  return a;
}

void AlgElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t AlgElement::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

AlgElement& AlgElement::operator+=(const AlgElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

AlgElement& AlgElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  AlgElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  }
  return out;
}

std::string AlgElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string label = w.empty() ? "1" : w;
    if (c == Scalar(1)) {
      out += label;
    } else {
      out += c.str() + (w.empty() ? "" : "*" + w);
    }
  }
  return out;
}

AlgElement power(const AlgElement& a, std::size_t n) {
  AlgElement out = AlgElement::unit();
  for (std::size_t k = 0; k < n; ++k) out = out * a;
  return out;
}

JointState::JointState(MomentSeq x, MomentSeq y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.order() != y_.order()) {
    throw OrderMismatch("joint state marginals must share an order");
  }
}

JointState random_joint_state(Rng& rng, std::size_t order) {
  auto x = random_moments(rng, order);
  auto y = random_moments(rng, order);
  return JointState(std::move(x), std::move(y));
}

Scalar phi_word(const JointState& s, std::string_view w) {
  if (w.empty()) throw OutOfRange("phi_word needs a nonempty word");
  Scalar out(1);
  std::size_t start = 0;
  while (start < w.size()) {
    std::size_t end = start;
    while (end < w.size() && w[end] == w[start]) ++end;
    const std::size_t run = end - start;
    if (w[start] != 'X' && w[start] != 'Y') throw ParseError("word letters must be X or Y");
    const MomentSeq& marginal = w[start] == 'X' ? s.x() : s.y();
    if (run > marginal.order()) {
      throw OutOfRange("run of length " + std::to_string(run) + " exceeds moment order " +
                       std::to_string(marginal.order()));
    }
    out *= marginal.at(run);
    start = end;
  }
  return out;
}

Scalar phi_elem(const JointState& s, const AlgElement& a) {
  Scalar out;
  for (const auto& [w, c] : a.terms()) out += w.empty() ? c : c * phi_word(s, w);
  return out;
}

std::vector<Scalar> mixed_cumulant_prefixes(const JointState& s,
                                            std::span<const AlgElement> entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw OutOfRange("boolean cumulants need at least one entry");
  // seg[i][k] = phi(a_i ... a_{k-1}), 0 <= i < k <= n.
  std::vector<std::vector<Scalar>> seg(n, std::vector<Scalar>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    AlgElement product = entries[i];
    seg[i][i + 1] = phi_elem(s, product);
    for (std::size_t k = i + 2; k <= n; ++k) {
      product = product * entries[k - 1];
      seg[i][k] = phi_elem(s, product);
    }
  }
  std::vector<Scalar> b(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc = seg[0][k];
    for (std::size_t j = 1; j < k; ++j) acc -= b[j - 1] * seg[j][k];
    b[k - 1] = std::move(acc);
  }
  return b;
}

Scalar mixed_cumulant(const JointState& s, std::span<const AlgElement> entries) {
  return mixed_cumulant_prefixes(s, entries).back();
}

std::vector<AlgElement> structured_pool() {
  return {AlgElement::x(),
          AlgElement::y(),
          AlgElement::word("XY"),
          AlgElement::word("YX"),
          AlgElement::x() + AlgElement::y(),
          AlgElement::word("XX"),
          AlgElement::unit()};
}

AlgElement random_entry(Rng& rng, bool allow_unit) {
  static const std::vector<AlgElement> pool = structured_pool();
  const std::size_t last = allow_unit ? pool.size() - 1 : pool.size() - 2;
  auto pick = [&] { return pool[random_index(rng, 0, last)]; };
  if (random_index(rng, 0, 3) != 0) return pick();
  return random_scalar(rng) * pick() + random_scalar(rng) * pick();
}

std::string describe_entries(std::span<const AlgElement> entries) {
  std::string out = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out += (k ? ", " : "") + entries[k].str();
  }
  return out + ")";
}

namespace {

std::vector<AlgElement> random_entries(Rng& rng, std::size_t count, bool allow_unit) {
  std::vector<AlgElement> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_entry(rng, allow_unit));
  return out;
}

std::vector<AlgElement> splice(const std::vector<AlgElement>& a, std::size_t pos,
                               std::initializer_list<AlgElement> inserted) {
  std::vector<AlgElement> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), inserted);
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(pos), a.end());
  return out;
}

}  // namespace

Report verify_vanishing(const JointState& s, std::size_t n, std::size_t m, Rng& rng,
                        std::size_t samples) {
  Report report;
  for (std::size_t t = 0; t < samples; ++t) {
    auto around = random_entries(rng, n + m, false);
    auto entries = splice(around, n, {AlgElement::x(), AlgElement::y()});
    const Scalar value = mixed_cumulant(s, entries);
    report.record(value.is_zero(), "vanishing-adjacent-xy",
                  "b" + describe_entries(entries) + " = " + value.str());
  }
  return report;
}

Report verify_unit_rules(const JointState& s, std::size_t n, Rng& rng, std::size_t samples) {
  if (n == 0) throw OutOfRange("unit rules need n >= 1");
  Report report;
  const AlgElement one = AlgElement::unit();
  for (std::size_t t = 0; t < samples; ++t) {
    const auto a = random_entries(rng, n, true);
    const Scalar reference = mixed_cumulant(s, a);

    auto leading = splice(a, 0, {one});
    const Scalar lead = mixed_cumulant(s, leading);
    report.record(lead.is_zero(), "unit-first-vanishes",
                  "b" + describe_entries(leading) + " = " + lead.str());

    auto trailing = splice(a, n, {one});
    const Scalar trail = mixed_cumulant(s, trailing);
    report.record(trail.is_zero(), "unit-last-vanishes",
                  "b" + describe_entries(trailing) + " = " + trail.str());

    for (std::size_t k = 1; k < n; ++k) {
      auto interior = splice(a, k, {one});
      const Scalar value = mixed_cumulant(s, interior);
      report.record(value == reference, "unit-interior-drops",
                    "b" + describe_entries(interior) + " = " + value.str() + " but b" +
                        describe_entries(a) + " = " + reference.str());
    }
  }
  return report;
}

Report verify_product_rules(const JointState& s, std::size_t n, Rng& rng, std::size_t samples) {
  Report report;
  const AlgElement X = AlgElement::x();
  const AlgElement Y = AlgElement::y();
  const AlgElement XY = AlgElement::word("XY");
  for (std::size_t t = 0; t < samples; ++t) {
    const auto a = random_entries(rng, n, false);
    for (std::size_t k = 0; k <= n; ++k) {
      auto with_product = splice(a, k, {XY});
      std::vector<AlgElement> left(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
      left.push_back(X);
      std::vector<AlgElement> right{Y};
      right.insert(right.end(), a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
      const Scalar lhs = mixed_cumulant(s, with_product);
      const Scalar rhs = mixed_cumulant(s, left) * mixed_cumulant(s, right);
      report.record(lhs == rhs, "product-entry-factorizes",
                    "b" + describe_entries(with_product) + " = " + lhs.str() + " vs " + rhs.str());

      const std::pair<AlgElement, AlgElement> pairs[] = {{XY, XY}, {Y, XY}, {XY, X}};
      for (const auto& [p, q] : pairs) {
        auto entries = splice(a, k, {p, q});
        const Scalar value = mixed_cumulant(s, entries);
        report.record(value.is_zero(), "product-entry-vanishes",
                      "b" + describe_entries(entries) + " = " + value.str());
      }
    }
  }
  return report;
}

}  // namespace boolcum
