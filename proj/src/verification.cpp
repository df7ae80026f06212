#include "boolcum/verification.hpp"

#include <algorithm>

#include "boolcum/boolean_model.hpp"
#include "boolcum/errors.hpp"
#include "boolcum/operator_valued.hpp"
#include "boolcum/random.hpp"
#include "boolcum/scalar_boolean.hpp"

namespace boolcum {

namespace {

constexpr std::size_t kSweepLength = 6;
constexpr std::size_t kSweepSamples = 3;
constexpr std::size_t kOvSweepSamples = 2;

// Seeds each case independently so adding a case does not perturb others.
Rng case_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  return Rng(seq);
}

MomentSeq moments_of(const JointState& s, const std::vector<AlgElement>& powers) {
  std::vector<Scalar> m;
  m.reserve(powers.size());
  for (const auto& p : powers) m.push_back(phi_elem(s, p));
  return MomentSeq(std::move(m));
}

std::vector<AlgElement> powers_of(const AlgElement& a, std::size_t order) {
  std::vector<AlgElement> out;
  AlgElement p = AlgElement::unit();
  for (std::size_t n = 1; n <= order; ++n) {
    p = p * a;
    out.push_back(p);
  }
  return out;
}

std::string seq_str(const std::vector<Scalar>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + ")";
}

void sort_results(std::vector<CaseResult>& results) {
  std::sort(results.begin(), results.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
}

}  // namespace

std::vector<CaseResult> run_scalar_suite(const SuiteOptions& o) {
  if (o.order == 0) throw OutOfRange("order must be at least 1");
  const std::size_t N = o.order;
  std::vector<CaseResult> results;

  {
    Report r;
    Rng rng = case_rng(o.seed, 1);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto m = random_moments(rng, N);
      const auto back = cumulants_to_moments(moments_to_cumulants(m));
      r.record(back == m, "roundtrip", "m = " + seq_str(m.values()));
    }
    results.push_back({"roundtrip", std::move(r)});
  }
  {
    Report r;
    Rng rng = case_rng(o.seed, 2);
    const std::size_t top = std::min<std::size_t>(N, 12);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto b = CumulantSeq(random_moments(rng, top).values());
      const auto m = cumulants_to_moments(b);
      for (std::size_t n = 1; n <= top; ++n) {
        r.record(m.at(n) == moments_via_compositions(b, n), "composition-oracle",
                 "b = " + seq_str(b.values()) + ", n = " + std::to_string(n));
      }
    }
    results.push_back({"composition-oracle", std::move(r)});
  }

  const std::size_t length = std::min(kSweepLength, std::max<std::size_t>(N, 2));
  {
    Report r;
    Rng rng = case_rng(o.seed, 3);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto s = random_joint_state(rng, 2 * length);
      for (std::size_t total = 2; total <= length; ++total) {
        for (std::size_t n = 0; n + 2 <= total; ++n) {
          r.merge(verify_vanishing(s, n, total - 2 - n, rng, kSweepSamples));
        }
      }
    }
    results.push_back({"vanishing-adjacent-xy", std::move(r)});
  }
  {
    Report r;
    Rng rng = case_rng(o.seed, 4);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto s = random_joint_state(rng, 2 * length);
      for (std::size_t n = 1; n < length; ++n) r.merge(verify_unit_rules(s, n, rng, kSweepSamples));
    }
    results.push_back({"unit-entries", std::move(r)});
  }
  {
    Report r;
    Rng rng = case_rng(o.seed, 5);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto s = random_joint_state(rng, 2 * length);
      for (std::size_t n = 0; n + 2 <= length; ++n) {
        r.merge(verify_product_rules(s, n, rng, kSweepSamples));
      }
    }
    results.push_back({"product-entries", std::move(r)});
  }

  const AlgElement X = AlgElement::x();
  const AlgElement Y = AlgElement::y();
  const AlgElement one = AlgElement::unit();
  const auto sum_powers = powers_of(X + Y, N);
  const auto z_powers = powers_of(X + Y + X * Y, N);
  const auto shifted_x_powers = powers_of(one + X, N);
  const auto shifted_product_powers = powers_of((one + X) * (one + Y), N);

  Report additivity, shift, product, multiplicative;
  Rng rng = case_rng(o.seed, 6);
  for (std::size_t t = 0; t < o.cases; ++t) {
    const auto s = random_joint_state(rng, N);
    const std::string witness = "mX = " + seq_str(s.x().values()) + ", mY = " + seq_str(s.y().values());
    const auto bX = moments_to_cumulants(s.x());
    const auto bY = moments_to_cumulants(s.y());

    additivity.record(bconv_add(s.x(), s.y()) == moments_of(s, sum_powers), "additivity", witness);

    shift.record(shift_one(bX) == moments_to_cumulants(moments_of(s, shifted_x_powers)),
                 "shift-by-one", witness);
    shift.record(shift_moments(s.x()) == moments_of(s, shifted_x_powers), "shift-by-one", witness);

    const auto formula = product_cumulants(bX, bY);
    product.record(formula == moments_to_cumulants(moments_of(s, z_powers)), "product-cumulants",
                   witness);
    product.record(bconv_mul(s.x(), s.y()) == moments_of(s, z_powers), "product-cumulants",
                   witness);

    const auto check = check_multiplicative(s.x(), s.y());
    multiplicative.record(check.holds, "multiplicative",
                          witness + (check.first_mismatch
                                         ? ", first mismatch at z^" + std::to_string(*check.first_mismatch)
                                         : std::string()));
    const auto oracle = as_series(moments_to_cumulants(moments_of(s, shifted_product_powers)));
    const auto formula_path = as_series(shift_one(formula));
    multiplicative.record(oracle == formula_path && oracle == check.rhs, "multiplicative",
                          witness + " (joint-model path)");
  }
  results.push_back({"additivity", std::move(additivity)});
  results.push_back({"shift-by-one", std::move(shift)});
  results.push_back({"product-cumulants", std::move(product)});
  results.push_back({"multiplicative", std::move(multiplicative)});

  {
    Report r;
    for (long n = 0; n <= 20; ++n) {
      for (long a = 0; a <= n; ++a) {
        for (long b = 0; a + b <= n; ++b) {
          r.record(binomial_identity_check(n, a, b), "binomial-identity",
                   "n = " + std::to_string(n) + ", a = " + std::to_string(a) +
                       ", b = " + std::to_string(b));
        }
      }
    }
    results.push_back({"binomial-identity", std::move(r)});
  }

  sort_results(results);
  return results;
}

std::vector<CaseResult> run_ov_suite(const SuiteOptions& o) {
  if (o.order == 0 || o.dim == 0) throw OutOfRange("order and dim must be positive");
  const std::size_t N = o.order;
  const std::size_t d = o.dim;
  std::vector<CaseResult> results;

  Report roundtrip, additivity, multiplicative, shift;
  {
    Rng rng = case_rng(o.seed, 101);
    const OVElement X = OVElement::x(d);
    const OVElement Y = OVElement::y(d);
    const OVElement one = OVElement::unit(d);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto s = random_ov_joint_state(rng, N, d);
      const std::string witness = "state " + std::to_string(t);
      const MulSeries bx = ov_moments_to_cumulants(s.x());
      const MulSeries by = ov_moments_to_cumulants(s.y());

      roundtrip.record(satisfies_moment_cumulant_relation(s.x().as_series(), bx),
                       "ov-moment-cumulant-relation", witness);
      roundtrip.record(ov_cumulants_to_moments(bx) == s.x(), "ov-roundtrip", witness);

      additivity.record(ov_bconv_add(s) == ov_moments_to_cumulants(ov_moments_of(s, X + Y, N)),
                        "ov-additivity", witness);

      const MulSeries lhs = ov_shift_one(ov_bconv_mul(s));
      multiplicative.record(lhs == ov_shift_one(bx) * ov_shift_one(by), "ov-multiplicative",
                            witness);

      shift.record(ov_shift_one(bx) == ov_moments_to_cumulants(ov_moments_of(s, one + X, N)),
                   "ov-shift-by-one", witness);
    }
  }
  results.push_back({"ov-additivity", std::move(additivity)});
  results.push_back({"ov-multiplicative", std::move(multiplicative)});
  results.push_back({"ov-roundtrip", std::move(roundtrip)});
  results.push_back({"ov-shift-by-one", std::move(shift)});

  const std::size_t length = std::max<std::size_t>(std::min<std::size_t>(N, 4), 2);
  Report vanishing, matrices, products, units, transfer;
  {
    Rng rng = case_rng(o.seed, 102);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto s = random_ov_joint_state(rng, 2 * length, d);
      for (std::size_t total = 2; total <= length; ++total) {
        for (std::size_t n = 0; n + 2 <= total; ++n) {
          vanishing.merge(verify_ov_vanishing(s, n, total - 2 - n, rng, 1));
        }
      }
      for (std::size_t n = 1; n < length; ++n) {
        matrices.merge(verify_ov_matrix_entries(s, n, rng, kOvSweepSamples));
      }
      for (std::size_t n = 0; n < length; ++n) {
        products.merge(verify_ov_product_rules(s, n, rng, kOvSweepSamples));
      }
      for (std::size_t n = 1; n <= length; ++n) {
        units.merge(verify_unit_upper_arguments(s, n, rng, kOvSweepSamples));
        transfer.merge(verify_bimodule_transfer(s, n, rng, kOvSweepSamples));
      }
    }
  }
  results.push_back({"ov-vanishing-adjacent-xy", std::move(vanishing)});
  results.push_back({"ov-matrix-entries", std::move(matrices)});
  results.push_back({"ov-product-entries", std::move(products)});
  results.push_back({"unit-upper-arguments", std::move(units)});
  results.push_back({"bimodule-transfer", std::move(transfer)});

  {
    Report r;
    Rng rng = case_rng(o.seed, 103);
    for (std::size_t t = 0; t < o.cases; ++t) {
      const auto s = random_joint_state(rng, N);
      const auto ov = ov_from_scalar(s);
      const std::string witness = "state " + std::to_string(t);
      const auto bX = moments_to_cumulants(s.x());
      const auto bY = moments_to_cumulants(s.y());
      const MulSeries bx = ov_moments_to_cumulants(ov.x());
      r.record(scalar_coefficients(bx) == bX.values(), "dimension-one-collapse", witness);
      r.record(ov_cumulants_to_moments(bx) == ov.x(), "dimension-one-collapse", witness);
      r.record(scalar_coefficients(ov_shift_one(bx)) == shift_one(bX).values(),
               "dimension-one-collapse", witness);
      r.record(scalar_coefficients(ov_bconv_add(ov)) ==
                   moments_to_cumulants(bconv_add(s.x(), s.y())).values(),
               "dimension-one-collapse", witness);
      r.record(scalar_coefficients(ov_bconv_mul(ov)) == product_cumulants(bX, bY).values(),
               "dimension-one-collapse", witness);
    }
    results.push_back({"dimension-one-collapse", std::move(r)});
  }

  sort_results(results);
  return results;
}

bool all_passed(const std::vector<CaseResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CaseResult& c) { return c.report.ok(); });
}

nlohmann::json suite_report(const std::string& suite, const SuiteOptions& o,
                            const std::vector<CaseResult>& results, std::size_t max_witnesses) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : results) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (std::size_t k = 0; k < c.report.violations.size() && k < max_witnesses; ++k) {
      witnesses.push_back({{"rule", c.report.violations[k].rule},
                           {"witness", c.report.violations[k].witness}});
    }
    cases.push_back({{"id", c.id},
                     {"checks", c.report.checks},
                     {"failures", c.report.violations.size()},
                     {"passed", c.report.ok()},
                     {"witnesses", std::move(witnesses)}});
  }
  nlohmann::json out = {{"suite", suite},
                        {"seed", o.seed},
                        {"order", o.order},
                        {"cases", o.cases},
                        {"passed", all_passed(results)},
                        {"results", std::move(cases)}};
  if (suite == "ov") out["dim"] = o.dim;
  return out;
}

}  // namespace boolcum
