#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "boolcum/report.hpp"

namespace boolcum {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t order = 8;
  std::size_t dim = 2;
  /// Random states (or sequence pairs) per randomized case.
  std::size_t cases = 20;
};

struct CaseResult {
  std::string id;
  Report report;
};

/// Scalar identities: moment/cumulant round trip, composition expansion,
/// adjacent-XY vanishing, unit and product entries, additivity, shift by one,
/// product cumulants, multiplicativity of the shifted B-transform and the
/// binomial identity. Results are sorted by id.
std::vector<CaseResult> run_scalar_suite(const SuiteOptions& options);

/// Operator-valued identities over d x d matrices. Results are sorted by id.
std::vector<CaseResult> run_ov_suite(const SuiteOptions& options);

/// Machine-readable report; at most `max_witnesses` violations per case.
nlohmann::json suite_report(const std::string& suite, const SuiteOptions& options,
                            const std::vector<CaseResult>& results,
                            std::size_t max_witnesses = 5);

bool all_passed(const std::vector<CaseResult>& results);

}  // namespace boolcum
