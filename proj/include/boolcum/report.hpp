#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace boolcum {

/// A failed identity check together with the inputs that broke it.
struct Violation {
  std::string rule;
  std::string witness;
};

/// Outcome of a verification sweep.
struct Report {
  std::size_t checks = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void record(bool holds, std::string rule, std::string witness) {
    ++checks;
    if (!holds) violations.push_back({std::move(rule), std::move(witness)});
  }

  void merge(const Report& other) {
    checks += other.checks;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace boolcum
