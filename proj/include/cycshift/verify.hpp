#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cycshift/coxeter.hpp"

namespace cycshift {

struct SuiteReport {
  std::string suite;
  std::string type;
  std::size_t cases = 0;
  std::vector<std::string> failures;  ///< in case order
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one exhaustive property suite over every subset J and every diagram
/// automorphism of g. Cases run in parallel; failures are reported in case
/// order regardless of scheduling. Throws CoxeterError for an unknown name.
SuiteReport run_suite(const CoxeterGroup& g, std::string_view suite);
/// Serial reference for run_suite.
SuiteReport run_suite_serial(const CoxeterGroup& g, std::string_view suite);

}  // namespace cycshift
