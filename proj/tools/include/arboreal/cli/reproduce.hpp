#pragma once

// Named reproduction suites. Each suite evaluates a fixed set of numbered
// criteria and reports every sub-check with the observed and expected value.

#include <string>
#include <vector>

namespace arboreal::cli {

struct Check {
  std::string name;
  bool pass = false;
  std::string observed;
  std::string expected;
};

struct CriterionResult {
  int id = 0;
  std::string suite;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const;
};

struct ReproduceOptions {
  int threads = 1;
  int digits = 80;
};

const std::vector<std::string>& suite_names();  // excluding "all"

// Throws DomainError for an unknown suite. "all" runs every criterion once.
std::vector<CriterionResult> run_suite(const std::string& name, const ReproduceOptions& opts);

// Criterion ids belonging to a suite.
std::vector<int> suite_criteria(const std::string& name);

CriterionResult run_criterion(int id, const ReproduceOptions& opts);

}  // namespace arboreal::cli
