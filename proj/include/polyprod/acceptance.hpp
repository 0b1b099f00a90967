#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyprod {

// One acceptance criterion run: exact checks plus the stated runtime budget.
struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget = 0.0;
};

// Criteria are numbered 1..10; seed 0 and count 0 select the pinned defaults.
CriterionResult run_criterion(int number, std::uint64_t seed = 0, int count = 0);
std::vector<CriterionResult> run_acceptance(const std::vector<int>& numbers = {},
                                            std::uint64_t seed = 0, int count = 0);

int criterion_from_name(const std::string& name);  // suite name -> number
std::vector<std::string> criterion_names();

}  // namespace polyprod
