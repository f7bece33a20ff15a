#pragma once

#include <iosfwd>

#include "wreath/ehrhart.hpp"
#include "wreath/involution.hpp"

namespace wreath {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a summary count
  double seconds = 0.0;
};

// Runs the ten acceptance criteria; all arithmetic exact, every tolerance
// zero.  Progress lines go to `out` when given.
std::vector<CriterionResult> run_acceptance(std::ostream* out = nullptr);

// One pass/fail line per criterion; returns the number of failures.
int print_acceptance_report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace wreath
