#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gegenmetric {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs the eight end-to-end acceptance checks. When `log` is given, prints
// one "[PASS]"/"[FAIL]" line per criterion as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

}  // namespace gegenmetric
