#include "gegenmetric/acceptance.hpp"

#include <iostream>

int main() {
  const auto results = gegenmetric::run_acceptance(&std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (failed == 0 ? "all " : "") << results.size() - failed << "/" << results.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
