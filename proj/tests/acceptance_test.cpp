#include <iostream>

#include "wreath/selftest.hpp"

int main() {
  auto results = wreath::run_acceptance(nullptr);
  int failures = wreath::print_acceptance_report(results, std::cout);
  return failures == 0 ? 0 : 1;
}
