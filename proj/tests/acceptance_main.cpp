// Acceptance gate: runs every verification criterion and prints one
// pass/fail line each. Exits nonzero if any criterion fails.

#include <iostream>

#include "afmm/acceptance.hpp"

int main(int argc, char** argv) {
  afmm::acceptance::SuiteOptions options;
  if (argc > 1) options.table1_csv = argv[1];
  const auto results = afmm::acceptance::run_suite(afmm::acceptance::Suite::All, options);
  return afmm::acceptance::print_results(results, std::cout) ? 0 : 1;
}
