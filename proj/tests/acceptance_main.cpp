// Runs acceptance criteria 1-9 at their full sizes and prints one PASS/FAIL
// line per criterion. Exit status 0 iff all pass.

#include <iostream>

#include "polaritylab/acceptance.hpp"

int main() {
  using namespace polaritylab::acceptance;
  std::size_t failed = 0;
  run_all(Config{}, SolverSuite{}, [&](const Result& r) {
    std::cout << format(r) << std::endl;
    if (!r.passed()) ++failed;
  });
  std::cout << (failed == 0 ? "ALL PASS" : "SOME FAILED") << " (" << 9 - failed << "/9)" << std::endl;
  return failed == 0 ? 0 : 1;
}
