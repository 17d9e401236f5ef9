// Runs all twelve acceptance criteria and prints one line per criterion.

#include <cstdlib>
#include <iostream>

#include "hq/verify.hpp"

int main() {
  const hq::RunReport report = hq::verify_all(hq::VerifyConfig{});
  int failed = 0;
  for (const auto& c : report.criteria) {
    std::cout << hq::summary_line(c) << '\n';
    failed += !c.pass();
  }
  std::cout << (report.criteria.size() - failed) << " of " << report.criteria.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
