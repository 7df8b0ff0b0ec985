// One line per acceptance criterion; exits non-zero if any fails.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "pcw/verify.hpp"

int main(int argc, char** argv) {
  pcw::VerifyOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    const pcw::CriterionResult r = pcw::run_criterion(id, options);
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ", "
              << std::fixed << std::setprecision(1) << r.seconds << "s): " << r.detail << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
