#ifndef PCW_VERIFY_HPP
#define PCW_VERIFY_HPP

// Acceptance suites: worked examples and exhaustive or seeded property sweeps
// that cross-check the modules against each other.

#include <cstdint>
#include <string>
#include <vector>

namespace pcw {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
};

// "golden", "thm47", ..., "structural", plus "all".
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
std::vector<CriterionResult> run_suite(const std::string& name,
                                       const VerifyOptions& options = {});

CriterionResult run_criterion(int id, const VerifyOptions& options = {});

}  // namespace pcw

#endif  // PCW_VERIFY_HPP
