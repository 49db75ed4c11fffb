#ifndef XYGAP_VERIFY_HPP
#define XYGAP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xygap/gamma.hpp"

namespace xygap::verify {

struct VerifyConfig {
  int max_N = 64;
  /// Run the numeric oracle on matrices with the off-diagonal sign flipped.
  bool flip_offdiag_sign = false;
  std::uint64_t seed = 0x5eed;
  exact::BitBudget budget;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

SuiteResult check_exact_vs_numeric(const VerifyConfig& config);
SuiteResult check_level_enumeration(const VerifyConfig& config);
SuiteResult check_delta_closed_form(const VerifyConfig& config);
SuiteResult check_series_bounds(const VerifyConfig& config);
SuiteResult check_dense_intervals(const VerifyConfig& config);
SuiteResult check_gauge_invariance(const VerifyConfig& config);
SuiteResult check_scaling_trichotomy(const VerifyConfig& config);

std::vector<SuiteResult> run_all(const VerifyConfig& config);

}  // namespace xygap::verify

#endif  // XYGAP_VERIFY_HPP
