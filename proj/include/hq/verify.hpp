#pragma once

// The acceptance suite: twelve criteria, each a list of exact checks with
// expected and actual values, run in dependency order.

#include <cstdint>
#include <string>
#include <vector>

#include "hq/serialize.hpp"

namespace hq {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CriterionResult {
  int number = 0;
  std::string key;    // short name used by --only
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  double limit_seconds = 0;
  // Criterion 11 times its short-vector enumeration against a separate budget.
  double enumeration_seconds = 0;
  double enumeration_limit_seconds = 0;
  bool within_time_limit() const;
  bool checks_pass() const;
  bool pass() const { return checks_pass() && within_time_limit(); }
};

struct VerifyConfig {
  std::vector<std::string> only;  // keys or numbers; empty runs everything
  std::uint64_t seed = 1234567;
};

struct RunReport {
  std::string subcommand = "verify-all";
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool pass() const;
  /// Wall times are left out unless requested, so that the default output
  /// is byte-for-byte reproducible.
  Json to_json(bool include_timings = false) const;
};

struct CriterionInfo {
  int number;
  std::string key;
  std::string title;
  double limit_seconds;
};
const std::vector<CriterionInfo>& criteria();

/// Throws std::invalid_argument for an unknown key in config.only.
RunReport verify_all(const VerifyConfig& config);
CriterionResult run_criterion(int number, std::uint64_t seed);

/// One line per criterion: "[PASS] 1 group: ... (0.12 s)".
std::string summary_line(const CriterionResult& r);

}  // namespace hq
