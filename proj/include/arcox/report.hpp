#ifndef ARCOX_REPORT_HPP
#define ARCOX_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arcox/oracles.hpp"

namespace arcox {

// Knobs for the verification battery. Everything that influences a report
// is in here, so a report plus its options reproduces exactly.
struct VerifyOptions {
  int samples = 50;        // injectivity sample count
  int max_syllables = 4;   // stable-letter syllables per sampled word
  std::uint64_t seed = 7;
  ReductionBudget budget;
  int max_cosets = 50000;

  bool operator==(const VerifyOptions&) const = default;
};

enum class CheckStatus { pass, fail, inconclusive };

const char* check_status_name(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double elapsed_ms = 0.0;
};

// A certificate may only be issued when ok(): `inconclusive` is surfaced
// but never blocks, `fail` always does.
struct VerificationReport {
  std::vector<CheckResult> checks;
  VerifyOptions options;

  bool ok() const;
  int count(CheckStatus status) const;
};

}  // namespace arcox

#endif
