#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace simpmon {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::pair<std::string, std::string>> values;
  std::string witness;  // set on failure
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  // Every non-skipped check passed.
  bool passed() const;
  const CheckResult* first_failure() const;
};

// Output is byte-identical across runs unless timings are requested.
void write_text(std::ostream& os, const VerificationReport& r, bool timings = false);
void write_json(std::ostream& os, const VerificationReport& r, bool timings = false);

}  // namespace simpmon
