#include "simpmon/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace simpmon {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return &c;
  return nullptr;
}

namespace {

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

}  // namespace

void write_text(std::ostream& os, const VerificationReport& r, bool timings) {
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << '[' << to_string(c.status) << "] " << c.name;
    if (timings) os << std::string(width - c.name.size() + 2, ' ') << seconds_text(c.seconds);
    os << '\n';
    for (const auto& [k, v] : c.values) os << "    " << k << ": " << v << '\n';
    if (!c.witness.empty()) os << "    witness: " << c.witness << '\n';
  }
  const auto passed = std::count_if(r.checks.begin(), r.checks.end(),
                                    [](const auto& c) { return c.status == CheckStatus::pass; });
  const auto skipped = std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) {
    return c.status == CheckStatus::skipped;
  });
  os << (r.passed() ? "all checks passed" : "verification FAILED") << " (" << passed << " passed, "
     << r.checks.size() - passed - skipped << " failed, " << skipped << " skipped)\n";
}

void write_json(std::ostream& os, const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.values) values[k] = v;
    e["values"] = std::move(values);
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (timings) e["seconds"] = c.seconds;
    j["checks"].push_back(std::move(e));
  }
  os << j.dump(2) << '\n';
}

}  // namespace simpmon
