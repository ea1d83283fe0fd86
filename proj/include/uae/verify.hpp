#pragma once
// Outcome of a closed-form-versus-rewriting sweep: how many cases ran, how
// many disagreed, and the lowest-index counterexample for diagnosis.
#include <cstddef>
#include <string>
#include <vector>

#include "uae/jsonio.hpp"

namespace uae {

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::string first_counterexample;  // empty when every case agreed
  bool ok() const { return mismatches == 0; }
};

// Assembles a report from per-case failure messages (empty string = pass),
// keeping the lowest-index message so parallel runs stay deterministic.
inline VerifyReport collect_report(std::string suite, const std::vector<std::string>& failures) {
  VerifyReport r;
  r.suite = std::move(suite);
  r.cases = failures.size();
  for (const auto& msg : failures) {
    if (msg.empty()) continue;
    if (r.mismatches == 0) r.first_counterexample = msg;
    ++r.mismatches;
  }
  return r;
}

inline OJson to_json(const VerifyReport& r) {
  OJson out;
  out["suite"] = r.suite;
  out["cases"] = r.cases;
  out["mismatches"] = r.mismatches;
  if (!r.first_counterexample.empty()) out["first_counterexample"] = r.first_counterexample;
  out["ok"] = r.ok();
  return out;
}

}  // namespace uae
