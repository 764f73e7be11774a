#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlab/identities.hpp"

namespace vlab {

struct SuiteOptions {
  std::optional<int> n;
  std::optional<int> r;
  std::optional<int> ell;
  std::optional<int> color;
  std::optional<int> M;
  std::optional<int> nmax;
  std::optional<int> rmax;
  std::optional<int> count;
  std::uint64_t seed = 987654321;
  int degmax = 6;
  int coeffmax = 9;
};

struct SuiteOutcome {
  std::string suite;
  std::vector<VerificationReport> reports;
  bool ok = false; // every report matched its expected verdict
};

// Verdict a report must carry for the suite to count it as good: Fail for
// soundness probes, HypothesisNotMet for violation probes, Pass otherwise.
Verdict expected_verdict(const std::string& claim);

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

SuiteOutcome run_suite(const std::string& name, const SuiteOptions& options);
std::vector<SuiteOutcome> run_all_suites(const SuiteOptions& options);

} // namespace vlab
