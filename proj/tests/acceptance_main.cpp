// Acceptance gate: one line per criterion, zero tolerance everywhere (all
// arithmetic is exact), wall-clock budgets enforced where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "vlab/suites.hpp"

namespace {

struct Criterion {
  std::string name;
  double budget_seconds; // <= 0: no stated budget
  std::function<bool(std::string&)> run;
};

bool outcome_ok(const vlab::SuiteOutcome& outcome, std::string& detail, size_t min_reports = 1) {
  if (outcome.reports.size() < min_reports) {
    detail = outcome.suite + ": only " + std::to_string(outcome.reports.size()) + " checks ran (need " +
             std::to_string(min_reports) + ")";
    return false;
  }
  if (!outcome.ok) {
    for (const auto& rep : outcome.reports) {
      if (rep.verdict == vlab::expected_verdict(rep.claim)) continue;
      detail = outcome.suite + ": " + rep.claim + " -> " + to_string(rep.verdict);
      if (!rep.detail.empty()) detail += " (" + rep.detail + ")";
      return false;
    }
    detail = outcome.suite + ": unexpected verdict";
    return false;
  }
  return true;
}

bool run_one(const std::string& suite, const vlab::SuiteOptions& options, std::string& detail,
             size_t min_reports = 1) {
  return outcome_ok(vlab::run_suite(suite, options), detail, min_reports);
}

} // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"oracle equivalence, 200 random polynomials, n <= 4, r <= 4", 10.0, [](std::string& d) {
                        vlab::SuiteOptions o;
                        o.count = 200;
                        o.nmax = 4;
                        o.rmax = 4;
                        o.degmax = 6;
                        o.coeffmax = 9;
                        return run_one("oracle", o, d, 200);
                      }});

  criteria.push_back({"kernel section sequences interlace for 1 <= n, r <= 5", 5.0, [](std::string& d) {
                        vlab::SuiteOptions o;
                        o.nmax = 5;
                        o.rmax = 5;
                        return run_one("lemma-a", o, d, 25);
                      }});

  criteria.push_back({"main theorem on 100 negative-rooted products, n <= 3, r <= 4", 30.0, [](std::string& d) {
                        vlab::SuiteOptions o;
                        o.count = 100;
                        o.nmax = 3;
                        o.rmax = 4;
                        return run_one("main-theorem", o, d, 100);
                      }});

  criteria.push_back({"four sufficiency criteria, 50 instances each plus violation probes", -1.0,
                      [](std::string& d) {
                        vlab::SuiteOptions o;
                        o.count = 50;
                        return run_one("cor-deg", o, d, 50) && run_one("cor-ineq", o, d, 50) &&
                               run_one("cor-log-concave", o, d, 50) && run_one("cor-real-rooted", o, d, 50);
                      }});

  criteria.push_back({"colored refinements interlace and are real-rooted, n <= 4, r <= 3", 60.0,
                      [](std::string& d) {
                        vlab::SuiteOptions o;
                        o.nmax = 4;
                        o.rmax = 3;
                        return run_one("refined-color", o, d, 12);
                      }});

  criteria.push_back({"section identities for colored descent polynomials, n <= 4, r <= 3", -1.0,
                      [](std::string& d) {
                        vlab::SuiteOptions o;
                        o.nmax = 4;
                        o.rmax = 3;
                        return run_one("thm-c", o, d, 12) && run_one("thm-lc", o, d, 12);
                      }});

  criteria.push_back({"q-series identities: power sums, q-analogs, refined and q = 1 forms", -1.0,
                      [](std::string& d) {
                        vlab::SuiteOptions euler;
                        euler.nmax = 6;
                        euler.M = 12;
                        vlab::SuiteOptions carlitz;
                        carlitz.nmax = 4;
                        carlitz.M = 8;
                        vlab::SuiteOptions colored;
                        colored.nmax = 3;
                        colored.rmax = 3;
                        colored.M = 6;
                        return run_one("euler", euler, d, 6) && run_one("carlitz", carlitz, d, 4) &&
                               run_one("chow-mansour", colored, d, 9) &&
                               run_one("refined-carlitz", colored, d, 9) && run_one("lc-key", colored, d, 9);
                      }});

  criteria.push_back({"soundness: 20+ single-coefficient mutations all flip to fail", -1.0, [](std::string& d) {
                        vlab::SuiteOptions o;
                        return run_one("soundness", o, d, 20);
                      }});

  criteria.push_back({"realroot unit corpora: 100 Sturm counts, 100 interlacing pairs vs oracle", -1.0,
                      [](std::string& d) {
                        vlab::SuiteOptions o;
                        o.count = 100;
                        return run_one("sturm", o, d, 100) && run_one("interlace", o, d, 100);
                      }});

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(criterion.budget_seconds) + "s budget";
    }
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0) std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
