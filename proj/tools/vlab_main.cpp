#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vlab/errors.hpp"
#include "vlab/json_io.hpp"
#include "vlab/polyspec.hpp"
#include "vlab/realroot.hpp"
#include "vlab/suites.hpp"
#include "vlab/veronese.hpp"

namespace {

using nlohmann::ordered_json;

// Exit contract: 0 success / all pass, 1 verification failure, 2 usage or
// parse error, 3 internal inconsistency.
enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kInternalError = 3 };

struct SectionsArgs {
  std::string poly;
  int r = 1;
  bool json = false;
};

struct VeroneseArgs {
  std::string poly;
  int n = 0;
  int r = 1;
  int k = 0;
  bool oracle = false;
  int order = -1; // -1: derive from the degree bound
  bool json = false;
};

struct InterlaceArgs {
  std::vector<std::string> polys;
  bool json = false;
};

struct StatsArgs {
  int n = 1;
  int r = 1;
  std::optional<int> ell;
  std::optional<int> color;
  bool q = false;
  bool json = false;
};

struct VerifyArgs {
  std::string suite;
  vlab::SuiteOptions options;
  std::string json_path; // empty: no JSON; "-": stdout
};

int run_sections(const SectionsArgs& args) {
  const vlab::Polynomial f = vlab::parse_polynomial(args.poly);
  const vlab::SectionDecomposition d = vlab::sections(f, args.r);
  if (args.json) {
    std::cout << vlab::json_of(d).dump(2) << "\n";
    return kOk;
  }
  std::cout << "sections of " << f.to_string() << " with r = " << args.r << ":\n";
  for (size_t k = 0; k < d.parts.size(); ++k)
    std::cout << "  k=" << k << ": " << d.parts[k].to_string() << "\n";
  return kOk;
}

int run_veronese(const VeroneseArgs& args) {
  const vlab::Polynomial h = vlab::parse_polynomial(args.poly);
  const vlab::VeroneseResult result = vlab::veronese(h, args.n, args.r, args.k);
  bool oracle_checked = false;
  if (args.oracle) {
    const int M = args.order >= 0 ? args.order
                                  : vlab::veronese_oracle_min_order(h, args.n, args.r, args.k) + 2;
    const vlab::Polynomial via_series = vlab::veronese_oracle(h, args.n, args.r, args.k, M);
    if (!(via_series == result.numerator))
      throw vlab::InternalInconsistencyError("direct computation and series oracle disagree");
    oracle_checked = true;
  }
  if (args.json) {
    ordered_json out = vlab::json_of(result);
    out["oracle_checked"] = oracle_checked;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "section k=" << args.k << " of (1+x+...+x^" << (args.r - 1) << ")^" << args.n << " * ("
            << h.to_string() << "):\n  " << result.numerator.to_string() << "\n";
  if (oracle_checked) std::cout << "  (series oracle agrees)\n";
  return kOk;
}

int run_interlace(const InterlaceArgs& args) {
  std::vector<vlab::Polynomial> seq;
  seq.reserve(args.polys.size());
  for (const auto& text : args.polys) seq.push_back(vlab::parse_polynomial(text));
  const vlab::InterlacingVerdict v = vlab::is_interlacing_sequence(seq);
  if (args.json) {
    std::cout << vlab::json_of(v).dump(2) << "\n";
  } else if (v.holds) {
    std::cout << "interlacing: yes\n";
  } else {
    std::cout << "interlacing: no\n  witness: " << v.witness << "\n";
  }
  return v.holds ? kOk : kVerificationFailure;
}

int run_stats(const StatsArgs& args) {
  if (args.q) {
    const vlab::QPolynomial g = vlab::colored_refined_q(args.n, args.r, args.ell, args.color);
    if (args.json) {
      ordered_json out;
      out["n"] = args.n;
      out["r"] = args.r;
      out["ell"] = args.ell ? ordered_json(*args.ell) : ordered_json(nullptr);
      out["color"] = args.color ? ordered_json(*args.color) : ordered_json(nullptr);
      out["terms"] = vlab::json_of(g);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << g.to_string() << "\n";
    }
    return kOk;
  }
  const vlab::Polynomial g = vlab::colored_refined(args.n, args.r, args.ell, args.color);
  if (args.json) {
    ordered_json out;
    out["n"] = args.n;
    out["r"] = args.r;
    out["ell"] = args.ell ? ordered_json(*args.ell) : ordered_json(nullptr);
    out["color"] = args.color ? ordered_json(*args.color) : ordered_json(nullptr);
    out["coeffs"] = vlab::json_of(g);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << g.to_string() << "\n";
  }
  return kOk;
}

int run_verify(const VerifyArgs& args) {
  std::vector<vlab::SuiteOutcome> outcomes;
  if (args.suite == "all") {
    outcomes = vlab::run_all_suites(args.options);
  } else if (vlab::is_suite_name(args.suite)) {
    outcomes.push_back(vlab::run_suite(args.suite, args.options));
  } else {
    std::cerr << "error: unknown suite '" << args.suite << "'; available:";
    for (const auto& name : vlab::suite_names()) std::cerr << " " << name;
    std::cerr << " all\n";
    return kUsageError;
  }

  bool all_ok = true;
  ordered_json stream = ordered_json::array();
  for (const auto& outcome : outcomes) {
    all_ok = all_ok && outcome.ok;
    int unexpected = 0;
    for (const auto& rep : outcome.reports) {
      stream.push_back(vlab::json_of(rep));
      if (rep.verdict != vlab::expected_verdict(rep.claim)) ++unexpected;
    }
    std::ostream& human = (args.json_path == "-") ? std::cerr : std::cout;
    human << (outcome.ok ? "[ ok ] " : "[FAIL] ") << outcome.suite << ": " << outcome.reports.size()
          << " checks, " << unexpected << " unexpected\n";
    if (unexpected > 0) {
      for (const auto& rep : outcome.reports) {
        if (rep.verdict == vlab::expected_verdict(rep.claim)) continue;
        human << "       " << rep.claim << " -> " << to_string(rep.verdict);
        if (!rep.detail.empty()) human << " (" << rep.detail << ")";
        human << "\n";
      }
    }
  }
  if (!args.json_path.empty()) {
    if (args.json_path == "-") {
      std::cout << stream.dump(2) << "\n";
    } else {
      std::ofstream out(args.json_path);
      if (!out) {
        std::cerr << "error: cannot write '" << args.json_path << "'\n";
        return kUsageError;
      }
      out << stream.dump(2) << "\n";
    }
  }
  return all_ok ? kOk : kVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Veronese sections, interlacing certificates, and colored descent statistics"};
  app.require_subcommand(1);

  SectionsArgs sections_args;
  auto* cmd_sections = app.add_subcommand("sections", "split a polynomial into its r-sections");
  cmd_sections->add_option("--poly", sections_args.poly, "coefficient list '1,2,3/4' or expression '1+2*x'")
      ->required();
  cmd_sections->add_option("--r", sections_args.r, "section modulus (>= 1)")->required();
  cmd_sections->add_flag("--json", sections_args.json, "emit JSON");

  VeroneseArgs veronese_args;
  auto* cmd_veronese = app.add_subcommand("veronese", "apply the section operator to a polynomial");
  cmd_veronese->add_option("--poly", veronese_args.poly, "input polynomial h")->required();
  cmd_veronese->add_option("--n", veronese_args.n, "kernel power (>= 0)")->required();
  cmd_veronese->add_option("--r", veronese_args.r, "section modulus (>= 1)")->required();
  cmd_veronese->add_option("--k", veronese_args.k, "section index in 0..r-1")->required();
  cmd_veronese->add_flag("--oracle", veronese_args.oracle, "cross-check against the series definition");
  cmd_veronese->add_option("--order", veronese_args.order, "truncation order for the oracle");
  cmd_veronese->add_flag("--json", veronese_args.json, "emit JSON");

  InterlaceArgs interlace_args;
  auto* cmd_interlace = app.add_subcommand("interlace", "certify that polynomials form an interlacing sequence");
  cmd_interlace->add_option("polys", interlace_args.polys, "two or more polynomials")->required();
  cmd_interlace->add_flag("--json", interlace_args.json, "emit JSON");

  StatsArgs stats_args;
  auto* cmd_stats = app.add_subcommand("stats", "descent generating polynomials of colored permutations");
  cmd_stats->add_option("--n", stats_args.n, "number of letters")->required();
  cmd_stats->add_option("--r", stats_args.r, "number of colors")->required();
  cmd_stats->add_option("--ell", stats_args.ell, "restrict to first letter ell");
  cmd_stats->add_option("--color", stats_args.color, "restrict to first color c");
  cmd_stats->add_flag("--q", stats_args.q, "joint distribution with the flag major index");
  cmd_stats->add_flag("--json", stats_args.json, "emit JSON");

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", verify_args.suite, "suite name, or 'all'")->required();
  cmd_verify->add_option("--nmax", verify_args.options.nmax, "grid bound for n");
  cmd_verify->add_option("--rmax", verify_args.options.rmax, "grid bound for r");
  cmd_verify->add_option("--n", verify_args.options.n, "pin n to a single value");
  cmd_verify->add_option("--r", verify_args.options.r, "pin r to a single value");
  cmd_verify->add_option("--ell", verify_args.options.ell, "pin the first-letter refinement");
  cmd_verify->add_option("--color", verify_args.options.color, "pin the first-color refinement");
  cmd_verify->add_option("--M", verify_args.options.M, "series truncation order");
  cmd_verify->add_option("--count", verify_args.options.count, "corpus size for randomized suites");
  cmd_verify->add_option("--seed", verify_args.options.seed, "seed for randomized suites");
  cmd_verify->add_option("--degmax", verify_args.options.degmax, "max degree for random polynomials");
  cmd_verify->add_option("--coeffmax", verify_args.options.coeffmax, "max coefficient for random polynomials");
  cmd_verify->add_option("--json", verify_args.json_path, "write the report stream as JSON ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (cmd_sections->parsed()) return run_sections(sections_args);
    if (cmd_veronese->parsed()) return run_veronese(veronese_args);
    if (cmd_interlace->parsed()) return run_interlace(interlace_args);
    if (cmd_stats->parsed()) return run_stats(stats_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
  } catch (const vlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const vlab::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kUsageError;
  } catch (const vlab::InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}
