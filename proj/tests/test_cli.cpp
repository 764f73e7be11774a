#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cli_path() {
  const char* cli = std::getenv("VLAB_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "VLAB_CLI must point at the built binary");
  return cli;
}

RunResult run_shell(const std::string& command) {
  const std::string out_path = "/tmp/vlab_cli_out.txt";
  const std::string err_path = "/tmp/vlab_cli_err.txt";
  const int status = std::system((command + " >" + out_path + " 2>" + err_path).c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

RunResult run_cli(const std::string& args) { return run_shell(cli_path() + " " + args); }

} // namespace

TEST_CASE("sections command") {
  const RunResult ok = run_cli("sections --poly 1,2,3,4 --r 2 --json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"parts\"") != std::string::npos);
  CHECK(ok.out.find("\"3\"") != std::string::npos);

  const RunResult expr = run_cli("sections --poly '1 + 2*x + 3*x^2 + 4*x^3' --r 2 --json");
  CHECK(expr.exit_code == 0);
  CHECK(expr.out == ok.out);

  const RunResult constant = run_cli("sections --poly 1 --r 3");
  CHECK(constant.exit_code == 0);
  CHECK(constant.out.find("k=2: 0") != std::string::npos);

  const RunResult bad = run_cli("sections --poly 1/0 --r 3");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("parse error") != std::string::npos);

  const RunResult bad_r = run_cli("sections --poly 1,2 --r 0");
  CHECK(bad_r.exit_code == 2);
}

TEST_CASE("veronese command") {
  const RunResult k0 = run_cli("veronese --poly 1 --n 2 --r 2 --k 0 --oracle --json");
  CHECK(k0.exit_code == 0);
  CHECK(k0.out.find("\"numerator\": [\n    \"1\",\n    \"1\"\n  ]") != std::string::npos);
  CHECK(k0.out.find("\"oracle_checked\": true") != std::string::npos);

  const RunResult k1 = run_cli("veronese --poly 1 --n 2 --r 2 --k 1 --json");
  CHECK(k1.exit_code == 0);
  CHECK(k1.out.find("\"2\"") != std::string::npos);

  const RunResult bad = run_cli("veronese --poly 1 --n 2 --r 3 --k 5");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("interlace command") {
  CHECK(run_cli("interlace 1,1 1,1").exit_code == 0);
  const RunResult fail = run_cli("interlace 3,1 2,3,1");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("witness") != std::string::npos);
  CHECK(run_cli("interlace 0 1,1").exit_code == 0);
}

TEST_CASE("stats command") {
  const RunResult g12 = run_cli("stats --n 1 --r 2 --json");
  CHECK(g12.exit_code == 0);
  CHECK(g12.out.find("\"coeffs\": [\n    \"1\",\n    \"1\"\n  ]") != std::string::npos);

  const RunResult a2 = run_cli("stats --n 2 --r 1");
  CHECK(a2.exit_code == 0);
  CHECK(a2.out.find("1 + x") != std::string::npos);

  const RunResult q = run_cli("stats --n 1 --r 2 --ell 1 --color 1 --q");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("x*q") != std::string::npos);

  const RunResult capped = run_cli("stats --n 12 --r 3");
  CHECK(capped.exit_code == 2);
  CHECK(capped.err.find("resource limit") != std::string::npos);

  // the environment variable overrides the enumeration cap
  const RunResult tightened = run_shell("VERONESE_LAB_MAX_STATES=10 " + cli_path() + " stats --n 3 --r 2");
  CHECK(tightened.exit_code == 2);
  const RunResult within = run_shell("VERONESE_LAB_MAX_STATES=10 " + cli_path() + " stats --n 2 --r 2");
  CHECK(within.exit_code == 0);
}

TEST_CASE("verify command") {
  const RunResult ok = run_cli("verify --suite thm-c --nmax 3 --rmax 3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("[ ok ] thm-c") != std::string::npos);

  const RunResult pinned = run_cli("verify --suite refined-carlitz --n 1 --r 2 --M 5");
  CHECK(pinned.exit_code == 0);

  const RunResult unknown = run_cli("verify --suite no-such-suite");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("unknown suite") != std::string::npos);
}

TEST_CASE("json output is byte-identical across invocations") {
  const std::string args = "verify --suite euler --nmax 2 --json -";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"claim\": \"eq:A\"") != std::string::npos);

  const RunResult sec1 = run_cli("sections --poly 1,2,3/4 --r 2 --json");
  const RunResult sec2 = run_cli("sections --poly 1,2,3/4 --r 2 --json");
  CHECK(sec1.out == sec2.out);
  CHECK(sec1.out.find("\"3/4\"") != std::string::npos);
}
