#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"

// End-to-end checks of the installed command line binary. The build passes
// the binary location through RECIPROCA_BIN_PATH.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  RunResult r;
  const std::string cmd = env_prefix + RECIPROCA_BIN_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: transform emits a structured pass record") {
  const RunResult r = run_cli("transform --group lorentz --v 0.6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"command\": \"transform\""));
  CHECK(contains(r.out, "\"status\": \"pass\""));
  CHECK(contains(r.out, "\"matrix\""));
  CHECK(contains(r.out, "\"symplectic\""));
}

TEST_CASE("cli: transform carries a frame through the boost") {
  const RunResult r = run_cli("transform --group su11 --v 0.3 --f 0.2 --r 0.1 --frame 1,0,0,0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"frame_out\""));
}

TEST_CASE("cli: domain errors exit 1 with an error record") {
  const RunResult r = run_cli("transform --group lorentz --v 2.0");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "\"status\": \"error\""));
  CHECK(contains(r.out, "SuperluminalRate"));

  const RunResult d = run_cli("add-rates --first 0,0,2 --second 0,0,2");
  CHECK(d.exit_code == 1);
  CHECK(contains(d.out, "DegenerateDenominator"));
}

TEST_CASE("cli: non finite numeric flags exit 2") {
  CHECK(run_cli("transform --group lorentz --v nan").exit_code == 2);
  CHECK(run_cli("transform --group lorentz --v inf").exit_code == 2);
  CHECK(run_cli("trajectory --dt nan").exit_code == 2);
}

TEST_CASE("cli: usage errors exit 2 and help exits 0") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("transform").exit_code == 2);  // missing required --group
  CHECK(run_cli("compose --group su11 --first 1,2 --second 0,0,0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("cli: composition on the rate boundary still succeeds") {
  const RunResult r = run_cli("compose --group su11 --first 1,1,1 --second 1,1,1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "matrix residual omitted"));
  CHECK(contains(r.out, "\"status\": \"pass\""));
}

TEST_CASE("cli: composition groups") {
  CHECK(run_cli("compose --group lorentz --first 0.5 --second 0.5").exit_code == 0);
  CHECK(run_cli("compose --group hamilton --first 1,2,3 --second 4,5,6").exit_code == 0);
  const RunResult u = run_cli("compose --group u11 --first 0.2,0.1,0.0,0.3 --second 0.1,0.2,0.1,0.4");
  CHECK(u.exit_code == 0);
  CHECK(contains(u.out, "\"w2\""));
}

TEST_CASE("cli: algebra tables and diff lines") {
  const RunResult r = run_cli("algebra --which quaplectic");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"[K,N]\": \"2 M\""));
  CHECK(contains(r.out, "\"tabulated_diff\""));
  CHECK(contains(r.out, "\"exact_integer\": true"));
  const RunResult t = run_cli("algebra --which su11 --format text");
  CHECK(t.exit_code == 0);
  CHECK(contains(t.out, "[K,N] = 2 M"));
  CHECK(contains(t.out, "tabulated comparison: identical"));
}

TEST_CASE("cli: casimir certification") {
  const RunResult r = run_cli("casimir");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"certified\": true"));
  CHECK(contains(r.out, "\"mu\": 1"));
}

TEST_CASE("cli: discrete table") {
  const RunResult r = run_cli("discrete --format text");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order: 16"));
  CHECK(contains(r.out, "FAILS E*R = Q"));
  const RunResult j = run_cli("discrete --extended");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"order\": 32"));
}

TEST_CASE("cli: trajectory defaults to csv with the standard header") {
  const RunResult r = run_cli("trajectory --hamiltonian oscillator --q0 1 --t-end 0.1 --dt 0.05");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("t,q,p,e,v,f,r\n", 0) == 0);
  const RunResult j = run_cli(
      "trajectory --hamiltonian oscillator --q0 1 --t-end 0.1 --dt 0.05 --format json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"samples\": 3"));
}

TEST_CASE("cli: trajectory domain errors are structured") {
  const RunResult r = run_cli("trajectory --t-end 0.1 --dt 0.5");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "StepTooLarge"));
}

TEST_CASE("cli: verify is deterministic byte for byte") {
  const RunResult a = run_cli("verify --seed 7 --cases 24");
  const RunResult b = run_cli("verify --seed 7 --cases 24");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "seed: 7"));
  CHECK(contains(a.out, "failed: 0"));
}

TEST_CASE("cli: the seed environment variable overrides the flag") {
  const RunResult env = run_cli("verify --seed 7 --cases 24", "RECIPROCA_SEED=9 ");
  const RunResult flag = run_cli("verify --seed 9 --cases 24");
  CHECK(env.exit_code == 0);
  CHECK(env.out == flag.out);
  CHECK(contains(env.out, "seed: 9"));
  CHECK(run_cli("verify --cases 24", "RECIPROCA_SEED=bogus ").exit_code == 2);
}

TEST_CASE("cli: verify json format") {
  const RunResult r = run_cli("verify --seed 7 --cases 16 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"command\": \"verify\""));
  CHECK(contains(r.out, "\"failed\": 0"));
}
