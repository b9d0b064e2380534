#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so the
// tests pin stdout bytes only.
RunResult run(const std::string& args) {
  std::string command = std::string(LNF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

RunResult run_pipeline(const std::string& pipeline) {
  FILE* pipe = popen(pipeline.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

// Strips the one timing line so the rest of a report can be compared
// byte for byte.
std::string without_elapsed(const std::string& text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size() - 1;
    std::string line = text.substr(pos, end - pos + 1);
    if (line.rfind("elapsed_ms:", 0) != 0) out += line;
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("formula output") {
  RunResult r = run("formula --k 4 --n 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "16\n");
  r = run("formula --k 2 --n 8");
  CHECK(r.out == "14\n");
  r = run("formula --k 2 --range 8:12");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "8\t14\ttwo_connected\n"
        "9\t17\ttwo_connected\n"
        "10\t19\ttwo_connected\n"
        "11\t20\ttwo_connected\n"
        "12\t21\ttwo_connected\n");
  r = run("formula --k 1 --range 8:10");
  CHECK(r.out ==
        "8\t13\tconnected\n"
        "9\t16\tconnected\n"
        "10\t18\tconnected\n");
  r = run("formula --k 5 --n 9");
  CHECK(r.out == "23\n");
}

TEST_CASE("build output") {
  RunResult r = run("build --k 4 --n 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "G~Ci[[\n");
  r = run("build --k 1 --n 8 --format edgelist");
  CHECK(r.out ==
        "8 13\n"
        "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n2 5\n"
        "4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n");
  r = run(std::string("build --k 2 --n 9 --catalog ") + LNF_CATALOG_PATH);
  CHECK(r.out == "H^{@IKF\n");
  r = run("build --k 6 --n 10");
  CHECK(r.exit_code == 0);
}

TEST_CASE("check streams one verdict per line") {
  RunResult r = run_pipeline(
      std::string("echo 'D~{' | ") + LNF_CLI_PATH +
      " check --property locally-nonforesty - 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");

  r = run_pipeline(std::string("printf 'C~\\nDhc\\n' | ") + LNF_CLI_PATH +
                   " check --property forest - 2>/dev/null");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "false\nfalse\n");

  r = run_pipeline(std::string(LNF_CLI_PATH) + " build --k 4 --n 8 | " +
                   LNF_CLI_PATH +
                   " check --property k-connected --k 4 - 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");

  r = run_pipeline(std::string("echo 'D~{' | ") + LNF_CLI_PATH +
                   " check --property wheel-hubs - 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 1 2 3 4\n");
}

TEST_CASE("blocks report") {
  RunResult r = run_pipeline(std::string(LNF_CLI_PATH) +
                             " build --k 1 --n 12 --catalog " +
                             LNF_CATALOG_PATH + " | " + LNF_CLI_PATH +
                             " blocks - 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n\t12\n"
        "blocks\t5\n"
        "block\t8\t9\t10\t11\n"
        "block\t6\t9\n"
        "block\t4\t5\t6\t7\n"
        "block\t2\t5\n"
        "block\t0\t1\t2\t3\n"
        "cut\t2\t5\t6\t9\n"
        "t\t2\t2\n"
        "t\t4\t3\n");
}

TEST_CASE("verify-min report") {
  RunResult r = run("verify-min --k 2 --n 8");
  CHECK(r.exit_code == 0);
  CHECK(without_elapsed(r.out) ==
        "k: 2\n"
        "n: 8\n"
        "budget: 13\n"
        "formula_value: 14\n"
        "graphs_examined: 41\n"
        "witness: none\n"
        "certified: true\n");

  // At the formula value a witness exists but does not undercut it.
  r = run("verify-min --k 1 --n 8 --budget 13");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("witness_size: 13\n") != std::string::npos);
}

TEST_CASE("lemma1 count") {
  RunResult r = run("lemma1 --n 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("gadget stanza") {
  RunResult r =
      run(std::string("gadget --name B1 --context k2 --catalog ") +
          LNF_CATALOG_PATH);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "B1 k2\n"
        "5 9\n"
        "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"
        "ports 0 1 2 3\n");
}

TEST_CASE("conjecture1 verdicts") {
  RunResult r = run(std::string("conjecture1 --k 4 --n 12 --catalog ") +
                    LNF_CATALOG_PATH);
  CHECK(r.exit_code == 1);
  CHECK(r.out ==
        "k: 4\n"
        "n: 12\n"
        "m: 24\n"
        "bound: 77/3\n"
        "conjecture violated\n");

  r = run_pipeline(std::string("echo 'D~{' | ") + LNF_CLI_PATH +
                   " conjecture1 - 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "n: 5\n"
        "m: 10\n"
        "bound: 28/3\n"
        "conjecture satisfied\n");
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("formula --k 2").exit_code == 2);
  CHECK(run("formula --k 3 --n 10").exit_code == 2);
  CHECK(run("formula --k 2 --n 7").exit_code == 2);
  CHECK(run("build --k 3 --n 10").exit_code == 2);
  CHECK(run("check --property nonsense --k 1 /dev/null").exit_code == 2);
  CHECK(run("verify-min --k 1 --n 20").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  RunResult r = run_pipeline(std::string("echo 'not-a-graph' | ") +
                             LNF_CLI_PATH +
                             " check --property forest - 2>/dev/null");
  CHECK(r.exit_code == 2);
}

TEST_SUITE_END();
