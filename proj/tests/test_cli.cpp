#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr is dropped.
RunResult run_shell(const std::string& cmd) {
  RunResult result;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run(const std::string& args) {
  return run_shell(std::string(UCYC_CLI_PATH) + " " + args);
}

RunResult run_with_input(const std::string& input, const std::string& args) {
  return run_shell("printf '" + input + "' | " + std::string(UCYC_CLI_PATH) +
                   " " + args);
}

}  // namespace

TEST_CASE("debruijn golden output") {
  const RunResult r = run("debruijn --n 2 --k 3");
  CHECK(r.code == 0);
  CHECK(r.out == "# cyclic n=2 k=3 length=9\n200102112\n");
}

TEST_CASE("debruijn euler method verifies") {
  const RunResult r = run("debruijn --n 3 --k 2 --method euler --verify");
  CHECK(r.code == 0);
  CHECK(r.out.find("# cyclic n=3 k=2 length=8\n") == 0);
  CHECK(r.out.find("# verified\n") != std::string::npos);
}

TEST_CASE("custom starts can stall with exit 1") {
  const RunResult r = run("debruijn --n 2 --k 2 --start 0");
  CHECK(r.code == 1);
  CHECK(r.out.find("# stall covered=3 total=4") == 0);
}

TEST_CASE("output is deterministic run to run") {
  const std::string args = "multiperm --d 3 --n 3 --verify";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("# verified") != std::string::npos);
}

TEST_CASE("perm prints the one-row cyclic object") {
  const RunResult r = run("perm --n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "# cyclic d=2 n=3 columns=6\n5 6 4 1 3 2\n");

  const RunResult w = run("perm --n 3 --uword");
  CHECK(w.code == 0);
  CHECK(w.out == "# uword d=2 n=3 columns=8\n7 8 6 1 3 2 4 5\n");
}

TEST_CASE("multiperm family prints every complement with headers") {
  const RunResult r = run("multiperm --d 3 --n 2 --family --verify");
  CHECK(r.code == 0);
  CHECK(r.out.find("complement=-") != std::string::npos);
  CHECK(r.out.find("complement=1 ") == std::string::npos);
  CHECK(r.out.find("complement=1\n") != std::string::npos);
  CHECK(r.out.find("complement=2\n") != std::string::npos);
  CHECK(r.out.find("complement=1,2\n") != std::string::npos);
  std::size_t verified = 0, pos = 0;
  while ((pos = r.out.find("# verified\n", pos)) != std::string::npos) {
    ++verified;
    pos += 1;
  }
  CHECK(verified == 4);
}

TEST_CASE("complement rows apply before verification") {
  const RunResult r = run("multiperm --d 3 --n 2 --complement-rows 1 --verify");
  CHECK(r.code == 0);
  CHECK(r.out == "# cyclic d=3 n=2 columns=4\n1 2 4 3\n4 1 3 2\n# verified\n");
}

TEST_CASE("matrix subcommand prints slices") {
  const RunResult r = run("matrix --dims 2,2 --k 2 --verify");
  CHECK(r.code == 0);
  CHECK(r.out.find("# cyclic dims=2,2 k=2 slices=16\n") == 0);
  CHECK(r.out.find("# verified\n") != std::string::npos);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 18);
}

TEST_CASE("setpartition start and search modes") {
  const RunResult word = run("setpartition --n 4 --start 124 --verify");
  CHECK(word.code == 0);
  CHECK(word.out ==
        "# uword n=4 length=18\n124111121122313124\n# verified\n");

  const RunResult cyc =
      run("setpartition --n 4 --mode ucycle --start 124 --verify");
  CHECK(cyc.code == 0);
  CHECK(cyc.out == "# cyclic n=4 length=15\n124111121122313\n# verified\n");

  const RunResult stall = run("setpartition --n 5 --mode ucycle --start 1111");
  CHECK(stall.code == 1);

  const RunResult open = run("setpartition --n 4 --mode ucycle --start 142");
  CHECK(open.code == 1);
  CHECK(open.out.find("# not-closed trim-covers=yes\n") == 0);

  const RunResult search = run("setpartition --n 4 --search");
  CHECK(search.code == 0);
  CHECK(search.out.find("n=4 mode=uword alphabet_max=3 successes=6\n") == 0);
  std::size_t lines = 0;
  for (char c : search.out) lines += c == '\n';
  CHECK(lines == 7);

  const RunResult cyc_search =
      run("setpartition --n 4 --mode ucycle --search");
  CHECK(cyc_search.code == 0);
  CHECK(cyc_search.out.find("successes=1\n124\n") != std::string::npos);
}

TEST_CASE("json records are flat and typed") {
  const RunResult r = run("perm --n 3 --verify --json");
  CHECK(r.code == 0);
  const nlohmann::json record = nlohmann::json::parse(r.out);
  CHECK(record["kind"] == "multiperm");
  CHECK(record["params"]["n"] == 3);
  CHECK(record["params"]["d"] == 2);
  CHECK(record["verified"] == true);
  REQUIRE(record["rows"].size() == 1);
  CHECK(record["rows"][0] == nlohmann::json::array({5, 6, 4, 1, 3, 2}));

  const RunResult plain = run("debruijn --n 2 --k 2 --json");
  const nlohmann::json rec2 = nlohmann::json::parse(plain.out);
  CHECK(rec2["verified"].is_null());
}

TEST_CASE("graph modes") {
  const RunResult summary = run("graph --d 2 --n 3");
  CHECK(summary.code == 0);
  CHECK(summary.out == "overlap-graph d=2 n=3 vertices=6 edges=18\n");

  const RunResult dot = run("graph --d 2 --n 3 --dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") == 0);
  CHECK(dot.out.find("\"123\" -> \"132\"") != std::string::npos);

  const RunResult ham = run("graph --d 2 --n 3 --hamiltonian");
  CHECK(ham.code == 0);
  CHECK(ham.out.find("# hamiltonian d=2 n=3 vertices=6\n") == 0);

  const RunResult lin = run("graph --d 2 --n 3 --linearize");
  CHECK(lin.code == 0);
  CHECK(lin.out.find("# cyclic d=2 n=3 columns=6\n") == 0);
  CHECK(lin.out.find("# verified\n") != std::string::npos);

  const RunResult starved = run("graph --d 2 --n 4 --hamiltonian --budget 2");
  CHECK(starved.code == 1);
  CHECK(starved.out.find("# hamiltonian unknown") == 0);
}

TEST_CASE("lab modes") {
  const RunResult s4 = run("lab --s4-switch");
  CHECK(s4.code == 0);
  CHECK(s4.out.find("# s4-switch vertices=24\n1234\n") == 0);

  const RunResult good = run("lab --keygroup 123 132");
  CHECK(good.code == 0);
  CHECK(good.out.find("# keygroup small-cycle=true\n") == 0);
  CHECK(good.out.find("123/132\n") != std::string::npos);

  const RunResult bad = run("lab --keygroup 123 231");
  CHECK(bad.code == 0);
  CHECK(bad.out.find("small-cycle=false failing-step=3") != std::string::npos);
}

TEST_CASE("verify subcommand reads stdin and reports") {
  const RunResult ok =
      run_with_input("564132\\n", "verify --kind perm --n 3 --cyclic");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verified total=6") == 0);

  const RunResult bad =
      run_with_input("123456\\n", "verify --kind perm --n 3 --cyclic");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verification-failed total=6") == 0);
  CHECK(bad.out.find("missing ") != std::string::npos);

  const RunResult multi = run_with_input(
      "# cyclic d=3 n=2 columns=4\\n4 3 1 2\\n4 1 3 2\\n",
      "verify --kind multiperm --d 3 --n 2 --cyclic");
  CHECK(multi.code == 0);

  const RunResult db =
      run_with_input("0011\\n", "verify --kind debruijn --n 2 --k 2");
  CHECK(db.code == 0);

  const RunResult part = run_with_input(
      "124111121122313\\n", "verify --kind partition --n 4 --cyclic");
  CHECK(part.code == 0);

  const RunResult garbage =
      run_with_input("56x4\\n", "verify --kind perm --n 3");
  CHECK(garbage.code == 2);
}

TEST_CASE("invalid invocations exit 2") {
  CHECK(run("debruijn --n 0 --k 2").code == 2);
  CHECK(run("debruijn --k 2").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("setpartition --n 4").code == 2);
  CHECK(run("lab").code == 2);
  CHECK(run("multiperm --d 1 --n 3").code == 2);
  CHECK(run("").code == 2);
}
