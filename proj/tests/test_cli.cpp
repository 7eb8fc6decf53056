#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HGT_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kDataDir = HG_TEST_DATA_DIR;

}  // namespace

TEST_CASE("cli convolve prints exact rational measures") {
  const RunResult r = run_cli("convolve --hypergroup su2dual 1 1 --no-timing");
  CHECK(r.code == 0);
  CHECK(r.out == "0: 1/4, 2: 3/4\n");

  const RunResult tuple = run_cli(
      "convolve --hypergroup su3dual '(1,0)' '(0,1)' --no-timing");
  CHECK(tuple.code == 0);
  CHECK(tuple.out == "(0,0): 1/9, (1,1): 8/9\n");
}

TEST_CASE("cli reiter matches the worked example") {
  const RunResult r = run_cli(
      "reiter --hypergroup chebyshev:1 --V 0..2 --E 1 --r 2 --no-timing");
  CHECK(r.code == 0);
  CHECK(r.out.find("deficiency^2 = 1/5") != std::string::npos);
}

TEST_CASE("cli outputs are byte-identical across runs") {
  const std::string cmd =
      "growth --hypergroup su3dual --nmax 6 --norm-exp 8 --format jsonl "
      "--no-timing";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK_FALSE(a.out.empty());
  CHECK(a.out == b.out);

  const std::string axioms_cmd =
      "axioms --hypergroup chebyshev:2 --box 2 --format csv --no-timing";
  const RunResult c = run_cli(axioms_cmd);
  const RunResult d = run_cli(axioms_cmd);
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
  CHECK(c.out.rfind("axiom,status,detail\n", 0) == 0);
}

TEST_CASE("cli exit codes distinguish usage errors from failed checks") {
  CHECK(run_cli("convolve --hypergroup su4dual 1 1").code == 2);
  CHECK(run_cli("convolve --hypergroup su2dual 1").code == 2);
  CHECK(run_cli("convolve --hypergroup su2dual 1 -4").code == 2);
  CHECK(run_cli("convolve --hypergroup su3dual '(1,0,0)' '(0,1)'").code == 2);
  CHECK(run_cli("leptin --hypergroup su2dual --K 1").code == 2);
  CHECK(run_cli("nope --hypergroup su2dual").code == 2);
  CHECK(run_cli("--help").code == 0);

  // an unreachable certification target is a failed check, not a usage error
  CHECK(run_cli("leptin --hypergroup su2dual --K 1 --budget 3 --D 1/1000")
            .code == 1);
}

TEST_CASE("cli axioms defaults to the full class set for conjugacy") {
  const RunResult r = run_cli("axioms --hypergroup conjugacy:" + kDataDir +
                              "/s3.json --no-timing");
  CHECK(r.code == 0);
  CHECK(r.out.find("truncation: 3 elements") != std::string::npos);
  CHECK(r.out.find("result: pass") != std::string::npos);
}

TEST_CASE("cli cache roundtrip and mismatch rejection") {
  const std::string path = "cli_cache_test.json";
  const RunResult store = run_cli(
      "cache --hypergroup chebyshev:1 store --path " + path +
      " --warm 0..4 --no-timing");
  CHECK(store.code == 0);
  CHECK(store.out.find("stored 15 records") != std::string::npos);

  const RunResult load = run_cli(
      "cache --hypergroup chebyshev:1 load --path " + path + " --no-timing");
  CHECK(load.code == 0);
  CHECK(load.out.find("loaded 15 records") != std::string::npos);

  const RunResult mismatch = run_cli(
      "cache --hypergroup chebyshev:2 load --path " + path + " --no-timing");
  CHECK(mismatch.code == 1);

  const RunResult missing = run_cli(
      "cache --hypergroup chebyshev:1 load --path no_such_cache.json");
  CHECK(missing.code == 1);
  std::remove(path.c_str());
}

TEST_CASE("cli writes payload to a file on request") {
  const std::string path = "cli_output_test.txt";
  const RunResult r = run_cli("convolve --hypergroup su2dual 1 2 --output " +
                              path + " --no-timing");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == "1: 1/3, 3: 2/3\n");
  std::remove(path.c_str());
}

TEST_CASE("cli folner and levelset subcommands") {
  const RunResult f = run_cli(
      "folner --hypergroup chebyshev:1 --x 1 --V 0..9 --format jsonl "
      "--no-timing");
  CHECK(f.code == 0);
  CHECK(f.out.find("\"ratio\":\"2/19\"") != std::string::npos);

  const RunResult strong = run_cli(
      "folner --hypergroup su2dual --K 1,2 --V 0..9 --no-timing");
  CHECK(strong.code == 0);

  const RunResult ls = run_cli(
      "levelset --hypergroup su2dual --M 100 --set 0..200 --no-timing");
  CHECK(ls.code == 0);
  CHECK(ls.out.find("verdict: saturating") != std::string::npos);

  const RunResult cert = run_cli(
      "certificate --hypergroup su2dual --K 1 --V 0..9 --format jsonl "
      "--no-timing");
  CHECK(cert.code == 0);
  CHECK(cert.out.find("\"bound_sq\":\"46/35\"") != std::string::npos);
}
