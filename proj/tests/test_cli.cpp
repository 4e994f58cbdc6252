#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ROUTH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze exit codes follow the verdict") {
  CHECK(run("analyze --coeffs \"1,2,1\"").code == 0);
  CHECK(run("analyze --coeffs \"1,0,0,0,1\" --policy eps-row").code == 1);
  CHECK(run("analyze --coeffs \"1,0,1\"").code == 2);
  CHECK(run("analyze --coeffs \"1,1,0\"").code == 2);  // origin root
  CHECK(run("analyze --coeffs \"s^2 + 3*s + 2\"").code == 0);
}

TEST_CASE("usage and data errors") {
  CHECK(run("").code == 64);
  CHECK(run("analyze").code == 64);
  CHECK(run("analyze --coeffs \"1,x\"").code == 64);
  CHECK(run("analyze --coeffs 1,2 --policy nope").code == 64);
  CHECK(run("frobnicate").code == 64);
  CHECK(run("analyze --coeffs \"0,0\"").code == 65);
  CHECK(run("analyze --coeffs \"5\"").code == 65);
  CHECK(run("analyze --coeffs \"1,0,0,0,1\" --policy single-eps").code == 65);
  CHECK(run("sweep --coeffs \"1,3,3\" --range 0:1").code == 64);
  CHECK(run("sweep --coeffs \"K,K\" --range 0:1").code == 64);
  CHECK(run("corpus --count 0").code == 64);
  CHECK(run("--help").code == 0);
}

TEST_CASE("analyze output") {
  const Run r = run("analyze --coeffs \"1,0,-7,-6\" --oracle");
  CHECK(r.code == 1);
  CHECK(r.out.find("rhp roots:    1") != std::string::npos);
  CHECK(r.out.find("agreement:    yes") != std::string::npos);

  const Run g = run("analyze --coeffs \"1,0,0,0,1\" --policy eps-row --json");
  CHECK(g.out == slurp(std::string(ROUTH_GOLDEN_DIR) + "/analyze_quartic_eps_row.json"));
}

TEST_CASE("compare, corpus and sweep commands") {
  const Run c = run("compare --coeffs \"1,0,0,0,1\"");
  CHECK(c.code == 0);
  CHECK(c.out.find("single-eps  -             Undetermined") != std::string::npos);
  CHECK(c.out.find("eps-row     2             Unstable") != std::string::npos);
  CHECK(c.out.find("derivative  2             Unstable") != std::string::npos);
  CHECK(c.out.find("oracle      rhp 2") != std::string::npos);

  const Run k = run("corpus --count 50 --max-degree 6 --seed 9 --json");
  CHECK(k.code == 0);
  CHECK(k.out.find("\"agreed\": 50") != std::string::npos);
  CHECK(run("corpus --count 50 --max-degree 6 --seed 9 --json").out == k.out);

  const Run s = run("sweep --coeffs \"1,3,3,K\" --range 0:12 --steps 1200");
  CHECK(s.code == 0);
  CHECK(s.out.find("stable: [0.0100083402836, 8.99749791493]") != std::string::npos);
  CHECK(run("sweep --coeffs \"1,K\" --range=-1:1 --steps 200").out.find("stable: [0.00502512562814, 1]") !=
        std::string::npos);
  CHECK(run("sweep --coeffs \"1,0,K\" --range 0:1 --steps 10").out.find("no stable interval") != std::string::npos);
}
