#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef EXACT3_CLI
#error "EXACT3_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp") +
                    "/exact3_cli_out.txt";
  std::string cmd = std::string(EXACT3_CLI) + " " + args + " > " + tmp + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(raw), buf.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("verify exit codes") {
  write_file("/tmp/exact3_db.g", "2 1\n0 1 3\n");
  write_file("/tmp/exact3_c4.g", "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");
  write_file("/tmp/exact3_bad.g", "2 1\na b\n");

  RunResult ok = run("verify /tmp/exact3_db.g");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("EXACT k=3") != std::string::npos);

  RunResult fail = run("verify /tmp/exact3_c4.g");
  CHECK(fail.status == 1);
  CHECK(fail.out.find("lambda(0,1) = 2") != std::string::npos);

  CHECK(run("verify /tmp/exact3_bad.g").status == 2);
}

TEST_CASE("json outputs parse and carry the schema") {
  RunResult r = run("verify /tmp/exact3_c4.g --json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "verify");
  CHECK(j["ok"] == false);
  CHECK(j["witness"]["lambda"] == 2);

  RunResult e = run("enumerate --max-n 4 --simple --biconnected --count-only --json");
  auto je = nlohmann::json::parse(e.out);
  CHECK(je["counts_by_order"]["4"] == 1);
}

TEST_CASE("decompose | replay | verify pipeline") {
  write_file("/tmp/exact3_k33.g",
             "6 9\n0 3 1\n0 4 1\n0 5 1\n1 3 1\n1 4 1\n1 5 1\n2 3 1\n2 4 1\n2 5 1\n");
  RunResult script = run("decompose /tmp/exact3_k33.g");
  REQUIRE(script.status == 0);
  write_file("/tmp/exact3_k33.script", script.out);
  RunResult graph = run("replay /tmp/exact3_k33.script");
  REQUIRE(graph.status == 0);
  write_file("/tmp/exact3_k33_replayed.g", graph.out);
  CHECK(run("verify /tmp/exact3_k33_replayed.g").status == 0);

  // K4 decomposes to a two-line script
  write_file("/tmp/exact3_k4.g", "4 6\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n");
  RunResult k4s = run("decompose /tmp/exact3_k4.g");
  int lines = 0;
  for (char c : k4s.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3);  // provenance comment + DUMBBELL + EXPAND
  CHECK(k4s.out.find("DUMBBELL") != std::string::npos);
  CHECK(k4s.out.find("EXPAND") != std::string::npos);

  // a 3-thick path decomposes to gluings only
  write_file("/tmp/exact3_path.g", "3 2\n0 1 3\n1 2 3\n");
  RunResult path = run("decompose /tmp/exact3_path.g");
  CHECK(path.out.find("GLUE") != std::string::npos);
  CHECK(path.out.find("EXPAND") == std::string::npos);

  CHECK(run("decompose /tmp/exact3_c4.g").status == 1);
}

TEST_CASE("enumerate count-only output") {
  RunResult r = run("enumerate --max-n 4 --simple --biconnected --count-only 2>&1");
  CHECK(r.status == 0);

  RunResult m = run("enumerate --max-n 6 --minimum 2>&1");
  CHECK(m.status == 0);

  RunResult budget = run("enumerate --max-n 8 --biconnected --budget 3 --count-only");
  CHECK(budget.status == 3);
}

TEST_CASE("expand, glue and export") {
  RunResult k4 = run("expand /tmp/exact3_db.g --vertex 1 --cycle-size 3 "
                     "--darts 1~0#0,1~0#1,1~0#2");
  REQUIRE(k4.status == 0);
  write_file("/tmp/exact3_expanded.g", k4.out);
  CHECK(run("verify /tmp/exact3_expanded.g").status == 0);

  RunResult glued = run("glue /tmp/exact3_db.g /tmp/exact3_db.g --u1 1 --u2 0");
  REQUIRE(glued.status == 0);
  write_file("/tmp/exact3_glued.g", glued.out);
  CHECK(run("verify /tmp/exact3_glued.g").status == 0);

  RunResult dot = run("export /tmp/exact3_db.g --to dot");
  CHECK(dot.out.find("graph G {") != std::string::npos);
  RunResult g6 = run("export /tmp/exact3_k4.g --to graph6");
  CHECK(g6.out == "C~\n");
}
