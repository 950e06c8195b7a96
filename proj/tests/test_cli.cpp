#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const char* cli = std::getenv("VEXMULT_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "VEXMULT_CLI must point at the built binary");
  std::string outf = "/tmp/vexmult_cli_out_" + std::to_string(++counter);
  std::string errf = outf + ".err";
  std::string cmd = std::string(cli) + " " + args + " >" + outf + " 2>" + errf;
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(outf);
  r.err = slurp(errf);
  std::remove(outf.c_str());
  std::remove(errf.c_str());
  return r;
}

}  // namespace

TEST_CASE("mult text and json output") {
  RunResult r = run("mult --type C --w \"-1,-2,3,4\" --v \"-2,-3,-4,1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");

  r = run("mult --type A --w \"1,2,5,4,3,6,7\" --v \"5,2,6,4,1,7,3\" --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"multiplicity\":5") != std::string::npos);
  CHECK(r.out.find("\"lambda\":[2,1]") != std::string::npos);
  CHECK(r.out.find("\"mu\":[3,3,2]") != std::string::npos);
}

TEST_CASE("mult --list emits the five diagrams") {
  RunResult r = run("mult --type A --w \"1,2,5,4,3,6,7\" --v \"5,2,6,4,1,7,3\" --list");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0, states = 0;
  while (std::getline(in, line)) {
    ++lines;
    if (line.find("\"boxes\"") != std::string::npos) ++states;
  }
  CHECK(lines == 6);
  CHECK(states == 5);
}

TEST_CASE("precondition failures exit with code 2") {
  RunResult r = run("mult --type A --w \"2,1,4,3\" --v \"4,3,2,1\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("not-vexillary") != std::string::npos);
  CHECK(r.err.find("not vexillary") != std::string::npos);

  r = run("mult --type A --w \"3,1,2\" --v \"1,2,3\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("not-above") != std::string::npos);
}

TEST_CASE("resource cap exits with code 3") {
  RunResult r = run("mult --type A --w \"1,2,5,4,3,6,7\" --v \"5,2,6,4,1,7,3\" --cap 2");
  CHECK(r.code == 3);
  CHECK(r.err.find("state-cap") != std::string::npos);
}

TEST_CASE("usage errors exit with code 64") {
  CHECK(run("frobnicate").code == 64);
  CHECK(run("mult --type A").code == 64);
  CHECK(run("").code == 64);
}

TEST_CASE("diagram subcommands") {
  RunResult r = run("rothe --w \"2,1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "#*\n*.\n");

  r = run("essential --w \"1,3,5,7,4,2,6\" --format json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"boxes\":[[6,4],[4,4],[2,5]]}\n");

  r = run("vexillary --w \"2,1,4,3\"");
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");

  r = run("triple --w \"1,3,5,7,4,2,6\"");
  CHECK(r.code == 0);
  CHECK(r.out == "k=1,2,4;p=4,4,5;q=6,4,2;type=A\n");

  r = run("shape --w \"-1,-2,3,-5,-4\" --type C");
  CHECK(r.code == 0);
  CHECK(r.out == "8,7,3,1\n");

  r = run("outer-shape --type C --w \"-2,1,-3,4,5\" --v \"1,3,-5,-4,-2\"");
  CHECK(r.code == 0);
  CHECK(r.out == "6,5,2\n");
}

TEST_CASE("excite subcommand") {
  RunResult r = run("excite --type C --lambda \"3,1\" --mu \"4,3,1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");

  r = run("excite --type D --lambda \"3,1\" --mu \"4,3,2,1\" --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"count\":5") != std::string::npos);
}

TEST_CASE("smooth subcommand") {
  RunResult r = run("smooth --type A --w \"1,2,5,4,3,6,7\" --v \"5,2,6,4,1,7,3\"");
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
}

TEST_CASE("kl-verify runs the matrix checks") {
  RunResult r = run(
      "kl-verify --type C --w \"-2,1,-3,4,5\" --v \"1,3,-5,-4,-2\" --trials 20 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"ok\":true") != std::string::npos);

  r = run("kl-verify --type A --v \"6,7,9,3,8,4,5,1,2\" "
          "--triple \"k=1,2,3,5,7;p=3,5,5,6,7;q=6,6,4,2,1\" --trials 20");
  CHECK(r.code == 0);
  CHECK(r.out.find("22") != std::string::npos);

  r = run("kl-verify --type C --w \"-2,1,-3,4,5\" --v \"1,3,-5,-4,-2\" --trials 5 "
          "--dump --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"direct_sum\"") != std::string::npos);
  CHECK(r.out.find("\"kind\":\"pivot\"") != std::string::npos);
}

TEST_CASE("corpus at rank one is a single trivial report") {
  RunResult r = run("corpus --type A -n 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"multiplicity\":1") != std::string::npos);
  CHECK(r.out.find("\"pairs\":1") != std::string::npos);
}

TEST_CASE("corpus output is deterministic with a trailing summary") {
  RunResult r1 = run("corpus --type A -n 3");
  RunResult r2 = run("corpus --type A -n 3");
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("\"singular\":0") != std::string::npos);
  // every report line is multiplicity one at rank 3
  std::istringstream in(r1.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"pairs\"") != std::string::npos) continue;
    CHECK(line.find("\"multiplicity\":1") != std::string::npos);
  }
}
