#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

#ifndef SERIESCONE_CLI_PATH
#define SERIESCONE_CLI_PATH "seriescone"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string in_file = "/tmp/seriescone_cli_in.json";
  std::string out_file = "/tmp/seriescone_cli_out.json";
  {
    std::ofstream f(in_file);
    f << stdin_data;
  }
  std::string cmd = std::string(SERIESCONE_CLI_PATH) + " " + args + " < " + in_file + " > " +
                    out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream f(out_file);
  std::string out((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("cone dual round trip") {
  RunResult r = run("cone --dual", R"({"generators":[[1,0],[0,1]]})");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"generators\"") != std::string::npos);
  RunResult r2 = run("cone --dual", R"({"generators":[[2,-1],[0,1]]})");
  CHECK(r2.exit_code == 0);
  // canonical generators (1,0) and (1,2) appear
  CHECK(r2.out.find("1,\n      2") != std::string::npos);
}

TEST_CASE("deterministic output") {
  std::string spec = R"({"n":2,"rays":[{"base":[0,0],"step":[1,-1]}]})";
  RunResult a = run("tau", spec);
  RunResult b = run("tau", spec);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("tau_dual") != std::string::npos);
}

TEST_CASE("dickson endpoint") {
  std::string in = R"({"shifts":[
    {"gamma":[3],"cone":{"facets":[[1]]}},
    {"gamma":[5],"cone":{"facets":[[1]]}}]})";
  RunResult r = run("dickson", in);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"certified\": true") != std::string::npos);
  CHECK(r.out.find("\"C\"") != std::string::npos);
}

TEST_CASE("asroot endpoint") {
  std::string in = R"({"poly":{"n":1,"terms":[{"e":[-1],"c":{"p":2,"m":1,"coeffs":[1]}}]},
    "order":{"weights":[[1]]},"branch":"minus","depth":3})";
  RunResult r = run("asroot", in);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("root_set_size") != std::string::npos);
  // the exponent -1/8 appears as the exact pair [-1, 8]
  CHECK(r.out.find("-1,\n            8") != std::string::npos);
}

TEST_CASE("gap endpoint") {
  std::string in = R"({"series":{"n":2,"terms":[
      {"e":[1,-1],"c":{"p":2,"m":1,"coeffs":[1]}},
      {"e":[2,-2],"c":{"p":2,"m":1,"coeffs":[1]}},
      {"e":[4,-4],"c":{"p":2,"m":1,"coeffs":[1]}}]},
    "coefficients":[
      {"n":2,"terms":[{"e":[1,-1],"c":{"p":2,"m":1,"coeffs":[1]}}]},
      {"n":2,"terms":[{"e":[0,0],"c":{"p":2,"m":1,"coeffs":[1]}}]},
      {"n":2,"terms":[{"e":[0,0],"c":{"p":2,"m":1,"coeffs":[1]}}]}],
    "weight":[2,1],"guaranteed_level":8})";
  RunResult r = run("gap", in);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verdict\": true") != std::string::npos);
}

TEST_CASE("check-example exit codes") {
  CHECK(run("check-example ex_min -o /dev/null").exit_code == 0);
  CHECK(run("check-example chevalley -o /dev/null").exit_code == 0);
  CHECK(run("check-example no_such_fixture -o /dev/null").exit_code == 2);
}

TEST_CASE("schema violations exit with code two") {
  CHECK(run("tau", "not json").exit_code == 2);
  CHECK(run("cone", R"({"nothing":1})").exit_code == 2);
  CHECK(run("dickson", R"({"shifts":[]})").exit_code == 2);
}

TEST_CASE("plot emits svg and csv") {
  std::string spec = R"({"n":2,"rays":[{"base":[0,0],"step":[1,-1]}]})";
  RunResult svg = run("plot --svg -", spec);
  CHECK(svg.exit_code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(svg.out.find("</svg>") != std::string::npos);
  RunResult again = run("plot --svg -", spec);
  CHECK(svg.out == again.out);
  RunResult csv = run("plot --csv -", spec);
  CHECK(csv.out.rfind("x,y", 0) == 0);
  // empty point list still renders a valid document
  RunResult empty = run("plot --svg -", "[]");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("</svg>") != std::string::npos);
}
