#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfpts/abgroup.hpp"
#include "surfpts/json_io.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace surfpts;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SURFPTS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int code_of(const std::string& args) { return run(args).code; }

}  // namespace

TEST_CASE("classify") {
  const auto r = run("classify --q 4 --poly 1,3,4,12,16");
  CHECK(r.code == 0);
  CHECK(r.out.find("case: 3") != std::string::npos);
  CHECK(r.out.find("f(1): 36 = 2^2 * 3^2") != std::string::npos);
  CHECK(code_of("classify --q 2 --a1 0 --a2 3") == 0);
}

TEST_CASE("groups") {
  CHECK(run("groups --q 2 --poly 1,0,3,0,4").out == "8\n2,4\n");
  CHECK(run("groups --q 4 --poly 1,3,4,12,16").out == "3,12\n");
  CHECK(run("groups --q 4 --poly 1,8,24,32,16").out == "3,3,3,3\n");
}

TEST_CASE("check exit codes") {
  CHECK(code_of("check --q 4 --poly 1,3,4,12,16 --group 3,12") == 0);
  const auto no = run("check --q 2 --poly 1,0,3,0,4 --group 2,2,2");
  CHECK(no.code == 1);
  CHECK(no.out == "NO: case-1-condition at ell=2 exponents (0,1,1,1)\n");
  CHECK(run("check --q 4 --poly 1,3,4,12,16 --group 36").out == "NO: case-3-condition at ell=3 exponents (0,0,0,2)\n");
}

TEST_CASE("invalid input exits 2") {
  CHECK(code_of("classify --q 6 --poly 1,0,0,0,36") == 2);
  CHECK(code_of("classify --q 2 --poly 1,9,9,9,4") == 2);
  CHECK(code_of("classify --q 2 --poly 1,x") == 2);
  CHECK(code_of("check --q 2 --poly 1,0,3,0,4 --group 0") == 2);
  CHECK(code_of("oracle --q 2 --poly 1,2,5,4,4 --ell 2") == 2);
  CHECK(code_of("oracle --q 4 --poly 1,3,4,12,16 --ell 4") == 2);
  CHECK(code_of("nosuchcommand") == 2);
  CHECK(code_of("") == 2);
  CHECK(code_of("--help") == 0);
}

TEST_CASE("oracle") {
  const auto r = run("oracle --q 4 --poly 1,3,4,12,16 --ell 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("realized: (0,0,1,1)") != std::string::npos);
  CHECK(r.out.find("MATCH") != std::string::npos);
  // too shallow to realize (0,0,1,2): a mismatch is an internal failure
  const auto shallow = run("oracle --q 2 --poly 1,0,3,0,4 --ell 2 --allow-char-prime --depth 0");
  CHECK(shallow.code == 3);
  CHECK(shallow.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("witness") {
  const auto r = run("witness --q 4 --poly 1,3,4,12,16 --ell 3 --exponents 0,0,1,1");
  CHECK(r.code == 0);
  CHECK(r.out.find("[4, -3, -4, 12]") != std::string::npos);
  CHECK(r.out.find("exponents: (0,0,1,1)") != std::string::npos);
  CHECK(code_of("witness --q 2 --poly 1,0,3,0,4 --ell 2 --exponents 0,1,1,1") == 1);
  CHECK(code_of("witness --q 2 --poly 1,0,3,0,4 --ell 2 --exponents 0,0,1,2") == 0);
}

TEST_CASE("JSON round trips") {
  const auto g = run("groups --q 4 --poly 1,3,4,12,16 --json");
  REQUIRE(g.code == 0);
  const Json j = Json::parse(g.out);
  REQUIRE(j["groups"].size() == 1);
  CHECK(group_from_json(j["groups"][0]) == parse_group("3,12"));

  const auto c = run("check --q 4 --poly 1,3,4,12,16 --group 3,12 --json");
  const Json d = Json::parse(c.out);
  CHECK(d["accepted"] == true);
  CHECK(group_from_json(d["group"]) == parse_group("3,12"));

  const auto w = run("witness --q 4 --poly 1,3,4,12,16 --ell 3 --exponents 0,0,1,1 --json");
  const Json wj = Json::parse(w.out);
  CHECK(matrix_json(matrix_from_json(wj["matrix"])) == Json::parse("[[4,-3,-4,12],[1,0,0,0],[1,-3,3,0],[0,0,1,0]]"));
}

TEST_CASE("corpus output is byte-deterministic") {
  const auto a = run("corpus --json");
  const auto b = run("corpus --json --jobs 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run("corpus --json").out);
  const Json j = Json::parse(a.out);
  CHECK(j.size() == 6);
  for (const auto& entry : j)
    for (const auto& check : entry["oracle"]) CHECK(check["match"] == true);
  const auto text = run("corpus");
  CHECK(text.code == 0);
  CHECK(text.out.find("MISMATCH") == std::string::npos);
}
