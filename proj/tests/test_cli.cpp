#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "ncs/json_io.hpp"

namespace {
struct Run {
  std::string out;
  int code = 0;
};

Run run(const std::string& args) {
  std::string cmd = std::string(NCS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}
}  // namespace

TEST_CASE("cli: algebra verbs") {
  auto l = run("lyndon --max 3");
  CHECK(l.code == 0);
  CHECK(l.out == "x0\nx1\nx0x1\nx0x0x1\nx0x1x1\n");
  CHECK(run("mul --law stuffle y1 y1").out == "2 y1y1 + y2\n");
  CHECK(run("mul --law conc x0 x1").out == "x0x1\n");
  CHECK(run("coprod --law phi y2").out == "1⊗y2 + y1⊗y1 + y2⊗1\n");
  CHECK(run("pi1 y2").out == "-1/2 y1y1 + y2\n");
  CHECK(run("check duality --N 4").code == 0);
  CHECK(run("check diagonal --N 4").code == 0);
}

TEST_CASE("cli: exit codes") {
  CHECK(run("eval li --word x1 --z 1.5").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("mul --law stuffle y1 x1").code == 2);
  CHECK(run("lyndon --max 3 --format yaml").code == 2);
}

TEST_CASE("cli: numbers and formats") {
  auto t = run("eval li --word x1 --z 0.5");
  CHECK(t.code == 0);
  CHECK(t.out.rfind("0.69314718055994", 0) == 0);
  auto j = run("--format json eval li --word x1 --z 0.5");
  REQUIRE(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.dump().find("0.69314718055994") != std::string::npos);
  // same input, same bytes
  CHECK(run("--jobs 1 eval h --word y1y2 --n 40").out == run("--jobs 3 eval h --word y1y2 --n 40").out);
}

TEST_CASE("cli: minimize output reads back") {
  // S + S realised redundantly at rank 2
  const char* rep = R"('{"alphabet":"x2","rank":2,"nu":["1","1"],"mu":{"x0":[["1","0"],["0","1"]],"x1":[["0","0"],["0","0"]]},"eta":["1","1"]}')";
  auto pw = run(std::string("--format json rat minimize --rep ") + rep);
  REQUIRE(pw.code == 0);
  auto back = ncs::json::rep_from_json(ncs::json::parse(pw.out));
  CHECK(back.rank() == 1);
}
