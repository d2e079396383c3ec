#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "spheretile/vertex.hpp"

namespace {

std::string cli() {
  const char* p = std::getenv("SPHERETILE_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string l;
  while (std::getline(is, l)) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("every table regenerates its golden file") {
  for (const char* which : {"t5", "t7", "t8", "t9", "t10", "geom"}) {
    CAPTURE(which);
    auto r = run(cli() + " tables " + which);
    INFO(r.out);
    CHECK(r.code == 0);
  }
}

TEST_CASE("generate | verify pipeline") {
  auto r = run(cli() + " generate two-layer --n 3 | " + cli() +
               " verify --angles \"t,1-t,2/3\" --t 0.55");
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("generate | counts pipeline") {
  auto r = run(cli() + " generate f36 | " + cli() + " counts");
  INFO(r.out);
  CHECK(r.code == 0);
}

TEST_CASE("realize reports the closure residual") {
  auto r = run(cli() + " generate f8 | " + cli() +
               " realize --angles \"1-1/2t,1/2-1/2t,t\" --t 0.3");
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("tiles=8") != std::string::npos);
  CHECK(r.out.find("closure_residual=") != std::string::npos);
}

TEST_CASE("verify with an explicit relation set") {
  auto r = run(cli() + " generate f16 | " + cli() +
               " verify --angles \"3/4,t,1/2-t\" --t 0.304086723985073 "
               "--relation 'a<1' --relation 'c>0' --relation 'a<b+c' "
               "--relation 'a>b' --relation 'b>c' --relation 'b=2c'");
  INFO(r.out);
  CHECK(r.code == 0);
}

TEST_CASE("edge pattern catalog at k = 1") {
  auto r = run(cli() + " edges --kmax 1");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  CHECK(ls.size() == 15);
  CHECK(ls.back() == "great circle");
}

TEST_CASE("avc text and record output agree") {
  auto t = run(cli() + " avc --seed a3 --f 24");
  CHECK(t.code == 0);
  auto tl = lines(t.out);
  REQUIRE(tl.size() == 2);
  CHECK(tl[0] == "full: a3 b4c4");
  CHECK(tl[1] == "half: b2c2");

  auto rec = run(cli() + " avc --seed a3 --f 24 --format records");
  CHECK(rec.code == 0);
  std::string full, half;
  for (const auto& l : lines(rec.out)) {
    spheretile::AVCEntry e = spheretile::parse_avc_record(l);
    (e.vertex.half ? half : full) += " " + spheretile::vertex_str(e.vertex);
  }
  CHECK(full == " a3 b4c4");
  CHECK(half == " b2c2");
}

TEST_CASE("symbolic avc row matches the degree-3 table") {
  auto r = run(cli() + " avc --seed a3 --f sym");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[a3]", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run(cli() + " verify --t 0.5 < /dev/null").code == 2);   // missing --angles
  CHECK(run(cli() + " tables nosuch").code == 2);
  CHECK(run(cli() + " frobnicate").code == 2);
  // Wrong angle sum for the tile count.
  auto r = run(cli() + " generate two-layer --n 4 | " + cli() +
               " verify --angles \"t,1-t,2/3\" --t 0.55");
  CHECK(r.code == 2);
}
