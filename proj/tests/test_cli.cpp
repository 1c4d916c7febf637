#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(CUBTORS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("usage errors exit 64") {
  CHECK(cli("claims run --id BOGUS").code == 64);
  CHECK(cli("no-such-command").code == 64);
  CHECK(cli("torsion --curve NOPE").code == 64);
  CHECK(cli("--precision-bits 10 fields").code == 64);
}

TEST_CASE("manifest errors exit 65") {
  CHECK(cli("--manifest /nonexistent/manifest.json fields").code == 65);
  const std::string bad = "cli_bad_manifest.json";
  std::ofstream(bad) << "{\"schema\": 1, \"fields\": [}";
  CHECK(cli("--manifest " + bad + " fields").code == 65);
  std::remove(bad.c_str());
}

TEST_CASE("torsion of X1(11) over K3") {
  auto r = cli("torsion --curve X1_11 --field K3");
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,10) Certified") != std::string::npos);
}

TEST_CASE("fields prints the Table 1 reproduction") {
  auto r = cli("fields");
  CHECK(r.code == 0);
  for (const char* d : {"-23", "-31", "-44", "49", "-59", "-76", "81", "316", "961"})
    CHECK_MESSAGE(r.out.find(d) != std::string::npos, d);
}

TEST_CASE("claims run exit codes and deterministic JSON") {
  auto ok = cli("claims run --id D1 --id T1 --json --deterministic");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(cli("claims run --id D1 --id T1 --json --deterministic").out == ok.out);
  auto list = cli("claims list");
  CHECK(list.code == 0);
  CHECK(list.out.find("T7") != std::string::npos);
}

TEST_CASE("point counts, degrees and roots") {
  auto c = cli("count --curve X1_11 --prime 5 --power 3");
  CHECK(c.code == 0);
  CHECK(c.out.find("#E(F_125)") != std::string::npos);
  auto d = cli("degrees --poly 1,3,3,5,3");
  CHECK(d.code == 0);
  CHECK(d.out.find("(irreducible)") != std::string::npos);
  auto r = cli("roots --poly 1,-1,-2,1 --field K4");
  CHECK(r.code == 0);
  CHECK(r.out.find("3 root(s) in K4") != std::string::npos);
}
