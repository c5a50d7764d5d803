#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args)
{
  std::string cmd = std::string(LEGCOB_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

}  // namespace

TEST_CASE("cli: invariants of the unknot")
{
  auto r = run_cli("invariants --knot unknot");
  CHECK(r.status == 0);
  CHECK(r.out == "tb = -1\nrot = 0\n");
}

TEST_CASE("cli: polys emits the documented JSON bytes")
{
  auto r = run_cli("polys --knot m52_K1 --json");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"polys\":[[[0,2],[1,1]]]}\n");
}

TEST_CASE("cli: verdicts exit zero either way")
{
  auto obstructed = run_cli("obstruct-cobordism --knot m52_K1 --knot m52_K2 --json");
  CHECK(obstructed.status == 0);
  CHECK(obstructed.out.find("\"verdict\":\"obstructed\"") != std::string::npos);

  auto fine = run_cli("obstruct-cobordism --knot unknot --knot unknot --json");
  CHECK(fine.status == 0);
  CHECK(fine.out.find("\"verdict\":\"not_obstructed\"") != std::string::npos);
}

TEST_CASE("cli: input errors exit 2")
{
  CHECK(run_cli("polys --knot no_such_knot").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("polys").status == 2);
  CHECK(run_cli("obstruct-cobordism --knot unknot").status == 2);
}

TEST_CASE("cli: front files parse, with errors reported on bad input")
{
  std::string path = "cli_test_front.txt";
  {
    std::ofstream f(path);
    f << "# trefoil\nL 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1\n";
  }
  auto r = run_cli("invariants " + path);
  CHECK(r.status == 0);
  CHECK(r.out == "tb = 1\nrot = 0\n");
  {
    std::ofstream f(path);
    f << "L 1\nX 9\nR 1\n";
  }
  CHECK(run_cli("invariants " + path).status == 2);
  std::remove(path.c_str());
}

TEST_CASE("cli: manual profiles drive the obstruction commands")
{
  auto r = run_cli("obstruct-filling --profile "
                   "'{\"n\":2,\"tb\":1,\"polys\":[[[-1,1],[2,1]]]}' --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"verdict\":\"obstructed\"") != std::string::npos);
}

TEST_CASE("cli: identical invocations are byte-identical")
{
  auto a = run_cli("obstruct-cobordism --knot m52_K1 --knot m52_K2 --json");
  auto b = run_cli("obstruct-cobordism --knot m52_K1 --knot m52_K2 --json");
  CHECK(a.out == b.out);
  auto c = run_cli("profile --knot trefoil");
  auto d = run_cli("profile --knot trefoil");
  CHECK(c.out == d.out);
}
