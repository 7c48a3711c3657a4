#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pgroup/io.hpp"

namespace fs = std::filesystem;
using pgroup::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PGROUP_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pgroup_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("catalog list") {
  const Run r = run("catalog list");
  CHECK(r.code == 0);
  CHECK(r.out.find("heis27\t27\t") != std::string::npos);
  const Run j = run("catalog list --json");
  CHECK(j.code == 0);
  CHECK(json::parse(j.out).size() > 20);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("analyze no_such_group").code == 2);
  CHECK(run("analyze heis27 --checks nonsense").code == 2);
  CHECK(run("derivations heis27").code == 2);
  CHECK(run("derivations heis27 --module frob").code == 2);
  CHECK(run("--max-order 243 analyze g729a").code == 2);
  CHECK(run("batch --out /tmp/x").code == 2);
  CHECK(run("batch no_such_group --out /tmp/x").code == 2);
}

TEST_CASE("single group commands") {
  SUBCASE("analyze") {
    const Run r = run("analyze heis27 --json");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["profile"]["order"] == 27);
    CHECK(j["checks"].empty());
  }
  SUBCASE("derivations") {
    const Run r = run("derivations heis27 --module center --json");
    CHECK(r.code == 0);
    const json inst = json::parse(r.out)["checks"]["derivation_ring"]["instances"];
    REQUIRE(inst.size() == 1);
    CHECK(inst[0]["der_size"] == 9);
    const Run idx = run("derivations heis27 --module 3,9 --json");
    CHECK(idx.code == 0);
    CHECK(json::parse(idx.out)["checks"]["derivation_ring"]["instances"][0]["der_size"] == 81);
  }
  SUBCASE("fullness") {
    const Run r = run("fullness heis27 --wrt 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("maximal 1: full") != std::string::npos);
    CHECK(run("fullness c9").out.find("not full (vacuous)") != std::string::npos);
  }
  SUBCASE("exactness") {
    const Run r = run("exactness heis27 --module 3,9 --json");
    CHECK(r.code == 0);
    const json inst = json::parse(r.out)["checks"]["theorem43"]["instances"];
    REQUIRE(inst.size() == 1);
    CHECK(inst[0]["exact"] == true);
    CHECK(inst[0]["full"] == true);
  }
  SUBCASE("berkovich") {
    const Run r = run("berkovich heis27");
    CHECK(r.code == 0);
    CHECK(r.out == "refused: coclass 1\n");
    const Run w = run("berkovich c3xheis27");
    CHECK(w.code == 0);
    CHECK(w.out.find("branch: unequal_d_condition") != std::string::npos);
  }
  SUBCASE("group files") {
    const fs::path dir = scratch("file");
    std::ofstream(dir / "h.json") << R"({"format":"pc","p":3,"rank":3,"commutators":{"2,1":[0,0,1]}})";
    const Run r = run("analyze " + (dir / "h.json").string() + " --json");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["group"] == "h");
    CHECK(json::parse(r.out)["profile"]["class"] == 2);
    fs::remove_all(dir);
  }
}

TEST_CASE("batch") {
  const fs::path a = scratch("batch_a");
  const fs::path b = scratch("batch_b");
  const Run r = run("batch heis27 c9 c3xheis27 --out " + a.string());
  CHECK(r.code == 0);
  CHECK(r.out == "heis27: pass\nc9: pass\nc3xheis27: pass\n");
  for (const char* f : {"heis27.json", "c9.json", "c3xheis27.json", "summary.json"}) CHECK(fs::exists(a / f));
  const json summary = json::parse(slurp(a / "summary.json"));
  CHECK(summary["heis27"]["status"] == "pass");
  // thread count does not change the bytes
  CHECK(run("--jobs 3 batch heis27 c9 c3xheis27 --out " + b.string()).code == 0);
  for (const char* f : {"heis27.json", "c9.json", "c3xheis27.json", "summary.json"})
    CHECK(slurp(a / f) == slurp(b / f));
  const Run bad = run("batch g243pow --out " + a.string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("g243pow: fail") != std::string::npos);
  fs::remove_all(a);
  fs::remove_all(b);
}
