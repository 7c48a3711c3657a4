#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pgroup/report.hpp"
#include "support.hpp"

using namespace pgtest;

TEST_CASE("catalog entries") {
  const auto& entries = bundled_catalog();
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CHECK_MESSAGE(ids.insert(e.id).second, e.id);
    CHECK(is_consistent(e.presentation));
    const FiniteGroup g = build_entry(e);
    CHECK(g.order() == ipow(e.presentation.p, e.presentation.rank));
    CHECK_FALSE(e.expected.empty());
  }
  CHECK(find_catalog_entry("nope") == nullptr);
  const FiniteGroup h = cat("heis27");
  CHECK(h.order() == 27);
  CHECK(nilpotency_class(h) == 2);
  const FiniteGroup c9 = cat("c9");
  CHECK(c9.order() == 9);
  CHECK(abelian_invariants(c9) == std::vector<std::size_t>{9});
}

TEST_CASE("catalog coverage") {
  std::map<std::string, StructureProfile> prof;
  for (const auto& e : bundled_catalog()) prof[e.id] = structure_profile(build_entry(e));
  for (const char* id : {"c3", "c9", "c5", "c25", "c3xc3", "c3xc3xc3", "c5xc5", "heis27", "m27", "c3xheis27",
                         "heis125", "m125"})
    CHECK_MESSAGE(prof.contains(id), id);
  CHECK(prof["m27"].exponent == 9);
  // order 81, class 2, coclass 2
  std::size_t order81 = 0;
  for (const auto& [id, p] : prof) order81 += p.p == 3 && p.n == 4 && p.nilpotency_class == 2;
  CHECK(order81 >= 5);
  // order 3^5, coclass 2, 2-generated with cyclic centre
  std::size_t order243 = 0;
  for (const auto& e : bundled_catalog()) {
    const auto& p = prof[e.id];
    if (p.p != 3 || p.n != 5 || p.coclass != 2 || p.d != 2) continue;
    const FiniteGroup g = build_entry(e);
    order243 += abelian_invariants(g, center(g)).size() == 1;
  }
  CHECK(order243 >= 1);
}

TEST_CASE("size cap") {
  BuildOptions opts;
  opts.max_order = 243;
  CHECK_THROWS_AS(build_entry(*find_catalog_entry("g729a"), opts), AlgebraError);
  CHECK(build_entry(*find_catalog_entry("g243a"), opts).order() == 243);
}

TEST_CASE("group json") {
  for (const auto& e : bundled_catalog()) {
    const json j = pc_to_json(e.presentation);
    CHECK(j["format"] == "pc");
    const PcPresentation back = pc_from_json(j);
    CHECK(back.p == e.presentation.p);
    CHECK(back.rank == e.presentation.rank);
    CHECK(from_pc_presentation(back) == build_entry(e));
  }
  const FiniteGroup h = cat("heis27");
  const json c = cayley_to_json(h);
  CHECK(c["format"] == "cayley");
  CHECK(c["order"] == 27);
  CHECK(group_from_json(c) == h);
  // 1-based generator keys
  const json pc = json::parse(R"({"format":"pc","p":3,"rank":3,"commutators":{"2,1":[0,0,1]}})");
  CHECK(group_from_json(pc) == h);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"format":"perm"})")), AlgebraError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"format":"pc","p":3,"rank":2,"commutators":{"1,2":[0,1]}})")),
                  AlgebraError);
}

TEST_CASE("module specs") {
  const FiniteGroup g = cat("c3xheis27");
  CHECK(parse_module_spec(g, "center") == center(g));
  CHECK(parse_module_spec(g, "omega1-center") == omega(g, center(g), 1));
  CHECK(parse_module_spec(g, "3, 9").order() == 9);
  CHECK(parse_module_spec(g, "3 9") == parse_module_spec(g, "3,9"));
  CHECK_THROWS_AS(parse_module_spec(g, "frob"), AlgebraError);
  CHECK_THROWS_AS(parse_module_spec(g, "100000"), AlgebraError);
}

TEST_CASE("run_checks") {
  const FiniteGroup h = cat("heis27");
  SUBCASE("empty selection") {
    const Report r = run_checks("heis27", h, {});
    CHECK(r.checks.empty());
    CHECK(r.profile["class"] == 2);
    CHECK_FALSE(r.failed());
  }
  SUBCASE("unknown check") { CHECK_THROWS_AS(run_checks("heis27", h, {"nonsense"}), AlgebraError); }
  SUBCASE("all checks on heis27") {
    const Report r = run_checks("heis27", h, all_checks());
    for (const auto& name : known_checks()) CHECK(r.checks.contains(name));
    CHECK(r.checks.size() == known_checks().size());
    CHECK(r.checks["fullness"]["status"] == "pass");
    CHECK(r.checks["theorem43"]["status"] == "pass");
    CHECK(r.checks["berkovich"]["status"] == "skipped");
    CHECK(r.checks["berkovich"]["reason"] == "refused: coclass 1");
    CHECK(r.findings.empty());
    const json j = r.to_json();
    for (const char* k : {"version", "group", "profile", "checks", "findings", "timings"}) CHECK(j.contains(k));
    CHECK(j["timings"].is_null());
    for (const auto& [name, sec] : r.checks.items()) {
      const std::string st = sec["status"];
      CHECK((st == "pass" || st == "fail" || st == "skipped" || st == "inconclusive"));
      if (st == "skipped") CHECK(sec.contains("reason"));
    }
  }
  SUBCASE("coclass 2 group of order 3^5 has a witness") {
    const Report r = run_checks("g243a", cat("g243a"), {"berkovich"});
    CHECK(r.checks["berkovich"]["status"] == "pass");
    CHECK(r.checks["berkovich"]["witness"]["order"] == 3);
    CHECK(r.checks["berkovich"]["witness"]["sigma"].size() == 243);
  }
  SUBCASE("timings on request") {
    CheckOptions opts;
    opts.timings = true;
    const Report r = run_checks("heis27", h, {"fullness", "lemma32"}, opts);
    CHECK(r.timings.is_object());
    CHECK(r.timings.contains("fullness"));
  }
  SUBCASE("module override") {
    CheckOptions opts;
    opts.module = center(h);
    const Report r = run_checks("heis27", h, {"derivation_ring"}, opts);
    const auto& inst = r.checks["derivation_ring"]["instances"];
    REQUIRE(inst.size() == 1);
    CHECK(inst[0]["der_size"] == 9);
    CHECK(inst[0]["aut_size"] == 9);
  }
  SUBCASE("fullness for a single maximal subgroup") {
    CheckOptions opts;
    opts.wrt = 2;
    const Report r = run_checks("heis27", h, {"fullness"}, opts);
    REQUIRE(r.checks["fullness"]["maximals"].size() == 1);
    CHECK(r.checks["fullness"]["maximals"][0]["index"] == 2);
  }
}

TEST_CASE("findings carry replay data") {
  const Report r = run_checks("g243pow", cat("g243pow"), all_checks());
  CHECK(r.failed());
  REQUIRE_FALSE(r.findings.empty());
  for (const auto& f : r.findings) {
    CHECK(f["group"] == "g243pow");
    CHECK(f.contains("check"));
    CHECK(f.contains("message"));
    CHECK(f["data"].is_object());
  }
}

TEST_CASE("reports are deterministic") {
  for (const char* id : {"heis27", "c3xheis27", "g243c", "m81"}) {
    const FiniteGroup g = cat(id);
    const std::string a = run_checks(id, g, all_checks()).dump();
    const std::string b = run_checks(id, cat(id), all_checks()).dump();
    CHECK(a == b);
    CHECK(a.back() == '\n');
    CHECK(json::parse(a).dump(2) + "\n" == a);
  }
}

TEST_CASE("json files") {
  const auto dir = std::filesystem::temp_directory_path() / "pgroup_test_catalog";
  std::filesystem::create_directories(dir);
  const auto path = dir / "h.json";
  std::ofstream(path) << cayley_to_json(cat("heis27")).dump();
  CHECK(group_from_json(read_json_file(path)) == cat("heis27"));
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK_THROWS_AS(read_json_file(dir / "bad.json"), AlgebraError);
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), AlgebraError);
  std::filesystem::remove_all(dir);
}
