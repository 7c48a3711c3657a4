// pgroup: command-line front end for the p-group checks.
//
// Exit status: 0 when every selected check passes (refusals and skips
// included), 1 when a check fails or a finding is recorded, 2 on usage or
// input errors.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pgroup/catalog.hpp"
#include "pgroup/report.hpp"

using namespace pgroup;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string id;
  FiniteGroup group;
};

Loaded load_group(const std::string& arg, const BuildOptions& opts) {
  if (const CatalogEntry* e = find_catalog_entry(arg)) return {e->id, build_entry(*e, opts)};
  if (fs::is_regular_file(arg)) return {fs::path(arg).stem().string(), group_from_json(read_json_file(arg), opts)};
  throw UsageError("'" + arg + "' is neither a catalog id nor a readable file");
}

std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> out;
  if (list.empty()) return out;
  if (list == "all") return all_checks();
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ','))
    if (!name.empty()) out.insert(name);
  return out;
}

void print_human(const Report& r, std::ostream& os) {
  os << "group " << r.group << "\n";
  for (const auto& [k, v] : r.profile.items()) os << "  " << k << ": " << v.dump() << "\n";
  for (const auto& [name, sec] : r.checks.items()) {
    os << name << ": " << sec.value("status", "?");
    if (sec.contains("reason")) os << " (" << sec["reason"].get<std::string>() << ")";
    os << "\n";
    if (name == "berkovich" && sec.contains("branch")) {
      os << "  branch: " << sec["branch"].get<std::string>() << "\n";
      if (!sec["witness"].is_null())
        os << "  witness: order " << sec["witness"]["order"] << ", non-inner against "
           << sec["witness"]["certificate_size"] << " inner automorphisms\n";
      if (sec.contains("counts")) os << "  counts: " << sec["counts"].dump() << "\n";
    }
    if (name == "fullness") {
      for (const auto& c : sec["maximals"])
        os << "  maximal " << c["index"] << ": " << (c["full"].get<bool>() ? "full" : "not full")
           << (c["vacuous"].get<bool>() ? " (vacuous)" : "") << "\n";
    }
    if ((name == "theorem43" || name == "derivation_ring" || name == "corollary47") && sec.contains("instances")) {
      for (const auto& inst : sec["instances"]) {
        json brief = inst;
        brief.erase("a");
        brief.erase("non_liftable");
        os << "  " << brief.dump() << "\n";
      }
    }
  }
  for (const auto& f : r.findings)
    os << "FINDING [" << f["check"].get<std::string>() << "] " << f["message"].get<std::string>() << "\n";
}

int emit(const Report& r, bool as_json) {
  if (as_json)
    std::cout << r.dump();
  else
    print_human(r, std::cout);
  return r.failed() ? 1 : 0;
}

struct BatchResult {
  std::string id;
  std::string status;
  std::size_t findings = 0;
};

int run_batch(const std::vector<const CatalogEntry*>& entries, const fs::path& out, unsigned jobs,
              const BuildOptions& opts, bool timings) {
  fs::create_directories(out);
  std::vector<BatchResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const CatalogEntry& e = *entries[i];
      BatchResult& res = results[i];
      res.id = e.id;
      try {
        const FiniteGroup g = build_entry(e, opts);
        CheckOptions co;
        co.timings = timings;
        const Report r = run_checks(e.id, g, all_checks(), co);
        std::ofstream(out / (e.id + ".json"), std::ios::binary) << r.dump();
        res.status = r.failed() ? "fail" : "pass";
        res.findings = r.findings.size();
      } catch (const AlgebraError& ex) {
        res.status = ex.code() == Errc::too_large ? "skipped" : "error";
        std::lock_guard<std::mutex> lock(err_mutex);
        std::cerr << e.id << ": " << ex.what() << "\n";
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1U, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  json summary = json::object();
  int code = 0;
  for (const auto& r : results) {
    summary[r.id] = {{"status", r.status}, {"findings", r.findings}};
    std::cout << r.id << ": " << r.status;
    if (r.findings) std::cout << " (" << r.findings << " findings)";
    std::cout << "\n";
    if (r.status == "fail" || r.status == "error") code = 1;
  }
  std::ofstream(out / "summary.json", std::ios::binary) << summary.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivation rings, fullness and non-inner automorphisms of finite p-groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t max_order = kDefaultMaxOrder;
  unsigned jobs = 1;
  bool as_json = false;
  app.add_option("--max-order", max_order, "refuse groups above this order")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for batch")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "print the JSON report");

  std::string group_arg, module_spec, checks_list;
  std::optional<std::size_t> wrt;
  bool timings = false;

  auto* analyze = app.add_subcommand("analyze", "structure profile, optionally with checks");
  analyze->add_option("group", group_arg, "catalog id or group file")->required();
  analyze->add_option("--checks", checks_list, "comma separated checks, or 'all'");
  analyze->add_flag("--timings", timings, "record per-check seconds");

  auto* derivations = app.add_subcommand("derivations", "Der(G,A), Aut_A(G) and the isomorphism between them");
  derivations->add_option("group", group_arg, "catalog id or group file")->required();
  derivations->add_option("--module", module_spec, "center, omega1-center or element indices")->required();

  auto* fullness = app.add_subcommand("fullness", "fullness with respect to maximal subgroups");
  fullness->add_option("group", group_arg, "catalog id or group file")->required();
  fullness->add_option("--wrt", wrt, "index of the maximal subgroup");

  auto* exactness = app.add_subcommand("exactness", "exactness of 0 -> Hom(G,Z1) -> Der(G,A) -> Hom(G/Z1,A/Z1)");
  exactness->add_option("group", group_arg, "catalog id or group file")->required();
  exactness->add_option("--module", module_spec, "center, omega1-center or element indices");

  auto* berkovich = app.add_subcommand("berkovich", "non-inner automorphism of order p for coclass 2");
  berkovich->add_option("group", group_arg, "catalog id or group file")->required();

  bool batch_all = false;
  std::string out_dir = "reports";
  std::vector<std::string> batch_ids;
  auto* batch = app.add_subcommand("batch", "all checks on catalog groups, one report file each");
  batch->add_flag("--all", batch_all, "every catalog entry");
  batch->add_option("ids", batch_ids, "catalog ids");
  batch->add_option("--out", out_dir, "output directory")->capture_default_str();
  batch->add_flag("--timings", timings, "record per-check seconds");

  auto* catalog = app.add_subcommand("catalog", "bundled catalog");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  BuildOptions opts;
  opts.max_order = max_order;

  try {
    if (catalog_list->parsed()) {
      json list = json::array();
      for (const auto& e : bundled_catalog()) {
        const std::size_t order = [&] {
          std::size_t o = 1;
          for (unsigned i = 0; i < e.presentation.rank; ++i) o *= e.presentation.p;
          return o;
        }();
        if (as_json)
          list.push_back({{"id", e.id}, {"order", order}, {"description", e.description}});
        else
          std::cout << e.id << "\t" << order << "\t" << e.description << "\n";
      }
      if (as_json) std::cout << list.dump(2) << "\n";
      return 0;
    }
    if (batch->parsed()) {
      std::vector<const CatalogEntry*> entries;
      if (batch_all) {
        for (const auto& e : bundled_catalog()) entries.push_back(&e);
      } else {
        for (const auto& id : batch_ids) {
          const CatalogEntry* e = find_catalog_entry(id);
          if (!e) throw UsageError("unknown catalog id '" + id + "'");
          entries.push_back(e);
        }
      }
      if (entries.empty()) throw UsageError("batch needs --all or catalog ids");
      return run_batch(entries, out_dir, jobs, opts, timings);
    }

    Loaded loaded;
    try {
      loaded = load_group(group_arg, opts);
    } catch (const AlgebraError& e) {
      throw UsageError(e.what());
    }
    const FiniteGroup& g = loaded.group;
    CheckOptions co;
    co.timings = timings;
    std::set<std::string> selection;
    const auto module = [&] {
      try {
        return parse_module_spec(g, module_spec);
      } catch (const AlgebraError& e) {
        throw UsageError(e.what());
      }
    };
    if (analyze->parsed()) {
      selection = parse_checks(checks_list);
    } else if (derivations->parsed()) {
      selection = {"derivation_ring"};
      co.module = module();
    } else if (fullness->parsed()) {
      selection = {"fullness"};
      co.wrt = wrt;
    } else if (exactness->parsed()) {
      selection = {"theorem43"};
      if (!module_spec.empty()) co.module = module();
    } else if (berkovich->parsed()) {
      selection = {"berkovich"};
    }
    Report r;
    try {
      r = run_checks(loaded.id, g, selection, co);
    } catch (const AlgebraError& e) {
      if (e.code() == Errc::unknown_check || e.code() == Errc::invalid_input) throw UsageError(e.what());
      throw;
    }
    if (berkovich->parsed() && !as_json) {
      const auto& sec = r.checks["berkovich"];
      if (sec["status"] == "skipped") {
        std::cout << sec["reason"].get<std::string>() << "\n";
        return r.failed() ? 1 : 0;
      }
    }
    return emit(r, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
