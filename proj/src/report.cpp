#include "pgroup/report.hpp"

#include <chrono>
#include <functional>

#include "pgroup/berkovich.hpp"
#include "pgroup/derivation.hpp"
#include "pgroup/fullness.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"fullness", "theorem43", "corollary47", "derivation_ring",
                                              "lemma32",  "lemma33",   "theorem31",   "berkovich"};
  return names;
}

std::set<std::string> all_checks() {
  const auto& k = known_checks();
  return {k.begin(), k.end()};
}

std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& s) {
  const SubgroupView v = subgroup_view(g, s);
  std::vector<Elem> out;
  for (Elem x : minimal_generating_set(v.group)) out.push_back(v.to_parent[x]);
  return out;
}

namespace {

json status_json(Status s, const std::string& reason = {}) {
  json j{{"status", std::string(to_string(s))}};
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

class Builder {
 public:
  Builder(const std::string& id, const FiniteGroup& g, const CheckOptions& opts, Report& r)
      : id_(id), g_(g), opts_(opts), r_(r), prof_(structure_profile(g)) {}

  const StructureProfile& profile() const { return prof_; }

  json fullness();
  json theorem43();
  json corollary47();
  json derivation_ring();
  json lemma32();
  json lemma33();
  json theorem31();
  json berkovich();

 private:
  void add_finding(const Finding& f) {
    json data = json::object();
    for (const auto& [name, values] : f.data) {
      std::string key = name;
      while (data.contains(key)) key += "'";
      data[key] = values;
    }
    r_.findings.push_back({{"group", id_}, {"check", f.check}, {"message", f.message}, {"data", data}});
  }
  void add_findings(const std::vector<Finding>& fs) {
    for (const auto& f : fs) add_finding(f);
  }
  const HTower& tower() {
    if (!tower_) tower_ = compute_h_tower(g_);
    return *tower_;
  }

  std::string id_;
  const FiniteGroup& g_;
  const CheckOptions& opts_;
  Report& r_;
  StructureProfile prof_;
  std::optional<HTower> tower_;
};

json Builder::fullness() {
  const auto maximals = maximal_subgroups(g_);
  std::vector<std::size_t> chosen;
  if (opts_.wrt) {
    if (*opts_.wrt >= maximals.size())
      throw AlgebraError(Errc::invalid_input, "maximal subgroup index " + std::to_string(*opts_.wrt) +
                                                  " out of range (G has " + std::to_string(maximals.size()) + ")");
    chosen.push_back(*opts_.wrt);
  } else {
    for (std::size_t i = 0; i < maximals.size(); ++i) chosen.push_back(i);
  }
  json out = status_json(Status::pass);
  json per_c = json::array();
  std::size_t full_count = 0;
  for (std::size_t i : chosen) {
    const FullnessWitness w = is_full_wrt(g_, maximals[i]);
    json records = json::array();
    for (const auto& rec : w.records) {
      records.push_back({{"m", subgroup_generators(g_, rec.m)},
                         {"k", rec.k ? json(subgroup_generators(g_, *rec.k)) : json(nullptr)},
                         {"candidates", rec.candidates},
                         {"checks",
                          {{"index_p2", rec.checks.index_p2},
                           {"non_normal", rec.checks.non_normal},
                           {"KcapC_normal", rec.checks.KcapC_normal},
                           {"contains_Gp", rec.checks.contains_Gp}}}});
    }
    full_count += w.full;
    per_c.push_back({{"index", i},
                     {"c", subgroup_generators(g_, maximals[i])},
                     {"full", w.full},
                     {"vacuous", w.records.empty()},
                     {"failing", w.failing ? json(*w.failing) : json(nullptr)},
                     {"records", records}});
  }
  out["maximals"] = per_c;
  out["full_count"] = full_count;
  if (opts_.wrt) return out;

  const Prop42Verdict v = check_prop42(g_);
  out["prop42"] = {{"in_hypothesis", v.in_hypothesis},
                   {"maximal_count", v.maximal_count},
                   {"full_count", v.full_count},
                   {"quotient_criterion", v.quotient_criterion},
                   {"holds", v.holds()}};
  bool ok = v.holds();
  if (!v.holds()) {
    add_finding({"fullness",
                 v.quotient_criterion ? "2-generated non-powerful group not full with respect to every maximal subgroup"
                                      : "fullness of G and of G/gamma_3(G)G^p disagree",
                 {}});
  }
  // a group full with respect to some maximal subgroup is not powerful
  if (prof_.is_powerful && full_count > 0) {
    ok = false;
    add_finding({"fullness", "powerful group is full with respect to a maximal subgroup", {}});
  }
  if (!ok) out["status"] = std::string(to_string(Status::fail));
  return out;
}

json Builder::theorem43() {
  std::vector<Subgroup> modules;
  if (opts_.module) {
    modules.push_back(*opts_.module);
  } else if (!g_.is_abelian()) {
    const Subgroup z = center(g_);
    const std::size_t p = prof_.p;
    for (const auto& a : elementary_normal_in_zeta2(g_))
      if (a.order() == p * p && !a.is_subgroup_of(z) && intersect(a, z).order() == p) modules.push_back(a);
  }
  json instances = json::array();
  std::string first_reason = modules.empty() ? "no elementary abelian rank 2 normal non-central module" : "";
  std::size_t ran = 0;
  bool ok = true;
  for (const auto& a : modules) {
    json inst{{"a", a.elements()}};
    try {
      const Theorem43Verdict v = check_theorem43(g_, a);
      ++ran;
      inst.update(status_json(v.findings.empty() ? Status::pass : Status::fail));
      inst["exact"] = v.exact;
      inst["exact_by_count"] = v.exact_by_count;
      inst["full"] = v.full;
      inst["agree"] = v.agree;
      inst["counts"] = {{"der", v.der_size}, {"hom_GZ1", v.hom_g_z1}, {"hom_quot", v.hom_quot}, {"image", v.image_size}};
      inst["lifts_checked"] = v.lifts_checked;
      inst["lifts_ok"] = v.lifts_ok;
      inst["non_liftable"] = v.non_liftable ? json(*v.non_liftable) : json(nullptr);
      ok = ok && v.findings.empty();
      add_findings(v.findings);
    } catch (const AlgebraError& e) {
      if (e.code() != Errc::hypothesis_failed) throw;
      inst.update(status_json(Status::skipped, e.what()));
      if (first_reason.empty()) first_reason = e.what();
    }
    instances.push_back(inst);
  }
  json out = ran == 0 ? status_json(Status::skipped, first_reason) : status_json(ok ? Status::pass : Status::fail);
  out["instances"] = instances;
  return out;
}

json Builder::corollary47() {
  if (prof_.p == 2) return status_json(Status::skipped, "p must be odd");
  const Corollary47Verdict v = check_corollary47(g_);
  if (!v.in_hypothesis) return status_json(Status::skipped, v.reason);
  json out = status_json(v.holds() ? Status::pass : Status::fail);
  json instances = json::array();
  for (const auto& i : v.instances)
    instances.push_back({{"a", i.a.elements()},
                         {"rank", i.rank},
                         {"central", i.central},
                         {"homs", i.homs},
                         {"lifted", i.lifted},
                         {"image_size", i.image_size},
                         {"exact", i.exact}});
  out["instances"] = instances;
  add_findings(v.findings);
  return out;
}

json Builder::derivation_ring() {
  std::vector<std::pair<std::string, Subgroup>> modules;
  if (opts_.module) {
    modules.emplace_back("given", *opts_.module);
  } else {
    const HTower& t = tower();
    modules.emplace_back("center", t.zeta1);
    if (t.h_i.front() != t.zeta1) modules.emplace_back("H1", t.h_i.front());
    if (t.h != t.h_i.front() && t.h != t.zeta1) modules.emplace_back("H", t.h);
  }
  json instances = json::array();
  std::size_t ran = 0;
  bool ok = true;
  std::string first_reason;
  for (const auto& [name, a] : modules) {
    json inst{{"module", name}, {"a", a.elements()}};
    try {
      const DerivationRing d = enumerate_derivations(g_, a);
      const FiniteRing r = d.ring();
      const AutIsoCheck iso = check_aut_derivation_iso(g_, a);
      const AdjointGroupView adj = adjoint_group(r);
      const auto degree = nilpotency_degree(r);
      inst.update(status_json(iso.holds() ? Status::pass : Status::fail));
      inst["der_size"] = d.size();
      inst["aut_size"] = iso.aut_size;
      inst["adjoint_size"] = iso.adjoint_size;
      inst["nilpotency_degree"] = degree ? json(*degree) : json(nullptr);
      inst["adjoint_class"] = adj.group.order() == r.order() ? json(nilpotency_class(adj.group)) : json(nullptr);
      inst["prop24"] = iso.holds();
      ++ran;
      if (!iso.holds()) {
        ok = false;
        add_finding({"derivation_ring", "Aut_A(G) -> Der(G,A)° is not an isomorphism", {{"A", a.elements()}}});
      }
    } catch (const AlgebraError& e) {
      if (e.code() != Errc::not_abelian && e.code() != Errc::not_normal && e.code() != Errc::too_large) throw;
      inst.update(status_json(Status::skipped, e.what()));
      if (first_reason.empty()) first_reason = e.what();
    }
    instances.push_back(inst);
  }
  json out = ran == 0 ? status_json(Status::skipped, first_reason) : status_json(ok ? Status::pass : Status::fail);
  out["instances"] = instances;
  return out;
}

json Builder::lemma32() {
  const HTower& t = tower();
  const Lemma32Verdict v = check_lemma32(g_, t);
  json out = status_json(v.holds() ? Status::pass : Status::fail);
  out["h"] = subgroup_generators(g_, t.h);
  out["h_order"] = t.h.order();
  out["h_in_cgphi"] = v.h_in_cgphi;
  out["cgphi_in_phi"] = v.cgphi_in_phi;
  out["h_abelian"] = v.h_abelian;
  if (!v.holds()) add_finding({"lemma32", "H is not inside C_G(Phi(G)) or not abelian", {{"H", t.h.elements()}}});
  return out;
}

json Builder::lemma33() {
  const HTower& t = tower();
  const Lemma33Verdict v = check_lemma33(g_, t);
  json out = status_json(v.status, v.reason);
  if (v.status == Status::skipped) return out;
  out["d_size"] = v.d_size;
  out["d1_size"] = v.d1_size;
  out["d2_in_hom_center"] = v.d2_in_hom_center;
  out["d1_cubed_zero"] = v.d1_cubed_zero;
  out["d1_is_ideal"] = v.d1_is_ideal;
  out["quotient_right_p_nil"] = v.quotient_right_p_nil;
  out["quotient_exponent"] = v.quotient_exponent;
  out["exponent_bound"] = v.exponent_bound;
  if (v.status == Status::fail)
    add_finding({"lemma33", "a conclusion of the D, D1 lemma fails", {{"H", t.h.elements()}, {"H1", t.h_i.front().elements()}}});
  return out;
}

json Builder::theorem31() {
  const HTower& t = tower();
  const Theorem31Verdict v = check_theorem31(g_, t);
  json out = status_json(v.status, v.reason);
  if (v.status == Status::skipped) return out;
  out["class_aut_h"] = v.class_aut_h;
  out["class_bound"] = v.class_bound;
  out["degree_d"] = v.degree_d;
  out["class_aut_h1"] = v.class_aut_h1;
  out["aut_h_order"] = v.aut_h_order;
  out["aut_h1_order"] = v.aut_h1_order;
  json levels = json::array();
  for (const auto& lv : v.levels)
    levels.push_back({{"i", lv.i},
                      {"omega", lv.omega},
                      {"omega_set", lv.omega_set},
                      {"aut_hi", lv.aut_hi},
                      {"equal", lv.equal}});
  out["levels"] = levels;
  if (v.status == Status::fail)
    add_finding({"theorem31", "a class bound or the Omega equality fails for Aut_H(G)", {{"H", t.h.elements()}}});
  return out;
}

json Builder::berkovich() {
  const Theorem51Verdict v = verify_theorem51(g_);
  json out = status_json(v.status, v.reason);
  if (!v.branch) return out;
  out["branch"] = std::string(to_string(*v.branch));
  out["d_condition"] = {{"dG", v.d_g}, {"dZ", v.d_z}, {"product", v.d_g * v.d_z}, {"dH_over_Z1", v.d_h_over_z}};
  if (v.witness)
    out["witness"] = {{"sigma", v.witness->sigma},
                      {"order", v.witness->order},
                      {"certificate_size", v.witness->certificate_size}};
  else
    out["witness"] = nullptr;
  if (*v.branch == BerkovichBranch::coclass2_main) {
    out["counts"] = {{"derG_H1", v.der_g_h1},
                     {"autH1_direct", v.aut_h1_direct},
                     {"hom_GZ1", v.hom_g_z1},
                     {"hom_quot", v.hom_quot},
                     {"inner_part", v.inner_part}};
    out["exact"] = v.exact;
    out["full_all_maximals"] = v.full_all_maximals;
    out["inner_part_is_zeta3"] = v.inner_part_is_zeta3;
    out["all_order_p"] = v.all_order_p;
  }
  add_findings(v.findings);
  return out;
}

}  // namespace

bool Report::failed() const {
  if (!findings.empty()) return true;
  for (const auto& [name, section] : checks.items())
    if (section.value("status", "") == "fail") return true;
  return false;
}

json Report::to_json() const {
  return {{"version", kReportVersion},
          {"group", group},
          {"profile", profile},
          {"checks", checks},
          {"findings", findings},
          {"timings", timings}};
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

Report run_checks(const std::string& id, const FiniteGroup& g, const std::set<std::string>& selection,
                  const CheckOptions& opts) {
  const std::set<std::string> known = all_checks();
  for (const auto& s : selection)
    if (!known.count(s)) throw AlgebraError(Errc::unknown_check, s);
  Report r;
  r.group = id;
  Builder b(id, g, opts, r);
  r.profile = profile_to_json(b.profile());
  if (opts.timings) r.timings = json::object();
  const std::vector<std::pair<std::string, std::function<json()>>> runners{
      {"fullness", [&] { return b.fullness(); }},
      {"theorem43", [&] { return b.theorem43(); }},
      {"corollary47", [&] { return b.corollary47(); }},
      {"derivation_ring", [&] { return b.derivation_ring(); }},
      {"lemma32", [&] { return b.lemma32(); }},
      {"lemma33", [&] { return b.lemma33(); }},
      {"theorem31", [&] { return b.theorem31(); }},
      {"berkovich", [&] { return b.berkovich(); }},
  };
  for (const auto& [name, run] : runners) {
    if (!selection.count(name)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    r.checks[name] = run();
    if (opts.timings)
      r.timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

}  // namespace pgroup
