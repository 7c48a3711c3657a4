// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pgroup/berkovich.hpp"
#include "pgroup/fullness.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace pgtest;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    pass = false;
    if (problems.size() < 8) problems.push_back(why);
  }
};

int report(int n, Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.note.str() << "\n";
  for (const auto& p : o.problems) std::cout << "    " << p << "\n";
  std::cout.flush();
  return o.pass ? 0 : 1;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

bool admissible(const FiniteGroup& g, const Subgroup& a) {
  const unsigned p = prime_of(g);
  const Subgroup z = center(g);
  return a.order() == p * p && !a.is_subgroup_of(z) && intersect(a, z).order() == p;
}

std::vector<std::pair<std::string, FiniteGroup>> catalog_groups() {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const auto& e : bundled_catalog()) out.emplace_back(e.id, build_entry(e));
  return out;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  std::size_t pairs = 0;
  double slowest = 0;
  std::string slowest_id;
  for (const auto& [id, g] : catalog_groups()) {
    std::vector<std::pair<std::string, Subgroup>> modules;
    const auto add = [&](const std::string& name, const Subgroup& a) {
      if (!is_normal(g, a) || !is_abelian(g, a)) return;
      for (const auto& m : modules)
        if (m.second == a) return;
      modules.emplace_back(name, a);
    };
    add("Z", center(g));
    add("Omega1(Z)", omega(g, center(g), 1));
    const HTower t = compute_h_tower(g);
    add("H1", t.h_i.front());
    add("H", t.h);
    if (prime_of(g) != 2)
      for (const auto& a : elementary_normal_in_zeta2(g))
        if (admissible(g, a)) add("A", a);

    for (const auto& [name, a] : modules) {
      const std::string what = id + " / " + name;
      const auto t0 = Clock::now();
      AutIsoCheck iso;
      try {
        iso = check_aut_derivation_iso(g, a);
      } catch (const AlgebraError& e) {
        o.fail(what + ": " + e.what());
        continue;
      }
      // |Aut_A(G)| by an independent walk over generator images
      std::size_t direct = 0;
      for_each_aut_n(g, a, [&](std::vector<Elem>&) {
        ++direct;
        return true;
      });
      // |Der(G,A)°| by testing x -> x d(x) for bijectivity
      const DerivationRing d = enumerate_derivations(g, a);
      std::size_t invertible = 0;
      std::vector<char> hit(g.order());
      for (const auto& x : d.elements()) {
        std::fill(hit.begin(), hit.end(), 0);
        bool bij = true;
        for (Elem e = 0; e < g.order() && bij; ++e) {
          const Elem v = g.mul(e, x(e));
          bij = !hit[v];
          hit[v] = 1;
        }
        invertible += bij;
      }
      const double s = seconds_since(t0);
      ++pairs;
      if (s > slowest) {
        slowest = s;
        slowest_id = what;
      }
      if (!iso.holds()) o.fail(what + ": isomorphism check failed");
      if (iso.aut_size != direct || direct != invertible || iso.adjoint_size != invertible)
        o.fail(what + ": |Aut_A(G)| = " + std::to_string(direct) + ", |Der(G,A)°| = " + std::to_string(invertible));
      if (g.order() <= 243 && s >= 10.0) o.fail(what + ": " + fmt(s) + " s");
    }
  }
  if (pairs < 10) o.fail("only " + std::to_string(pairs) + " pairs");
  o.note << "Prop 2.4 on " << pairs << " (G, A) pairs, slowest " << slowest_id << " at " << fmt(slowest) << " s";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, FiniteRing>> rings = {
      {"null C_3", null_ring(3)},
      {"null C_27", null_ring(27)},
      {"null C_25", null_ring(25)},
      {"3Z/27Z", multiple_ring(3, 27)},
      {"3Z/81Z", multiple_ring(3, 81)},
      {"5Z/125Z", multiple_ring(5, 125)},
      {"3Z/9Z", multiple_ring(3, 9)},
      {"upper 3x3 over F_3", strictly_upper_triangular_ring(3, 3)},
      {"upper 3x3 over F_5", strictly_upper_triangular_ring(5, 3)},
      {"upper 4x4 over F_2", strictly_upper_triangular_ring(2, 4)},
      {"Z/9Z", zmod_ring(9)},
  };
  for (const auto& [gid, mod] : std::vector<std::pair<const char*, const char*>>{{"heis27", "Z"},
                                                                                  {"m27", "Z"},
                                                                                  {"c9sdc9", "Z"},
                                                                                  {"g243c", "H1"},
                                                                                  {"g243c", "H"},
                                                                                  {"g729a", "H1"},
                                                                                  {"heis27", "A"},
                                                                                  {"c3xm27", "Z"}}) {
    const FiniteGroup g = cat(gid);
    Subgroup a;
    const std::string m = mod;
    if (m == "Z") a = center(g);
    if (m == "H1") a = compute_h_tower(g).h_i.front();
    if (m == "H") a = compute_h_tower(g).h;
    if (m == "A") a = subgroup_closure(g, std::vector<Elem>{pc_gen(3, 1), pc_gen(3, 2)});
    rings.emplace_back(std::string("Der(") + gid + ", " + mod + ")", enumerate_derivations(g, a).ring());
  }

  std::size_t nilpotent = 0, pnil = 0, omega_cases = 0;
  for (const auto& [name, r] : rings) {
    const auto degree = nilpotency_degree(r);
    const AdjointGroupView adj = adjoint_group(r);
    if (degree) {
      ++nilpotent;
      if (!is_radical(r)) o.fail(name + ": nilpotent but not radical");
      const std::size_t cls = nilpotency_class(adj.group);
      if (cls > *degree) o.fail(name + ": class(R°) = " + std::to_string(cls) + " > degree " + std::to_string(*degree));
    }
    const unsigned p = additive_prime(r);
    if (p == 0) continue;
    const std::size_t exp = additive_exponent(r);
    unsigned m = 0;
    for (std::size_t e = 1; e < exp; e *= p) ++m;
    if (!is_right_p_nil(r) && !is_left_p_nil(r)) continue;
    ++pnil;
    if (!degree || *degree > m) o.fail(name + ": p-nil with degree above " + std::to_string(m));
    if (adj.members.count() != r.order() || nilpotency_class(adj.group) > m)
      o.fail(name + ": class(R°) above " + std::to_string(m));
    if (p == 2) continue;
    ++omega_cases;
    for (unsigned n = 1; n <= m; ++n) {
      const ElementSet add = omega_additive(r, n);
      if (omega_set_adjoint(r, n) != add) o.fail(name + ": Omega_{n}(R°) != Omega_n(R) at n = " + std::to_string(n));
      if (omega_adjoint(r, n) != add) o.fail(name + ": Omega_n(R°) is not the element set at n = " + std::to_string(n));
    }
  }
  const double s = seconds_since(t0);
  if (rings.size() < 10) o.fail("fewer than 10 rings");
  if (s >= 5.0) o.fail("took " + fmt(s) + " s");
  o.note << "Lemmas 2.1-2.3 on " << rings.size() << " rings (" << nilpotent << " nilpotent, " << pnil << " p-nil, "
         << omega_cases << " odd p-nil) in " << fmt(s) << " s";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  std::size_t groups = 0;
  double slowest = 0;
  for (const auto& [id, g] : catalog_groups()) {
    if (!structure_profile(g).cgphi_in_phi) continue;
    ++groups;
    const auto t0 = Clock::now();
    const HTower t = compute_h_tower(g);
    const Lemma33Verdict l = check_lemma33(g, t);
    const Theorem31Verdict v = check_theorem31(g, t);
    const double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    if (l.status != Status::pass) o.fail(id + ": Lemma 3.3 " + std::string(to_string(l.status)) + " " + l.reason);
    if (!l.d1_cubed_zero) o.fail(id + ": D1^3 != 0");
    if (!l.d2_in_hom_center) o.fail(id + ": D^2 not inside Hom(G, Z(G))");
    if (v.status != Status::pass) o.fail(id + ": Theorem 3.1 " + std::string(to_string(v.status)) + " " + v.reason);
    if (v.class_aut_h1 > 2) o.fail(id + ": class(Aut_H1(G)) = " + std::to_string(v.class_aut_h1));
    if (v.class_aut_h > v.class_bound) o.fail(id + ": class(Aut_H(G)) above min{r,s}+1");
    for (const auto& lvl : v.levels)
      if (!lvl.equal || lvl.omega != lvl.aut_hi || lvl.omega_set != lvl.aut_hi)
        o.fail(id + ": Omega_" + std::to_string(lvl.i) + "(Aut_H(G)) != Aut_H" + std::to_string(lvl.i) + "(G)");
    if (s >= 30.0) o.fail(id + ": " + fmt(s) + " s");
  }
  if (groups < 3) o.fail("only " + std::to_string(groups) + " groups with C_G(Phi(G)) <= Phi(G)");
  o.note << "Lemma 3.3 and Theorem 3.1 on " << groups << " groups with C_G(Phi(G)) <= Phi(G), slowest " << fmt(slowest)
         << " s";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  std::size_t instances = 0, non_full = 0, exact_count = 0;
  for (const auto& [id, g] : catalog_groups()) {
    const unsigned p = prime_of(g);
    if (p == 2) continue;
    for (const auto& a : elementary_normal_in_zeta2(g)) {
      if (!admissible(g, a)) continue;
      LiftContext ctx;
      try {
        ctx = make_lift_context(g, a);
      } catch (const AlgebraError&) {
        continue;  // not purely non-abelian
      }
      const Theorem43Verdict v = check_theorem43(g, a);
      ++instances;
      // exactness: maps G/Z1 -> A/Z1 induced by derivations vs all of Hom(G/Z1, A/Z1)
      const DerivationRing d = enumerate_derivations(g, a);
      std::set<std::vector<Elem>> induced;
      for (const auto& x : d.elements()) {
        std::vector<Elem> f(ctx.gz.group.order());
        for (Elem e = 0; e < g.order(); ++e) f[ctx.gz.projection(e)] = ctx.gz.projection(x(e));
        induced.insert(f);
      }
      const std::size_t homs = all_homs(ctx.gz.group, cyclic_group(p)).size();
      const bool exact = induced.size() == homs;
      // fullness: Definition 4.1 searched directly
      const Subgroup gp = power_subgroup(g, p);
      bool full = true;
      for (const auto& m : maximal_subgroups(g)) {
        if (m == ctx.c) continue;
        const SubgroupView view = subgroup_view(g, m);
        bool found = false;
        for (const auto& inner : maximal_subgroups(view.group)) {
          const Subgroup k = view.lift(inner);
          const Subgroup kc = intersect(k, ctx.c);
          found = found || (!is_normal(g, k) && is_normal(g, kc) && gp.is_subgroup_of(kc));
        }
        full = full && found;
      }
      const std::string what = id + " A=" + std::to_string(a.elements()[1]);
      if (exact != full) o.fail(what + ": exact " + std::to_string(exact) + ", full " + std::to_string(full));
      if (v.exact != exact || v.full != full || !v.agree) o.fail(what + ": library verdict differs");
      non_full += !full;
      if (exact) {
        ++exact_count;
        const std::size_t hom_gz1 = all_homs(g, cyclic_group(p)).size();
        if (d.size() != hom_gz1 * homs || d.size() != ipow(p, 4))
          o.fail(what + ": |Der(G,A)| = " + std::to_string(d.size()) + ", |Hom(G,Z1)| = " + std::to_string(hom_gz1) +
                 ", |Hom(G/Z1,A/Z1)| = " + std::to_string(homs));
      }
    }
  }
  if (instances < 5) o.fail("only " + std::to_string(instances) + " admissible instances");
  if (non_full == 0) o.fail("no non-full instance");
  o.note << "Theorem 4.3 on " << instances << " admissible (G, A): " << exact_count << " exact and full, " << non_full
         << " neither; |Der(G,A)| = p^4 on every exact instance";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  std::size_t two_gen = 0, powerful = 0, even = 0;
  for (const auto& [id, g] : catalog_groups()) {
    const StructureProfile prof = structure_profile(g);
    const auto maximals = maximal_subgroups(g);
    std::size_t full = 0;
    for (const auto& c : maximals) full += is_full_wrt(g, c).full;
    if (prof.p == 2) {
      // outside the odd-p standing hypothesis of the fullness results
      even += prof.d == 2 && !prof.is_powerful;
      continue;
    }
    if (prof.d == 2 && !prof.is_powerful && g.order() <= 243) {
      ++two_gen;
      if (full != maximals.size())
        o.fail(id + ": full with respect to " + std::to_string(full) + " of " + std::to_string(maximals.size()));
    }
    if (prof.is_powerful) {
      ++powerful;
      if (full != 0) o.fail(id + ": powerful but full with respect to " + std::to_string(full));
    }
  }
  o.note << "Prop 4.2 on " << two_gen << " odd-p 2-generated non-powerful groups; " << powerful
         << " powerful groups full w.r.t. none (" << even << " p = 2 groups outside the odd-p hypothesis)";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  std::size_t groups = 0;
  std::set<BerkovichBranch> branches;
  std::size_t main_ok = 0, main_total = 0;
  double slowest = 0;
  for (const auto& [id, g] : catalog_groups()) {
    const StructureProfile prof = structure_profile(g);
    if (prof.p == 2 || prof.coclass != 2) continue;
    ++groups;
    const auto t0 = Clock::now();
    const Theorem51Verdict v = verify_theorem51(g);
    const double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    if (g.order() <= 243 && s >= 60.0) o.fail(id + ": " + fmt(s) + " s");
    if (!v.witness || !v.branch) {
      o.fail(id + ": no witness (" + v.reason + ")");
      continue;
    }
    branches.insert(*v.branch);
    const auto& sigma = v.witness->sigma;
    // sigma^p = id by composition, and sigma != id
    std::vector<Elem> pow(g.order());
    std::iota(pow.begin(), pow.end(), Elem{0});
    bool is_id = true;
    for (Elem x = 0; x < g.order(); ++x) is_id = is_id && sigma[x] == x;
    for (unsigned k = 0; k < prof.p; ++k)
      for (auto& x : pow) x = sigma[x];
    bool order_p = !is_id;
    for (Elem x = 0; x < g.order(); ++x) order_p = order_p && pow[x] == x;
    if (!order_p) o.fail(id + ": sigma does not have order p");
    // automorphism
    bool hom = true;
    for (Elem x = 0; x < g.order() && hom; ++x)
      for (Elem y = 0; y < g.order() && hom; ++y) hom = sigma[g.mul(x, y)] == g.mul(sigma[x], sigma[y]);
    if (!hom) o.fail(id + ": sigma is not a homomorphism");
    // against every inner automorphism, one per coset of Z(G)
    const Quotient q = quotient(g, center(g));
    std::size_t compared = 0;
    for (Elem c : q.representative) {
      ++compared;
      bool same = true;
      for (Elem x = 0; x < g.order() && same; ++x) same = g.conjugate(x, c) == sigma[x];
      if (same) o.fail(id + ": sigma is conjugation by " + std::to_string(c));
    }
    if (compared != g.order() / center(g).order()) o.fail(id + ": wrong number of inner automorphisms");
    if (*v.branch == BerkovichBranch::coclass2_main) {
      ++main_total;
      const std::size_t p4 = ipow(prof.p, 4), p3 = ipow(prof.p, 3);
      const HTower t = compute_h_tower(g);
      std::size_t aut_h1 = 0;
      for_each_aut_n(g, t.h_i.front(), [&](std::vector<Elem>&) {
        ++aut_h1;
        return true;
      });
      ElementSet inner(g.order());
      for (Elem c = 0; c < g.order(); ++c) {
        bool in = true;
        for (Elem x = 0; x < g.order() && in; ++x) in = t.h_i.front().contains(g.commutator(x, c));
        if (in) inner.insert(c);
      }
      const std::size_t inner_part = inner.count() / center(g).order();
      if (aut_h1 == p4 && inner_part == p3 && v.der_g_h1 == p4 && v.inner_part == p3)
        ++main_ok;
      else
        o.fail(id + ": branch (c) counts |Aut_H1(G)| = " + std::to_string(aut_h1) + " (want " + std::to_string(p4) +
               "), inner part " + std::to_string(inner_part) + " (want " + std::to_string(p3) + ")");
    }
  }
  if (groups < 4) o.fail("only " + std::to_string(groups) + " odd-p coclass-2 groups");
  if (!branches.contains(BerkovichBranch::unequal_d_condition) || !branches.contains(BerkovichBranch::coclass2_main))
    o.fail("branches (a) and (c) are not both covered");
  o.note << "Theorem 5.1 witnesses on " << groups << " odd-p coclass-2 groups (" << branches.size()
         << " branches); branch (c) counts p^4 and p^3 on " << main_ok << " of " << main_total << ", slowest "
         << fmt(slowest) << " s";
  return o;
}

// ---------------------------------------------------------------------------

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    out[entry.path().filename().string()] = ss.str();
  }
  return out;
}

Outcome criterion7() {
  Outcome o;
  const fs::path base = fs::temp_directory_path() / "pgroup_acceptance";
  fs::remove_all(base);
  std::vector<std::map<std::string, std::string>> runs;
  for (const char* name : {"a", "b"}) {
    const fs::path dir = base / name;
    const std::string cmd = std::string(PGROUP_BIN) + " batch --all --out " + dir.string() + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !fs::exists(dir / "summary.json")) {
      o.fail(std::string("batch run ") + name + " did not produce a report directory");
      return o;
    }
    runs.push_back(read_dir(dir));
  }
  if (runs[0].size() != bundled_catalog().size() + 1) o.fail("unexpected number of report files");
  if (runs[0] != runs[1]) {
    for (const auto& [file, bytes] : runs[0])
      if (!runs[1].contains(file) || runs[1][file] != bytes) o.fail(file + " differs");
  }
  fs::remove_all(base);
  o.note << "two batch --all runs, " << runs[0].size() << " files, byte-identical";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  const std::vector<Outcome (*)()> criteria = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += report(static_cast<int>(i + 1), o);
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
