#include "pgroup/fullness.hpp"

#include <algorithm>
#include <string>

#include "pgroup/structure.hpp"

namespace pgroup {

namespace {

Elem lowest_outside(const FiniteGroup& g, const Subgroup& in, const Subgroup& out) {
  for (Elem x = 0; x < g.order(); ++x)
    if (in.contains(x) && !out.contains(x)) return x;
  return kNoElem;
}

std::vector<Elem> as_list(const Subgroup& s) { return s.elements(); }

unsigned inverse_mod(unsigned a, unsigned p) {
  for (unsigned b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Definition of fullness

FullnessWitness is_full_wrt(const FiniteGroup& g, const Subgroup& c) {
  const auto maximals = maximal_subgroups(g);
  if (std::find(maximals.begin(), maximals.end(), c) == maximals.end())
    throw AlgebraError(Errc::not_maximal, "C is not a maximal subgroup");
  const unsigned p = prime_of(g);
  const Subgroup gp = power_subgroup(g, p);
  FullnessWitness w;
  w.c = c;
  w.full = maximals.size() > 1;
  for (const auto& m : maximals) {
    if (m == c) continue;
    FullnessRecord rec;
    rec.m = m;
    const SubgroupView view = subgroup_view(g, m);
    std::vector<Subgroup> candidates;
    for (const auto& inner : maximal_subgroups(view.group)) candidates.push_back(view.lift(inner));
    std::sort(candidates.begin(), candidates.end());
    rec.candidates = candidates.size();
    for (const auto& k : candidates) {
      FullnessChecks ch;
      ch.index_p2 = k.order() * p * p == g.order();
      ch.non_normal = !is_normal(g, k);
      const Subgroup kc = intersect(k, c);
      ch.KcapC_normal = is_normal(g, kc);
      ch.contains_Gp = gp.is_subgroup_of(kc);
      if (ch.all()) {
        rec.k = k;
        rec.checks = ch;
        break;
      }
    }
    if (!rec.k && w.full) {
      w.full = false;
      w.failing = w.records.size();
    }
    w.records.push_back(std::move(rec));
  }
  return w;
}

Prop42Verdict check_prop42(const FiniteGroup& g) {
  Prop42Verdict v;
  v.in_hypothesis = prime_of(g) != 2 && generator_rank(g) == 2 && !is_powerful(g);
  const unsigned p = prime_of(g);
  const auto lcs = lower_central_series(g);
  const Subgroup gamma3 = lcs.size() > 2 ? lcs[2] : Subgroup::trivial(g);
  const Quotient q = quotient(g, join(g, gamma3, power_subgroup(g, p)));
  const auto maximals = maximal_subgroups(g);
  v.maximal_count = maximals.size();
  v.quotient_criterion = true;
  for (const auto& c : maximals) {
    const bool full = is_full_wrt(g, c).full;
    v.full_count += full;
    if (is_full_wrt(q.group, q.image(c)).full != full) v.quotient_criterion = false;
  }
  return v;
}

// ---------------------------------------------------------------------------
// The lemmas behind the lift

AlphaMap alpha_hom(const FiniteGroup& g, const Subgroup& k, const Subgroup& c, Elem y, Elem x) {
  const unsigned p = prime_of(g);
  AlphaMap a;
  a.k = k;
  a.value.assign(g.order(), 0);
  const auto kel = k.elements();
  for (Elem kk : kel) {
    const Elem cm = g.commutator(kk, y);
    bool found = false;
    for (unsigned e = 0; e < p && !found; ++e)
      if (k.contains(g.mul(g.inv(g.power(x, e)), cm))) {
        a.value[kk] = e;
        found = true;
      }
    if (!found)
      throw AlgebraError(Errc::decomposition_failed,
                         "[k,y] outside <x>K for k = " + std::to_string(kk) + ", y = " + std::to_string(y));
  }
  a.is_hom = true;
  for (Elem k1 : kel)
    for (Elem k2 : kel)
      if (a.value[g.mul(k1, k2)] != (a.value[k1] + a.value[k2]) % p) a.is_hom = false;
  ElementSet ker(g.order());
  for (Elem kk : kel) {
    if (a.value[kk] == 0) ker.insert(kk);
    a.surjective = a.surjective || a.value[kk] != 0;
  }
  a.kernel_is_KcapC = ker == intersect(k, c).members();
  return a;
}

Elem scale_z(const FiniteGroup& g, const AlphaMap& alpha, const Subgroup& z1, Elem u) {
  const unsigned p = prime_of(g);
  const auto kel = alpha.k.elements();
  Elem z = g.identity();
  for (Elem kk : kel)
    if (alpha.value[kk] != 0) {
      z = g.power(g.commutator(kk, u), inverse_mod(alpha.value[kk], p));
      break;
    }
  if (!z1.contains(z)) throw AlgebraError(Errc::no_solution, "[k,u] does not lie in Z1");
  for (Elem kk : kel)
    if (g.commutator(kk, u) != g.power(z, alpha.value[kk]))
      throw AlgebraError(Errc::no_solution, "no z with [k,u] = z^alpha(k); fails at k = " + std::to_string(kk));
  return z;
}

Derivation lemma46_derivation(const FiniteGroup& g, const Subgroup& k, Elem x, Elem y, Elem u, Elem z) {
  const unsigned p = prime_of(g);
  Derivation d;
  d.values.assign(g.order(), kNoElem);
  const auto kel = k.elements();
  for (unsigned i = 0; i < 2 * p; ++i)
    for (unsigned j = 0; j < 2 * p; ++j) {
      const Elem tail = g.mul(g.power(x, j), g.power(y, i));
      const Elem v = g.mul(g.power(z, j), g.power(u, i));
      for (Elem kk : kel) {
        const Elem e = g.mul(kk, tail);
        if (d.values[e] == kNoElem)
          d.values[e] = v;
        else if (d.values[e] != v)
          throw AlgebraError(Errc::not_well_defined, "two values at element " + std::to_string(e));
      }
    }
  for (Elem e = 0; e < g.order(); ++e)
    if (d.values[e] == kNoElem)
      throw AlgebraError(Errc::not_well_defined, "element " + std::to_string(e) + " is not of the form k x^j y^i");
  if (auto bad = cocycle_violation(g, d.values))
    throw AlgebraError(Errc::not_cocycle, "cocycle law fails at (" + std::to_string(bad->first) + ", " +
                                              std::to_string(bad->second) + ")");
  return d;
}

// ---------------------------------------------------------------------------
// Lifting homomorphisms G/Z1 -> A/Z1

std::string_view to_string(LiftBranch b) noexcept {
  switch (b) {
    case LiftBranch::zero: return "zero";
    case LiftBranch::M_ne_C: return "M_ne_C";
    case LiftBranch::M_eq_C: return "M_eq_C";
  }
  return "?";
}

LiftContext make_lift_context(const FiniteGroup& g, const Subgroup& a) {
  auto fail = [](const std::string& why) { throw AlgebraError(Errc::hypothesis_failed, why); };
  const unsigned p = prime_of(g);
  if (p == 2) fail("p must be odd");
  if (!is_normal(g, a)) fail("A is not normal");
  if (!is_elementary_abelian(g, a) || a.order() != p * p) fail("A is not elementary abelian of rank 2");
  const Subgroup z = center(g);
  if (a.is_subgroup_of(z)) fail("A is central");
  LiftContext ctx;
  ctx.g = g;
  ctx.a = a;
  ctx.z1 = intersect(a, z);
  if (ctx.z1.order() != p) fail("|A cap Z(G)| is not p");
  const Tri pna = is_purely_nonabelian(g);
  if (pna == Tri::unknown) fail("purely non-abelian is undecided above the lattice cap");
  if (pna == Tri::no) fail("G has an abelian direct factor");
  ctx.c = centralizer(g, a);
  ctx.gz = quotient(g, ctx.z1);
  ctx.abar = ctx.gz.image(a);
  ctx.fullness = is_full_wrt(g, ctx.c);
  return ctx;
}

LiftResult lift_homomorphism(const LiftContext& ctx, const std::vector<Elem>& f) {
  const FiniteGroup& g = ctx.g;
  const FiniteGroup& q = ctx.gz.group;
  const unsigned p = prime_of(g);
  if (f.size() != q.order()) throw AlgebraError(Errc::invalid_input, "f must be a table on G/Z1");
  for (Elem v : f)
    if (!ctx.abar.contains(v)) throw AlgebraError(Errc::invalid_input, "f leaves A/Z1");
  for (Elem s = 0; s < q.order(); ++s)
    for (Elem t = 0; t < q.order(); ++t)
      if (f[q.mul(s, t)] != q.mul(f[s], f[t])) throw AlgebraError(Errc::not_homomorphism, "f is not a homomorphism");

  LiftResult r;
  r.f = f;
  const auto proj = [&](Elem x) { return ctx.gz.projection(x); };
  if (std::all_of(f.begin(), f.end(), [&](Elem v) { return v == q.identity(); })) {
    r.delta.values.assign(g.order(), g.identity());
    return r;
  }
  ElementSet kf(q.order());
  for (Elem s = 0; s < q.order(); ++s)
    if (f[s] == q.identity()) kf.insert(s);
  const Subgroup m = ctx.gz.preimage(Subgroup(kf));
  const auto lift_of = [&](Elem target) {
    for (Elem u : ctx.a.elements())
      if (proj(u) == target && !ctx.z1.contains(u)) return u;
    return kNoElem;
  };

  if (m != ctx.c) {
    r.branch = LiftBranch::M_ne_C;
    const auto rec = std::find_if(ctx.fullness.records.begin(), ctx.fullness.records.end(),
                                  [&](const FullnessRecord& fr) { return fr.m == m; });
    if (rec == ctx.fullness.records.end() || !rec->k)
      throw AlgebraError(Errc::hypothesis_failed, "G is not full with respect to C: no K inside ker f");
    r.k = *rec->k;
    r.y = lowest_outside(g, ctx.c, m);
    r.u = lift_of(f[proj(r.y)]);
    r.x = lowest_outside(g, frattini(g), *r.k);
    const AlphaMap alpha = alpha_hom(g, *r.k, ctx.c, r.y, r.x);
    r.z = scale_z(g, alpha, ctx.z1, r.u);
    r.delta = lemma46_derivation(g, *r.k, r.x, r.y, r.u, r.z);
    for (Elem e : m.elements())
      if (!ctx.z1.contains(r.delta(e))) throw AlgebraError(Errc::cross_check_failed, "delta does not map M into Z1");
  } else {
    r.branch = LiftBranch::M_eq_C;
    const Elem t = lowest_outside(g, Subgroup::whole(g), ctx.c);
    r.y = t;
    r.u = lift_of(f[proj(t)]);
    Elem norm = g.identity();
    for (unsigned k = 0; k < p; ++k) norm = g.mul(norm, g.conjugate(r.u, g.power(t, k)));
    if (norm != g.identity()) throw AlgebraError(Errc::no_solution, "u^(1+t+...+t^(p-1)) is not trivial");
    r.delta.values.assign(g.order(), kNoElem);
    Elem di = g.identity();
    for (unsigned i = 0; i < p; ++i) {
      const Elem ti = g.power(t, i);
      for (Elem c : ctx.c.elements()) r.delta.values[g.mul(ti, c)] = di;
      di = g.mul(di, g.conjugate(r.u, ti));
    }
    if (auto bad = cocycle_violation(g, r.delta.values))
      throw AlgebraError(Errc::not_cocycle, "cocycle law fails at (" + std::to_string(bad->first) + ", " +
                                                std::to_string(bad->second) + ")");
  }
  for (Elem e = 0; e < g.order(); ++e)
    if (!ctx.a.contains(r.delta(e)) || proj(r.delta(e)) != f[proj(e)])
      throw AlgebraError(Errc::cross_check_failed, "the lift does not induce f at " + std::to_string(e));
  return r;
}

// ---------------------------------------------------------------------------
// Exactness

Theorem43Verdict check_theorem43(const FiniteGroup& g, const Subgroup& a) {
  const LiftContext ctx = make_lift_context(g, a);
  const unsigned p = prime_of(g);
  Theorem43Verdict v;
  const RestrictionSequence rs = restriction_sequence(g, a, ctx.z1);
  v.hom_g_z1 = all_homs(g, cyclic_group(p)).size();
  v.hom_quot = all_homs(ctx.gz.group, cyclic_group(p)).size();
  v.der_size = rs.middle.size();
  v.image_size = rs.image_size;
  v.exact = v.image_size == v.hom_quot;
  v.exact_by_count = v.der_size == v.hom_g_z1 * v.hom_quot;
  v.full = ctx.fullness.full;
  v.agree = v.exact == v.full;

  const auto base = [&](std::string check, std::string msg) {
    Finding fd{std::move(check), std::move(msg), {}};
    fd.data.emplace_back("A", as_list(a));
    fd.data.emplace_back("C", as_list(ctx.c));
    return fd;
  };
  if (rs.lower.size() != v.hom_g_z1 || rs.upper.size() != v.hom_quot)
    v.findings.push_back(base("theorem43", "Der(G,Z1) or Der(G/Z1,A/Z1) differs from the Hom count"));
  if (!rs.injective || !rs.exact_at_middle || !rs.ring_homs)
    v.findings.push_back(base("theorem43", "restriction sequence is not exact at its first two terms"));
  if (v.exact != v.exact_by_count)
    v.findings.push_back(base("theorem43", "exactness by surjectivity and by counting disagree"));
  if (!v.agree) {
    Finding fd = base("theorem43", v.exact ? "sequence exact but G not full" : "G full but sequence not exact");
    if (ctx.fullness.failing) fd.data.emplace_back("M", as_list(ctx.fullness.records[*ctx.fullness.failing].m));
    v.findings.push_back(std::move(fd));
  }
  if (!v.exact) {
    std::vector<char> hit(rs.upper.size(), 0);
    for (std::size_t t : rs.tilde) hit[t] = 1;
    for (std::size_t i = 0; i < rs.upper.size(); ++i)
      if (!hit[i]) {
        v.non_liftable = rs.upper[i].values;
        break;
      }
  }
  if (v.full) {
    for (std::size_t i = 0; i < rs.upper.size(); ++i) {
      ++v.lifts_checked;
      try {
        const LiftResult lr = lift_homomorphism(ctx, rs.upper[i].values);
        if (rs.middle.find(lr.delta.values))
          ++v.lifts_ok;
        else
          v.findings.push_back(base("theorem43", "lift is not among the enumerated derivations"));
      } catch (const AlgebraError& e) {
        Finding fd = base("theorem43", std::string(to_string(e.code())) + ": " + e.what());
        fd.data.emplace_back("f", rs.upper[i].values);
        v.findings.push_back(std::move(fd));
      }
    }
  }
  return v;
}

std::vector<Subgroup> elementary_normal_in_zeta2(const FiniteGroup& g) {
  const auto zs = upper_central_series(g);
  const Subgroup z2 = zs[std::min<std::size_t>(2, zs.size() - 1)];
  const SubgroupView view = subgroup_view(g, z2);
  std::vector<Subgroup> out;
  for (const auto& inner : subgroup_lattice(view.group, kInternalMaxOrder)) {
    const Subgroup s = view.lift(inner);
    if (s.order() > 1 && is_normal(g, s) && is_elementary_abelian(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Corollary47Instance corollary47_instance(const FiniteGroup& g, const Subgroup& a, std::vector<Finding>& findings) {
  const unsigned p = prime_of(g);
  Corollary47Instance inst;
  inst.a = a;
  for (std::size_t o = a.order(); o > 1; o /= p) ++inst.rank;
  const Subgroup z1 = intersect(a, center(g));
  inst.central = a.is_subgroup_of(z1);
  const Quotient gz = quotient(g, z1);
  const Subgroup abar = gz.image(a);
  const SubgroupView av = subgroup_view(gz.group, abar);
  const auto homs = all_homs(gz.group, av.group);
  inst.homs = homs.size();
  const auto finding = [&](std::string msg) {
    Finding fd{"corollary47", std::move(msg), {}};
    fd.data.emplace_back("A", as_list(a));
    findings.push_back(std::move(fd));
  };
  try {
    inst.image_size = restriction_sequence(g, a, z1).image_size;
  } catch (const AlgebraError& e) {
    finding(std::string(to_string(e.code())) + ": " + e.what());
    return inst;
  }
  if (inst.central) {
    inst.lifted = inst.homs;
    inst.exact = inst.image_size == inst.homs;
    return inst;
  }

  // Basis v_1..v_s of A/Z1 and the rank-2 pieces A_i = <Z1, v_i>.
  std::vector<Elem> basis;
  Subgroup span = z1;
  for (Elem x : a.elements())
    if (!span.contains(x)) {
      basis.push_back(x);
      span = join(g, span, subgroup_closure(g, std::vector<Elem>{x}));
    }
  std::vector<LiftContext> pieces;
  for (Elem v : basis) {
    std::vector<Elem> gens = z1.elements();
    gens.push_back(v);
    try {
      pieces.push_back(make_lift_context(g, subgroup_closure(g, gens)));
    } catch (const AlgebraError& e) {
      finding(std::string("piece: ") + e.what());
      return inst;
    }
  }
  // coordinates of each element of A/Z1 in the basis
  std::vector<std::vector<unsigned>> coords(gz.group.order());
  std::vector<unsigned> e(basis.size(), 0);
  while (true) {
    Elem w = g.identity();
    for (std::size_t i = 0; i < basis.size(); ++i) w = g.mul(w, g.power(basis[i], e[i]));
    coords[gz.projection(w)] = e;
    std::size_t pos = 0;
    while (pos < e.size() && ++e[pos] == p) e[pos++] = 0;
    if (pos == e.size()) break;
  }

  for (const auto& h : homs) {
    std::vector<Elem> f(gz.group.order());
    for (Elem s = 0; s < f.size(); ++s) f[s] = av.to_parent[h(s)];
    std::vector<Elem> total(g.order(), g.identity());
    try {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Elem> fi(f.size());
        for (Elem s = 0; s < f.size(); ++s) fi[s] = gz.group.power(gz.projection(basis[i]), coords[f[s]][i]);
        const LiftResult lr = lift_homomorphism(pieces[i], fi);
        for (Elem x = 0; x < g.order(); ++x) total[x] = g.mul(total[x], lr.delta(x));
      }
    } catch (const AlgebraError& ex) {
      finding(std::string(to_string(ex.code())) + ": " + ex.what());
      continue;
    }
    bool ok = is_derivation(g, a, total);
    for (Elem x = 0; x < g.order() && ok; ++x) ok = gz.projection(total[x]) == f[gz.projection(x)];
    if (ok)
      ++inst.lifted;
    else
      finding("sum of the lifts does not induce f");
  }
  inst.exact = inst.image_size == inst.homs && inst.lifted == inst.homs;
  return inst;
}

bool Corollary47Verdict::holds() const noexcept {
  if (!in_hypothesis) return true;
  return findings.empty() && std::all_of(instances.begin(), instances.end(), [](const auto& i) { return i.exact; });
}

Corollary47Verdict check_corollary47(const FiniteGroup& g) {
  Corollary47Verdict v;
  const unsigned p = prime_of(g);
  if (p == 2) {
    v.reason = "p must be odd";
    return v;
  }
  if (g.is_abelian()) {
    v.reason = "G is abelian";
    return v;
  }
  if (abelian_invariants(g, center(g)).size() != 1) {
    v.reason = "centre is not cyclic";
    return v;
  }
  for (const auto& c : maximal_subgroups(g))
    if (!is_full_wrt(g, c).full) {
      v.reason = "G is not full with respect to every maximal subgroup";
      return v;
    }
  v.in_hypothesis = true;
  for (const auto& a : elementary_normal_in_zeta2(g)) v.instances.push_back(corollary47_instance(g, a, v.findings));
  return v;
}

}  // namespace pgroup
