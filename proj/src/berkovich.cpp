#include "pgroup/berkovich.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pgroup/fullness.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(BerkovichBranch b) noexcept {
  switch (b) {
    case BerkovichBranch::unequal_d_condition: return "unequal_d_condition";
    case BerkovichBranch::strongly_frattinian_reduction_inapplicable:
      return "strongly_frattinian_reduction_inapplicable";
    case BerkovichBranch::coclass2_main: return "coclass2_main";
  }
  return "?";
}

namespace {

std::optional<DerivationRing> try_derivations(const FiniteGroup& g, const Subgroup& a) {
  if (!is_abelian(g, a)) return std::nullopt;
  try {
    DerivationRing d = enumerate_derivations(g, a);
    if (d.size() > kMaxRingOrder) return std::nullopt;
    return d;
  } catch (const AlgebraError& e) {
    if (e.code() == Errc::too_large) return std::nullopt;
    throw;
  }
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Ring elements (derivation indices) of a subgroup of the adjoint group.
std::set<std::size_t> to_ring_set(const AdjointGroupView& v, const ElementSet& in_group) {
  std::set<std::size_t> out;
  for (Elem x : in_group.elements()) out.insert(v.to_ring[x]);
  return out;
}

}  // namespace

HTower compute_h_tower(const FiniteGroup& g) {
  HTower t;
  const auto zs = upper_central_series(g);
  t.zeta1 = zs[std::min<std::size_t>(1, zs.size() - 1)];
  t.zeta2 = zs[std::min<std::size_t>(2, zs.size() - 1)];
  const Quotient q = quotient(g, t.zeta1);
  t.h = q.preimage(omega(q.group, q.image(t.zeta2), 1));
  for (unsigned i = 1;; ++i) {
    t.h_i.push_back(omega(g, t.h, i));
    if (t.h_i.back() == t.h) break;
  }
  t.h_abelian = is_abelian(g, t.h);
  t.d = try_derivations(g, t.h);
  t.d1 = try_derivations(g, t.h_i.front());
  return t;
}

Lemma32Verdict check_lemma32(const FiniteGroup& g, const HTower& t) {
  Lemma32Verdict v;
  const Subgroup phi = frattini(g);
  v.h_in_cgphi = t.h.is_subgroup_of(centralizer(g, phi));
  v.cgphi_in_phi = centralizer(g, phi).is_subgroup_of(phi);
  v.h_abelian = t.h_abelian;
  return v;
}

Lemma33Verdict check_lemma33(const FiniteGroup& g, const HTower& t) {
  Lemma33Verdict v;
  const StructureProfile prof = structure_profile(g);
  if (!prof.cgphi_in_phi) {
    v.reason = "C_G(Phi(G)) is not contained in Phi(G)";
    return v;
  }
  if (!t.d || !t.d1) {
    v.reason = t.h_abelian ? "Der(G,H) too large" : "H is not abelian";
    return v;
  }
  const DerivationRing& d = *t.d;
  const DerivationRing& d1 = *t.d1;
  v.d_size = d.size();
  v.d1_size = d1.size();

  // (1) products of additive generators are homomorphisms into the centre
  const Subgroup z = center(g);
  const auto ag = additive_generators(d);
  v.d2_in_hom_center = true;
  for (std::size_t i : ag)
    for (std::size_t j : ag) {
      const Derivation& prod = d[d.mul(i, j)];
      for (Elem x = 0; x < g.order() && v.d2_in_hom_center; ++x) {
        if (!z.contains(prod(x))) v.d2_in_hom_center = false;
        for (Elem y = 0; y < g.order() && v.d2_in_hom_center; ++y)
          if (prod(g.mul(x, y)) != g.mul(prod(x), prod(y))) v.d2_in_hom_center = false;
      }
    }

  // (2) D1^3 = 0
  const FiniteRing r1 = d1.ring();
  v.d1_cubed_zero = power_ideal(r1, 3).count() == 1;

  // (3) D/D1 right p-nil of exponent at most p^min(r,s)
  const FiniteRing r = d.ring();
  ElementSet ideal(d.size());
  for (std::size_t i : d.with_values_in(t.h_i.front())) ideal.insert(static_cast<Elem>(i));
  v.exponent_bound = ipow(prof.p, std::min(prof.r, prof.s));
  v.d1_is_ideal = is_two_sided_ideal(r, ideal);
  if (v.d1_is_ideal) {
    const QuotientRing qr = quotient_ring(r, ideal);
    v.quotient_right_p_nil = qr.ring.order() == 1 || is_right_p_nil(qr.ring);
    v.quotient_exponent = additive_exponent(qr.ring);
  }
  const bool ok = v.d2_in_hom_center && v.d1_cubed_zero && v.d1_is_ideal && v.quotient_right_p_nil &&
                  v.quotient_exponent <= v.exponent_bound;
  v.status = ok ? Status::pass : Status::fail;
  return v;
}

Theorem31Verdict check_theorem31(const FiniteGroup& g, const HTower& t) {
  Theorem31Verdict v;
  const StructureProfile prof = structure_profile(g);
  if (!prof.cgphi_in_phi) {
    v.reason = "C_G(Phi(G)) is not contained in Phi(G)";
    return v;
  }
  if (!t.d || !t.d1) {
    v.reason = t.h_abelian ? "Der(G,H) too large" : "H is not abelian";
    return v;
  }
  const DerivationRing& d = *t.d;
  const FiniteRing r = d.ring();
  const AdjointGroupView aut_h = adjoint_group(r);
  const AdjointGroupView aut_h1 = adjoint_group(t.d1->ring());
  v.aut_h_order = aut_h.group.order();
  v.aut_h1_order = aut_h1.group.order();
  v.class_bound = std::min(prof.r, prof.s) + 1;
  v.class_aut_h = nilpotency_class(aut_h.group);
  v.class_aut_h1 = nilpotency_class(aut_h1.group);
  v.degree_d = nilpotency_degree(r).value_or(0);
  bool ok = v.aut_h_order == d.size() && v.class_aut_h <= v.class_bound && v.class_aut_h1 <= 2 &&
            nilpotency_degree(r).has_value() && v.degree_d <= v.class_bound;

  if (prof.p > 2) {
    const Subgroup all = Subgroup::whole(aut_h.group);
    const std::size_t e = exponent(aut_h.group, all);
    unsigned top = 0;
    for (std::size_t q = 1; q < e; q *= prof.p) ++top;
    for (unsigned i = 1; i <= std::max(top, 1U); ++i) {
      OmegaLevel lv;
      lv.i = i;
      const auto om = to_ring_set(aut_h, omega(aut_h.group, all, i).members());
      const auto os = to_ring_set(aut_h, omega_set(aut_h.group, all, i));
      const Subgroup& hi = t.h_i[std::min<std::size_t>(i, t.h_i.size()) - 1];
      const auto ah = d.with_values_in(hi);
      const std::set<std::size_t> ahs(ah.begin(), ah.end());
      lv.omega = om.size();
      lv.omega_set = os.size();
      lv.aut_hi = ahs.size();
      lv.equal = om == os && os == ahs;
      ok = ok && lv.equal;
      v.levels.push_back(lv);
    }
  }
  v.status = ok ? Status::pass : Status::fail;
  return v;
}

// ---------------------------------------------------------------------------
// Theorem 5.1

std::size_t automorphism_order(const std::vector<Elem>& sigma) {
  std::vector<Elem> id(sigma.size());
  for (std::size_t x = 0; x < id.size(); ++x) id[x] = static_cast<Elem>(x);
  std::vector<Elem> cur = sigma;
  std::size_t k = 1;
  while (cur != id) {
    cur = compose(cur, sigma);
    ++k;
  }
  return k;
}

std::size_t noninner_certificate(const FiniteGroup& g, const std::vector<Elem>& sigma) {
  std::set<std::vector<Elem>> inner;
  for (Elem c = 0; c < g.order(); ++c) {
    std::vector<Elem> tau(g.order());
    for (Elem x = 0; x < g.order(); ++x) tau[x] = g.conjugate(x, c);
    if (tau == sigma) return 0;
    inner.insert(std::move(tau));
  }
  return inner.size();
}

namespace {

/// First non-inner member of order p, in the sorted member order.
std::optional<BerkovichWitness> find_witness(const FiniteGroup& g, const AutNView& aut, BerkovichBranch b) {
  const unsigned p = prime_of(g);
  for (const auto& s : aut.members) {
    if (automorphism_order(s.image) != p) continue;
    const std::size_t cert = noninner_certificate(g, s.image);
    if (cert == 0) continue;
    return BerkovichWitness{s.image, p, cert, b};
  }
  return std::nullopt;
}

/// Same search in enumeration order without materialising Aut_N(G).
std::optional<BerkovichWitness> stream_witness(const FiniteGroup& g, const Subgroup& n, BerkovichBranch b) {
  const unsigned p = prime_of(g);
  std::optional<BerkovichWitness> w;
  for_each_aut_n(g, n, [&](std::vector<Elem>& sigma) {
    if (automorphism_order(sigma) != p) return true;
    const std::size_t cert = noninner_certificate(g, sigma);
    if (cert == 0) return true;
    w = BerkovichWitness{sigma, p, cert, b};
    return false;
  });
  return w;
}

/// Materialised search, or the streaming one when Aut_N(G) is too large.
std::optional<BerkovichWitness> search_witness(const FiniteGroup& g, const Subgroup& n, BerkovichBranch b,
                                               bool cross_check) {
  try {
    return find_witness(g, cross_check ? aut_n(g, n) : aut_n_direct(g, n), b);
  } catch (const AlgebraError& e) {
    if (e.code() != Errc::too_large) throw;
  }
  return stream_witness(g, n, b);
}

}  // namespace

Theorem51Verdict verify_theorem51(const FiniteGroup& g) {
  Theorem51Verdict v;
  const StructureProfile prof = structure_profile(g);
  if (prof.p == 2) {
    v.reason = "refused: p = 2";
    return v;
  }
  if (prof.coclass != 2) {
    v.reason = "refused: coclass " + std::to_string(prof.coclass);
    return v;
  }
  const HTower t = compute_h_tower(g);
  const Subgroup z = t.zeta1;
  const Quotient qz = quotient(g, z);
  v.d_g = prof.d;
  v.d_z = abelian_invariants(g, z).size();
  v.d_h_over_z = abelian_invariants(qz.group, qz.image(t.h)).size();
  const Subgroup z1 = omega(g, z, 1);

  if (v.d_g * v.d_z != v.d_h_over_z) {
    v.branch = BerkovichBranch::unequal_d_condition;
    v.witness = search_witness(g, z1, *v.branch, true);
    if (v.witness) {
      v.status = Status::pass;
    } else {
      v.status = Status::fail;
      v.findings.push_back({"berkovich", "no non-inner automorphism of order p in Aut_{Omega_1(Z)}(G)", {}});
    }
    return v;
  }
  if (!prof.is_strongly_frattinian) {
    v.branch = BerkovichBranch::strongly_frattinian_reduction_inapplicable;
    for (const Subgroup* n : {&z1, &t.h_i.front(), &t.h}) {
      try {
        v.witness = search_witness(g, *n, *v.branch, false);
      } catch (const AlgebraError& e) {
        if (e.code() != Errc::too_large) throw;
      }
      if (v.witness) break;
    }
    v.status = v.witness ? Status::pass : Status::inconclusive;
    if (!v.witness) v.reason = "bounded search found no witness";
    return v;
  }

  v.branch = BerkovichBranch::coclass2_main;
  const unsigned p = prof.p;
  const Subgroup& h1 = t.h_i.front();
  const auto finding = [&](std::string msg) {
    Finding fd{"berkovich", std::move(msg), {}};
    fd.data.emplace_back("H1", h1.elements());
    v.findings.push_back(std::move(fd));
  };
  if (!t.d1) {
    v.status = Status::fail;
    finding("H1 is not abelian or Der(G,H1) is too large");
    return v;
  }
  const DerivationRing& d1 = *t.d1;
  v.der_g_h1 = d1.size();
  const AutNView aut = aut_n(g, h1);
  v.aut_h1_direct = aut.members.size();
  v.hom_g_z1 = all_homs(g, cyclic_group(p)).size();
  const Quotient gz = quotient(g, z1);
  const SubgroupView hv = subgroup_view(gz.group, gz.image(h1));
  v.hom_quot = all_homs(gz.group, hv.group).size();

  v.full_all_maximals = true;
  for (const auto& c : maximal_subgroups(g)) v.full_all_maximals = v.full_all_maximals && is_full_wrt(g, c).full;
  if (v.full_all_maximals) {
    const Corollary47Instance inst = corollary47_instance(g, h1, v.findings);
    v.exact = inst.exact;
  } else {
    v.exact = restriction_sequence(g, h1, z1).image_size == v.hom_quot;
    finding("Corollary 4.7 does not apply: G is not full with respect to every maximal subgroup");
  }

  // inner automorphisms inside Aut_{H1}(G) and the elements inducing them
  ElementSet inducing(g.order());
  for (Elem c = 0; c < g.order(); ++c) {
    bool in = true;
    for (Elem x = 0; x < g.order() && in; ++x) in = h1.contains(g.commutator(x, c));
    if (in) inducing.insert(c);
  }
  v.inner_part = inducing.count() / z.order();
  const auto zs = upper_central_series(g);
  v.inner_part_is_zeta3 = inducing == zs[std::min<std::size_t>(3, zs.size() - 1)].members();

  v.all_order_p = true;
  for (const auto& s : aut.members) {
    const std::size_t o = automorphism_order(s.image);
    if (o != 1 && o != p) v.all_order_p = false;
  }

  const std::size_t p2 = p * p;
  if (v.der_g_h1 != v.aut_h1_direct) finding("|Der(G,H1)| differs from |Aut_{H1}(G)|");
  if (v.hom_g_z1 != p2) finding("|Hom(G,Z1)| is not p^2");
  if (v.hom_quot != p2) finding("|Hom(G/Z1,H1/Z1)| is not p^2");
  if (!v.exact) finding("restriction sequence for H1 is not exact");
  if (v.der_g_h1 != p2 * p2) finding("|Aut_{H1}(G)| is not p^4");
  if (v.inner_part != p2 * p) finding("inner part of Aut_{H1}(G) is not of order p^3");
  if (!v.inner_part_is_zeta3) finding("inner automorphisms in Aut_{H1}(G) are not exactly those induced by zeta_3(G)");
  if (!v.all_order_p) finding("Aut_{H1}(G) has an element of order above p");

  v.witness = find_witness(g, aut, *v.branch);
  v.status = v.witness ? Status::pass : Status::fail;
  if (!v.witness) finding("no non-inner automorphism of order p in Aut_{H1}(G)");
  return v;
}

}  // namespace pgroup
