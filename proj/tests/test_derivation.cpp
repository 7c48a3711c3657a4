#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pgroup/fullness.hpp"
#include "support.hpp"

using namespace pgtest;

namespace {

struct Case {
  std::string id;
  FiniteGroup g;
  Subgroup a;
};

/// <g_2, g_3> in the Heisenberg group: rank 2, normal, not central.
Subgroup heis_a(const FiniteGroup& h) {
  const unsigned p = prime_of(h);
  return subgroup_closure(h, std::vector<Elem>{pc_gen(p, 1), pc_gen(p, 2)});
}

std::vector<Case> small_cases() {
  std::vector<Case> out;
  const FiniteGroup h = heis(3);
  out.push_back({"heis27/center", h, center(h)});
  out.push_back({"heis27/A", h, heis_a(h)});
  const FiniteGroup e = elementary(3, 2);
  out.push_back({"c3xc3/factor", e, subgroup_closure(e, std::vector<Elem>{1})});
  out.push_back({"c3xc3/whole", e, Subgroup::whole(e)});
  for (const char* id : {"m27", "d8", "q8", "c9", "c3xheis27", "c9sdc9", "heis125"}) {
    const FiniteGroup g = cat(id);
    out.push_back({std::string(id) + "/center", g, center(g)});
  }
  const FiniteGroup m = cat("m27");
  out.push_back({"m27/omega1", m, omega(m, Subgroup::whole(m), 1)});
  const FiniteGroup d = cat("d8");
  out.push_back({"d8/cyclic4", d, subgroup_closure(d, std::vector<Elem>{1})});
  return out;
}

std::set<std::vector<Elem>> value_set(const DerivationRing& d) {
  std::set<std::vector<Elem>> out;
  for (const auto& x : d.elements()) out.insert(x.values);
  return out;
}

}  // namespace

TEST_CASE("enumeration matches brute force") {
  for (const auto& c : small_cases()) {
    if (!is_normal(c.g, c.a) || !is_abelian(c.g, c.a)) continue;
    const DerivationRing d = enumerate_derivations(c.g, c.a);
    const auto oracle = derivations_by_brute_force(c.g, c.a);
    CHECK_MESSAGE(d.size() == oracle.size(), c.id);
    CHECK_MESSAGE(value_set(d) == oracle, c.id);
    for (const auto& x : d.elements()) {
      CHECK(cocycle(c.g, x.values));
      CHECK(is_derivation(c.g, c.a, x.values));
    }
  }
}

TEST_CASE("derivation counts") {
  CHECK(enumerate_derivations(elementary(3, 2), subgroup_closure(elementary(3, 2), std::vector<Elem>{1})).size() == 9);
  const FiniteGroup h = heis(3);
  const DerivationRing dz = enumerate_derivations(h, center(h));
  CHECK(dz.size() == 9);
  CHECK(dz.size() == all_homs(h, cyclic_group(3)).size());
  CHECK(enumerate_derivations(h, heis_a(h)).size() == 81);
  CHECK(enumerate_derivations(heis(5), heis_a(heis(5))).size() == 625);
}

TEST_CASE("refusals") {
  const FiniteGroup h = heis(3);
  const Subgroup not_normal = subgroup_closure(h, std::vector<Elem>{pc_gen(3, 0)});
  CHECK_THROWS_AS(enumerate_derivations(h, not_normal), AlgebraError);
  CHECK_THROWS_AS(enumerate_derivations(h, Subgroup::whole(h)), AlgebraError);
  // a coset-changing automorphism is not in Aut_Z(G)
  const DerivationRing d = enumerate_derivations(h, heis_a(h));
  for (const auto& x : d.elements()) {
    const auto sigma = aut_from_derivation(h, x);
    if (!sigma) continue;
    bool inside = true;
    for (Elem y = 0; y < 27; ++y) inside = inside && center(h).contains(x(y));
    if (!inside) {
      CHECK_THROWS_AS(derivation_from_aut(h, center(h), *sigma), AlgebraError);
      break;
    }
  }
}

TEST_CASE("ring operations") {
  for (const auto& c : small_cases()) {
    if (!is_normal(c.g, c.a) || !is_abelian(c.g, c.a)) continue;
    const DerivationRing d = enumerate_derivations(c.g, c.a);
    const FiniteRing r = d.ring();
    CHECK(r.order() == d.size());
    for (std::size_t i = 0; i < d.size(); i += 3)
      for (std::size_t j = 0; j < d.size(); j += 5) {
        const auto& x = d[i];
        const auto& y = d[j];
        std::vector<Elem> sum(c.g.order()), prod(c.g.order());
        for (Elem t = 0; t < c.g.order(); ++t) {
          sum[t] = c.g.mul(x(t), y(t));
          prod[t] = y(x(t));
        }
        CHECK(d[d.add(i, j)].values == sum);
        CHECK(d[d.mul(i, j)].values == prod);
        CHECK(d.find(sum) == d.add(i, j));
      }
    CHECK(d[d.zero()].values == std::vector<Elem>(c.g.order(), c.g.identity()));
    CHECK(additive_generators(d).size() <= d.size());
  }
}

TEST_CASE("automorphisms from derivations") {
  const FiniteGroup h = heis(3);
  const DerivationRing d = enumerate_derivations(h, center(h));
  const auto id = aut_from_derivation(h, d[d.zero()]);
  REQUIRE(id);
  for (Elem x = 0; x < 27; ++x) CHECK(id->image[x] == x);
  std::size_t invertible = 0;
  for (const auto& c : small_cases()) {
    if (!is_normal(c.g, c.a) || !is_abelian(c.g, c.a)) continue;
    const DerivationRing dd = enumerate_derivations(c.g, c.a);
    for (const auto& x : dd.elements()) {
      const auto sigma = aut_from_derivation(c.g, x);
      if (!sigma) continue;
      ++invertible;
      CHECK(derivation_from_aut(c.g, c.a, *sigma) == x);
    }
  }
  CHECK(invertible > 0);
  std::size_t all_inv = 0;
  for (const auto& x : d.elements()) all_inv += aut_from_derivation(h, x).has_value();
  CHECK(all_inv == 9);
}

TEST_CASE("Aut_N(G)") {
  const FiniteGroup h = heis(3);
  CHECK(aut_n(h, Subgroup::trivial(h)).members.size() == 1);
  const FiniteGroup e = elementary(3, 2);
  CHECK(aut_n_direct(e, Subgroup::whole(e)).members.size() == 48);
  CHECK(aut_n(e, Subgroup::whole(e)).members.size() == 48);
  CHECK(aut_n_direct(h, center(h)).members.size() == 9);
  CHECK(aut_n_via_derivations(h, center(h)).members.size() == 9);
  for (const auto& c : small_cases()) {
    if (!is_normal(c.g, c.a) || !is_abelian(c.g, c.a)) continue;
    const AutNView a = aut_n_direct(c.g, c.a);
    const AutNView b = aut_n_via_derivations(c.g, c.a);
    REQUIRE_MESSAGE(a.members.size() == b.members.size(), c.id);
    for (std::size_t i = 0; i < a.members.size(); ++i) CHECK(a.members[i].image == b.members[i].image);
    // closed under composition
    std::set<std::vector<Elem>> images;
    for (const auto& m : a.members) images.insert(m.image);
    for (std::size_t i = 0; i < a.members.size(); i += 2)
      for (std::size_t j = 0; j < a.members.size(); j += 3)
        CHECK(images.contains(compose(a.members[i].image, a.members[j].image)));
  }
  // the direct search also handles non-abelian N
  const AutNView inner = aut_n_direct(h, Subgroup::whole(h));
  CHECK(inner.members.size() == 432);
}

TEST_CASE("streaming Aut_N") {
  const FiniteGroup h = heis(3);
  std::size_t seen = 0;
  for_each_aut_n(h, center(h), [&](std::vector<Elem>&) { return ++seen < 4; });
  CHECK(seen == 4);
  seen = 0;
  for_each_aut_n(h, center(h), [&](std::vector<Elem>&) {
    ++seen;
    return true;
  });
  CHECK(seen == 9);
}

TEST_CASE("Aut_A(G) is the adjoint group of Der(G,A)") {
  for (const auto& c : small_cases()) {
    if (!is_normal(c.g, c.a) || !is_abelian(c.g, c.a)) continue;
    const AutIsoCheck iso = check_aut_derivation_iso(c.g, c.a);
    CHECK_MESSAGE(iso.holds(), c.id);
    CHECK(iso.aut_size == aut_n_direct(c.g, c.a).members.size());
  }
  // large enough for the generator-based multiplicativity check
  const FiniteGroup e = elementary(3, 3);
  const AutIsoCheck big = check_aut_derivation_iso(e, Subgroup::whole(e));
  CHECK(big.der_size == 19683);
  CHECK(big.aut_size == 11232);
  CHECK(big.aut_size > kAllPairsAut);
  CHECK(big.holds());
}

TEST_CASE("restriction sequence") {
  const FiniteGroup h = heis(3);
  const Subgroup a = heis_a(h);
  SUBCASE("B = A") {
    const RestrictionSequence s = restriction_sequence(h, a, a);
    CHECK(s.upper.size() == 1);
    CHECK(s.exact_at_middle);
  }
  SUBCASE("B = 1") {
    const RestrictionSequence s = restriction_sequence(h, a, Subgroup::trivial(h));
    CHECK(s.lower.size() == 1);
    CHECK(s.injective);
    CHECK(s.exact_at_middle);
  }
  SUBCASE("B = Z_1") {
    const Subgroup z1 = intersect(a, center(h));
    const RestrictionSequence s = restriction_sequence(h, a, z1);
    CHECK(s.lower.size() == 9);
    CHECK(s.injective);
    CHECK(s.ring_homs);
    CHECK(s.exact_at_middle);
    std::size_t kernel_size = 0;
    for (std::size_t t : s.tilde) kernel_size += t == s.upper.zero();
    CHECK(kernel_size == 9);
    CHECK(s.image_size * 9 == s.middle.size());
  }
  SUBCASE("B not invariant") {
    // every endomorphism of C_3 x C_3 is a derivation into G, and some move a line
    const FiniteGroup e = elementary(3, 2);
    CHECK_THROWS_AS(restriction_sequence(e, Subgroup::whole(e), subgroup_closure(e, std::vector<Elem>{1})),
                    AlgebraError);
  }
  SUBCASE("exact on invariant pairs") {
    for (const char* id : {"heis27", "c9oheis27", "g81_c9c3sdc3", "g243a"}) {
      const FiniteGroup g = cat(id);
      const Subgroup z = center(g);
      for (const auto& aa : elementary_normal_in_zeta2(g)) {
        const Subgroup b = intersect(aa, z);
        try {
          const RestrictionSequence s = restriction_sequence(g, aa, b);
          CHECK_MESSAGE(s.exact_at_middle, id);
          CHECK(s.injective);
          CHECK(s.ring_homs);
        } catch (const AlgebraError& err) {
          CHECK(err.code() == Errc::not_invariant);
        }
      }
    }
  }
}
