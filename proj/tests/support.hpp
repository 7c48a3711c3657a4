#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "pgroup/catalog.hpp"
#include "pgroup/derivation.hpp"
#include "pgroup/group.hpp"
#include "pgroup/structure.hpp"

namespace pgtest {

using namespace pgroup;

inline FiniteGroup cat(const std::string& id) {
  const CatalogEntry* e = find_catalog_entry(id);
  if (!e) throw std::runtime_error("no catalog entry " + id);
  return build_entry(*e);
}

inline FiniteGroup heis(unsigned p) {
  PcPresentation pcp;
  pcp.p = p;
  pcp.rank = 3;
  pcp.commutators[{1, 0}] = {0, 0, 1};
  return from_pc_presentation(pcp);
}

inline FiniteGroup elementary(unsigned p, unsigned rank) {
  PcPresentation pcp;
  pcp.p = p;
  pcp.rank = rank;
  return from_pc_presentation(pcp);
}

/// Pc generator g_i as an element index (word with a single 1).
inline Elem pc_gen(unsigned p, unsigned i) {
  Elem x = 1;
  for (unsigned k = 0; k < i; ++k) x *= p;
  return x;
}

/// Every (x, y, z) associates.
inline bool associative(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = g.mul(x, y);
      for (Elem z = 0; z < n; ++z)
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) return false;
    }
  return true;
}

/// d(xy) = y^-1 d(x) y d(y) for all pairs, written out directly.
inline bool cocycle(const FiniteGroup& g, const std::vector<Elem>& d) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (d[g.mul(x, y)] != g.mul(g.mul(g.inv(y), g.mul(d[x], y)), d[y])) return false;
  return true;
}

/// Brute force Der(G,A): every assignment of A-values to the group's own
/// generators, propagated along the Cayley graph by the cocycle law and
/// then checked on all pairs.
inline std::set<std::vector<Elem>> derivations_by_brute_force(const FiniteGroup& g, const Subgroup& a) {
  const auto gens = std::vector<Elem>(g.generators().begin(), g.generators().end());
  const auto avals = a.elements();
  std::set<std::vector<Elem>> out;
  std::vector<std::size_t> digits(gens.size(), 0);
  while (true) {
    std::vector<Elem> d(g.order(), kNoElem);
    d[g.identity()] = g.identity();
    std::queue<Elem> q;
    q.push(g.identity());
    bool ok = true;
    while (!q.empty() && ok) {
      const Elem x = q.front();
      q.pop();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Elem s = gens[k];
        const Elem v = g.mul(g.mul(g.inv(s), g.mul(d[x], s)), avals[digits[k]]);
        const Elem xs = g.mul(x, s);
        if (d[xs] == kNoElem) {
          d[xs] = v;
          q.push(xs);
        } else if (d[xs] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok && cocycle(g, d)) out.insert(d);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == avals.size()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

/// |Hom(G, C_m)| from the invariants of G/[G,G]: the product of gcd(a_i, m).
inline std::size_t hom_count_to_cyclic(const FiniteGroup& g, std::size_t m) {
  const Quotient q = quotient(g, commutator_subgroup(g, Subgroup::whole(g), Subgroup::whole(g)));
  std::size_t count = 1;
  for (std::size_t a : abelian_invariants(q.group)) count *= std::gcd(a, m);
  return count;
}

/// Lowest-index element of `s` outside `t`.
inline Elem first_outside(const Subgroup& s, const Subgroup& t) {
  for (Elem x : s.elements())
    if (!t.contains(x)) return x;
  return kNoElem;
}

inline std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace pgtest
