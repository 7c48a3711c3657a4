#include "pgroup/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace pgroup {

std::string_view to_string(Tri t) noexcept {
  switch (t) {
    case Tri::no: return "false";
    case Tri::yes: return "true";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  const auto el = s.elements();
  ElementSet out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : el)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return Subgroup(std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, Elem x) {
  ElementSet out(g.order());
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.insert(y);
  return Subgroup(std::move(out));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  const auto el = s.elements();
  ElementSet out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem k : el)
      if (!s.contains(g.conjugate(k, x))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return Subgroup(std::move(out));
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  const auto el = s.elements();
  for (Elem x : g.generators())
    for (Elem k : el)
      if (!s.contains(g.conjugate(k, x))) return false;
  return true;
}

std::vector<Subgroup> upper_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::trivial(g)};
  const auto gens = g.generators();
  while (series.back().order() != g.order()) {
    const Subgroup& cur = series.back();
    ElementSet next(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Elem y : gens)
        if (!cur.contains(g.commutator(x, y))) {
          ok = false;
          break;
        }
      if (ok) next.insert(x);
    }
    if (next == cur.members()) throw AlgebraError(Errc::not_nilpotent, "upper central series stalls");
    series.emplace_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  const Subgroup all = Subgroup::whole(g);
  while (series.back().order() != 1) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) throw AlgebraError(Errc::not_nilpotent, "lower central series stalls");
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t nilpotency_class(const FiniteGroup& g) { return upper_central_series(g).size() - 1; }

unsigned prime_of(const FiniteGroup& g) {
  std::size_t n = g.order();
  if (n < 2) throw AlgebraError(Errc::not_p_power, "trivial group has no prime");
  unsigned p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) throw AlgebraError(Errc::not_p_power, "order " + std::to_string(g.order()) + " is not a prime power");
  return p;
}

unsigned log_order(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  const unsigned p = prime_of(g);
  unsigned k = 0;
  for (std::size_t n = g.order(); n > 1; n /= p) ++k;
  return k;
}

Subgroup power_subgroup(const FiniteGroup& g, const Subgroup& s, std::size_t m) {
  ElementSet pw(g.order());
  for (Elem x : s.elements()) pw.insert(g.power(x, static_cast<std::int64_t>(m)));
  return subgroup_closure(g, pw);
}

Subgroup power_subgroup(const FiniteGroup& g, std::size_t m) { return power_subgroup(g, Subgroup::whole(g), m); }

ElementSet omega_set(const FiniteGroup& g, const Subgroup& s, unsigned n) {
  ElementSet out(g.order());
  if (g.order() == 1) {
    out.insert(g.identity());
    return out;
  }
  std::size_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= prime_of(g);
  for (Elem x : s.elements())
    if (q % g.element_order(x) == 0) out.insert(x);
  return out;
}

Subgroup omega(const FiniteGroup& g, const Subgroup& s, unsigned n) {
  return subgroup_closure(g, omega_set(g, s, n));
}

namespace {

// Kernels of every nonzero homomorphism G -> C_p, found over the greedy
// generating set so that no Frattini information is used.
std::vector<Subgroup> kernels_to_cp(const FiniteGroup& g, unsigned p) {
  const FiniteGroup cp = cyclic_group(p);
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  HomExtender ext(g, gens);
  std::vector<Subgroup> out;
  std::vector<Elem> images(gens.size(), 0);
  while (true) {
    if (std::any_of(images.begin(), images.end(), [](Elem v) { return v != 0; }))
      if (auto phi = ext.extend(cp, images)) {
        ElementSet k(g.order());
        for (Elem x = 0; x < g.order(); ++x)
          if ((*phi)[x] == 0) k.insert(x);
        out.emplace_back(std::move(k));
      }
    std::size_t pos = images.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++images[pos] < p) {
        done = false;
        break;
      }
      images[pos] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Subgroup frattini(const FiniteGroup& g) {
  if (g.order() == 1) return Subgroup::trivial(g);
  const unsigned p = prime_of(g);
  ElementSet meet = ElementSet::full(g.order());
  for (const auto& m : kernels_to_cp(g, p)) meet &= m.members();
  Subgroup phi(std::move(meet));
  const Subgroup all = Subgroup::whole(g);
  const Subgroup other = join(g, power_subgroup(g, p), commutator_subgroup(g, all, all));
  if (!(other == phi))
    throw AlgebraError(Errc::cross_check_failed, "Frattini subgroup: intersection of maximals != <G^p, G'>");
  return phi;
}

std::vector<Elem> minimal_generating_set(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  const Subgroup phi = frattini(g);
  std::vector<Elem> gens;
  ElementSet span = phi.members();
  for (Elem x = 0; x < g.order(); ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    ElementSet seed = phi.members();
    for (Elem y : gens) seed.insert(y);
    span = subgroup_closure(g, seed).members();
  }
  return gens;
}

std::size_t generator_rank(const FiniteGroup& g) { return minimal_generating_set(g).size(); }

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  const unsigned p = prime_of(g);
  const Subgroup phi = frattini(g);
  const std::vector<Elem> basis = minimal_generating_set(g);
  const std::size_t d = basis.size();
  // coordinates of each element in G/Phi(G) relative to the basis
  std::vector<std::vector<unsigned>> coord(g.order());
  std::vector<unsigned> a(d, 0);
  const auto phi_el = phi.elements();
  while (true) {
    Elem x = g.identity();
    for (std::size_t i = 0; i < d; ++i) x = g.mul(x, g.power(basis[i], a[i]));
    for (Elem f : phi_el) coord[g.mul(x, f)] = a;
    std::size_t pos = d;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++a[pos] < p) {
        done = false;
        break;
      }
      a[pos] = 0;
    }
    if (done) break;
  }
  // normalised functionals: first nonzero coefficient is 1
  std::vector<Subgroup> out;
  std::vector<unsigned> c(d, 0);
  while (true) {
    std::size_t pos = d;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++c[pos] < p) {
        done = false;
        break;
      }
      c[pos] = 0;
    }
    if (done) break;
    const auto lead = std::find_if(c.begin(), c.end(), [](unsigned v) { return v != 0; });
    if (*lead != 1) continue;
    ElementSet m(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      unsigned s = 0;
      for (std::size_t i = 0; i < d; ++i) s += c[i] * coord[x][i];
      if (s % p == 0) m.insert(x);
    }
    out.emplace_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t exponent(const FiniteGroup& g, const Subgroup& s) {
  std::size_t e = 1;
  for (Elem x : s.elements()) e = std::max(e, g.element_order(x));
  return e;
}

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g, const Subgroup& s) {
  if (s.order() == 1) return {};
  std::size_t n = s.order();
  unsigned p = 2;
  while (n % p != 0) ++p;
  // census[k] = #{x : x^(p^k) = 1} = p^(sum_i min(k, a_i))
  std::vector<unsigned> logs;  // log_p of census, k = 0, 1, ...
  std::size_t q = 1;
  while (true) {
    std::size_t cnt = 0;
    for (Elem x : s.elements())
      if (q % g.element_order(x) == 0) ++cnt;
    unsigned l = 0;
    for (std::size_t c = cnt; c > 1; c /= p) ++l;
    logs.push_back(l);
    if (cnt == s.order()) break;
    q *= p;
  }
  // number of invariants with a_i >= k is logs[k] - logs[k-1]
  std::vector<std::size_t> inv;
  const std::size_t top = logs.size() - 1;
  for (std::size_t k = 1; k <= top; ++k) {
    const unsigned ge_k = logs[k] - logs[k - 1];
    const unsigned ge_k1 = k < top ? logs[k + 1] - logs[k] : 0;
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) order *= p;
    for (unsigned c = 0; c < ge_k - ge_k1; ++c) inv.push_back(order);
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

std::vector<std::size_t> abelian_invariants(const FiniteGroup& g) {
  return abelian_invariants(g, Subgroup::whole(g));
}

bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& s) {
  if (!is_abelian(g, s)) return false;
  if (s.order() == 1) return true;
  std::size_t n = s.order();
  unsigned p = 2;
  while (n % p != 0) ++p;
  for (Elem x : s.elements())
    if (x != g.identity() && g.element_order(x) != p) return false;
  return true;
}

std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw AlgebraError(Errc::too_large, "subgroup lattice capped at order " + std::to_string(max_order));
  if (g.order() == 1) return {Subgroup::trivial(g)};
  const unsigned p = prime_of(g);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> layer{Subgroup::trivial(g)};
  std::vector<Subgroup> all = layer;
  seen.insert(layer.front().members());
  while (!layer.empty()) {
    std::vector<Subgroup> next;
    for (const auto& v : layer) {
      const Subgroup nv = normalizer(g, v);
      ElementSet covered = v.members();
      for (Elem x : nv.elements()) {
        if (covered.contains(x)) continue;
        if (!v.contains(g.power(x, p))) continue;
        ElementSet seed = v.members();
        seed.insert(x);
        Subgroup u = subgroup_closure(g, seed);
        covered |= u.members();
        if (seen.insert(u.members()).second) {
          next.push_back(u);
          all.push_back(std::move(u));
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t max_order) {
  std::vector<Subgroup> out;
  for (auto& s : subgroup_lattice(g, max_order))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

bool is_powerful(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  const unsigned p = prime_of(g);
  const Subgroup all = Subgroup::whole(g);
  const Subgroup derived = commutator_subgroup(g, all, all);
  return derived.is_subgroup_of(power_subgroup(g, p == 2 ? 4 : p));
}

Tri is_purely_nonabelian(const FiniteGroup& g, std::size_t lattice_cap) {
  if (g.order() == 1) return Tri::yes;
  if (g.is_abelian()) return Tri::no;
  const Subgroup z = center(g);
  // With G = A x B, A abelian, Z(G) = A x Z(B) is cyclic only if B = 1.
  if (abelian_invariants(g, z).size() == 1) return Tri::yes;
  const Subgroup phi = frattini(g);
  // An abelian direct factor A != 1 is central and escapes Phi(G).
  if (z.is_subgroup_of(phi)) return Tri::yes;
  // A central element of order p outside Phi(G) splits off.
  if (!omega_set(g, z, 1).is_subset_of(phi.members())) return Tri::no;
  if (g.order() > lattice_cap) return Tri::unknown;
  const auto normals = normal_subgroups(g, lattice_cap);
  std::unordered_set<ElementSet, ElementSetHash> cyclics;
  for (Elem c : z.elements()) {
    if (c == g.identity()) continue;
    const Subgroup cyc = subgroup_closure(g, std::vector<Elem>{c});
    if (!cyclics.insert(cyc.members()).second) continue;
    for (const auto& nrm : normals)
      if (nrm.order() * cyc.order() == g.order() && intersect(nrm, cyc).order() == 1) return Tri::no;
  }
  return Tri::yes;
}

StructureProfile structure_profile(const FiniteGroup& g) {
  StructureProfile prof;
  prof.p = prime_of(g);
  prof.n = log_order(g);
  prof.nilpotency_class = nilpotency_class(g);
  prof.coclass = prof.n - prof.nilpotency_class;
  prof.d = generator_rank(g);
  const Subgroup all = Subgroup::whole(g);
  prof.exponent = exponent(g, all);

  const Subgroup derived = commutator_subgroup(g, all, all);
  std::size_t exp_ab = 1;
  for (Elem x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    while (!derived.contains(g.power(x, static_cast<std::int64_t>(k)))) k *= prof.p;
    exp_ab = std::max(exp_ab, k);
  }
  const Subgroup z = center(g);
  const std::size_t exp_z = exponent(g, z);
  for (std::size_t q = exp_ab; q > 1; q /= prof.p) ++prof.r;
  for (std::size_t q = exp_z; q > 1; q /= prof.p) ++prof.s;

  prof.is_powerful = is_powerful(g);
  prof.is_purely_nonabelian = is_purely_nonabelian(g);
  const Subgroup phi = frattini(g);
  prof.cgphi_in_phi = centralizer(g, phi).is_subgroup_of(phi);
  prof.is_strongly_frattinian = centralizer(g, intersect(phi, centralizer(g, phi))) == phi;
  return prof;
}

}  // namespace pgroup
