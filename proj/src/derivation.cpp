#include "pgroup/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pgroup/structure.hpp"

namespace pgroup {

std::optional<std::pair<Elem, Elem>> cocycle_violation(const FiniteGroup& g, const std::vector<Elem>& values) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (values[g.mul(x, y)] != g.mul(g.conjugate(values[x], y), values[y])) return std::pair{x, y};
  return std::nullopt;
}

bool is_derivation(const FiniteGroup& g, const Subgroup& a, const std::vector<Elem>& values) {
  if (values.size() != g.order()) return false;
  for (Elem v : values)
    if (!a.contains(v)) return false;
  return !cocycle_violation(g, values).has_value();
}

// ---------------------------------------------------------------------------
// DerivationRing

std::uint64_t DerivationRing::key(const std::vector<Elem>& gen_values) const {
  std::uint64_t k = 0;
  std::uint64_t w = 1;
  const std::uint64_t base = a_.order();
  for (Elem v : gen_values) {
    k += a_pos_[v] * w;
    w *= base;
  }
  return k;
}

std::optional<std::size_t> DerivationRing::find_by_generators(const std::vector<Elem>& gen_values) const {
  for (Elem v : gen_values)
    if (v >= a_pos_.size() || a_pos_[v] == kNoElem) return std::nullopt;
  auto it = index_.find(key(gen_values));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DerivationRing::find(const std::vector<Elem>& values) const {
  if (values.size() != g_.order()) return std::nullopt;
  std::vector<Elem> gv(gens_.size());
  for (std::size_t k = 0; k < gens_.size(); ++k) gv[k] = values[gens_[k]];
  auto idx = find_by_generators(gv);
  if (idx && elems_[*idx].values != values) return std::nullopt;
  return idx;
}

std::size_t DerivationRing::add(std::size_t i, std::size_t j) const {
  std::vector<Elem> gv(gens_.size());
  for (std::size_t k = 0; k < gens_.size(); ++k) gv[k] = g_.mul(elems_[i](gens_[k]), elems_[j](gens_[k]));
  return *find_by_generators(gv);
}

std::size_t DerivationRing::neg(std::size_t i) const {
  std::vector<Elem> gv(gens_.size());
  for (std::size_t k = 0; k < gens_.size(); ++k) gv[k] = g_.inv(elems_[i](gens_[k]));
  return *find_by_generators(gv);
}

std::size_t DerivationRing::mul(std::size_t i, std::size_t j) const {
  std::vector<Elem> gv(gens_.size());
  for (std::size_t k = 0; k < gens_.size(); ++k) gv[k] = elems_[j](elems_[i](gens_[k]));
  return *find_by_generators(gv);
}

std::vector<std::size_t> DerivationRing::with_values_in(const Subgroup& b) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (std::all_of(elems_[i].values.begin(), elems_[i].values.end(), [&](Elem v) { return b.contains(v); }))
      out.push_back(i);
  return out;
}

FiniteRing DerivationRing::ring() const {
  const std::size_t n = elems_.size();
  if (n > kMaxRingOrder)
    throw AlgebraError(Errc::too_large, "Der(G,A) of size " + std::to_string(n) + " is too large for ring tables");
  CayleyTable add_t(n, std::vector<Elem>(n)), mul_t(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add_t[i][j] = static_cast<Elem>(add(i, j));
      mul_t[i][j] = static_cast<Elem>(mul(i, j));
    }
  return make_ring(add_t, mul_t);
}

DerivationRing enumerate_derivations(const FiniteGroup& g, const Subgroup& a) {
  if (!is_abelian(g, a)) throw AlgebraError(Errc::not_abelian, "derivation module must be abelian");
  if (!is_normal(g, a)) throw AlgebraError(Errc::not_normal, "derivation module must be normal");
  DerivationRing d;
  d.g_ = g;
  d.a_ = a;
  d.gens_ = minimal_generating_set(g);
  d.a_pos_.assign(g.order(), kNoElem);
  // identity first so that the zero derivation gets index 0
  std::vector<Elem> a_el{g.identity()};
  for (Elem x : a.elements())
    if (x != g.identity()) a_el.push_back(x);
  for (std::size_t i = 0; i < a_el.size(); ++i) d.a_pos_[a_el[i]] = static_cast<Elem>(i);

  double assignments = 1;
  for (std::size_t k = 0; k < d.gens_.size(); ++k) assignments *= static_cast<double>(a_el.size());
  if (assignments > 5e6) throw AlgebraError(Errc::too_large, "too many generator assignments for Der(G,A)");

  const HomExtender ext(g, d.gens_);
  std::vector<std::size_t> idx(d.gens_.size(), 0);
  std::vector<Elem> images(d.gens_.size());
  std::vector<Elem> gen_values(d.gens_.size());
  while (true) {
    for (std::size_t k = 0; k < d.gens_.size(); ++k) {
      gen_values[k] = a_el[idx[k]];
      images[k] = g.mul(d.gens_[k], gen_values[k]);
    }
    if (auto phi = ext.extend(g, images)) {
      if (d.elems_.size() >= kMaxDerivations)
        throw AlgebraError(Errc::too_large, "Der(G,A) exceeds " + std::to_string(kMaxDerivations) + " elements");
      Derivation delta;
      delta.values.resize(g.order());
      for (Elem x = 0; x < g.order(); ++x) delta.values[x] = g.mul(g.inv(x), (*phi)[x]);
      d.index_.emplace(d.key(gen_values), d.elems_.size());
      d.elems_.push_back(std::move(delta));
    }
    std::size_t pos = idx.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < a_el.size()) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) break;
  }
  d.zero_ = 0;
  return d;
}

// ---------------------------------------------------------------------------
// Automorphisms

std::optional<GroupHom> aut_from_derivation(const FiniteGroup& g, const Derivation& d) {
  std::vector<Elem> image(g.order());
  ElementSet hit(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    image[x] = g.mul(x, d(x));
    if (hit.contains(image[x])) return std::nullopt;
    hit.insert(image[x]);
  }
  return GroupHom{g, g, std::move(image)};
}

Derivation derivation_from_aut(const FiniteGroup& g, const Subgroup& a, const GroupHom& sigma) {
  Derivation d;
  d.values.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    d.values[x] = g.mul(g.inv(x), sigma(x));
    if (!a.contains(d.values[x]))
      throw AlgebraError(Errc::not_in_aut_a, "sigma moves " + std::to_string(x) + " outside its coset xA");
  }
  return d;
}

std::vector<Elem> compose(const std::vector<Elem>& first, const std::vector<Elem>& second) {
  std::vector<Elem> out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[first[x]];
  return out;
}

namespace {

void sort_members(AutNView& v) {
  std::sort(v.members.begin(), v.members.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
}

}  // namespace

void for_each_aut_n(const FiniteGroup& g, const Subgroup& n, const std::function<bool(std::vector<Elem>&)>& visit) {
  const std::vector<Elem> gens = minimal_generating_set(g);
  const auto nel = n.elements();
  double assignments = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) assignments *= static_cast<double>(nel.size());
  if (assignments > 5e6) throw AlgebraError(Errc::too_large, "too many generator assignments for Aut_N(G)");
  const HomExtender ext(g, gens);
  std::vector<std::size_t> idx(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = g.mul(gens[k], nel[idx[k]]);
    if (auto phi = ext.extend(g, images)) {
      ElementSet hit(g.order());
      bool ok = true;
      for (Elem x = 0; x < g.order() && ok; ++x) {
        ok = !hit.contains((*phi)[x]) && n.contains(g.mul(g.inv(x), (*phi)[x]));
        hit.insert((*phi)[x]);
      }
      if (ok && !visit(*phi)) return;
    }
    std::size_t pos = idx.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < nel.size()) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) break;
  }
}

AutNView aut_n_direct(const FiniteGroup& g, const Subgroup& n) {
  AutNView v{n, {}};
  for_each_aut_n(g, n, [&](std::vector<Elem>& phi) {
    if (v.members.size() >= kMaxDerivations)
      throw AlgebraError(Errc::too_large, "Aut_N(G) exceeds " + std::to_string(kMaxDerivations) + " elements");
    v.members.push_back(GroupHom{g, g, std::move(phi)});
    return true;
  });
  sort_members(v);
  return v;
}

namespace {

/// x is a circle unit iff some circle power x^(k), k >= 1, is zero; the
/// powers are followed until they hit zero or repeat.
std::vector<std::size_t> circle_units(const DerivationRing& d) {
  std::vector<std::size_t> units;
  std::vector<std::size_t> stamp(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t cur = i;
    while (cur != d.zero() && stamp[cur] != i + 1) {
      stamp[cur] = i + 1;
      cur = d.circle(cur, i);
    }
    if (cur == d.zero()) units.push_back(i);
  }
  return units;
}

}  // namespace

AutNView aut_n_via_derivations(const FiniteGroup& g, const Subgroup& n) {
  const DerivationRing d = enumerate_derivations(g, n);
  AutNView v{n, {}};
  for (std::size_t i : circle_units(d)) {
    auto sigma = aut_from_derivation(g, d[i]);
    if (!sigma)
      throw AlgebraError(Errc::cross_check_failed, "circle-invertible derivation gives a non-bijective map");
    v.members.push_back(std::move(*sigma));
  }
  sort_members(v);
  return v;
}

AutNView aut_n(const FiniteGroup& g, const Subgroup& n) {
  AutNView direct = aut_n_direct(g, n);
  if (is_abelian(g, n) && is_normal(g, n)) {
    const AutNView via = aut_n_via_derivations(g, n);
    bool same = via.members.size() == direct.members.size();
    for (std::size_t i = 0; same && i < via.members.size(); ++i)
      same = via.members[i].image == direct.members[i].image;
    if (!same) throw AlgebraError(Errc::cross_check_failed, "Aut_N(G): direct search and derivation route disagree");
  }
  return direct;
}

AutIsoCheck check_aut_derivation_iso(const FiniteGroup& g, const Subgroup& a) {
  AutIsoCheck c;
  const DerivationRing d = enumerate_derivations(g, a);
  c.der_size = d.size();
  const auto units = circle_units(d);
  c.adjoint_size = units.size();
  const AutNView aut = aut_n_direct(g, a);
  c.aut_size = aut.members.size();

  std::vector<std::size_t> image;
  image.reserve(aut.members.size());
  for (const auto& sigma : aut.members) {
    auto idx = d.find(derivation_from_aut(g, a, sigma).values);
    if (!idx) return c;
    image.push_back(*idx);
  }
  std::vector<std::size_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  c.bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted == units;

  // All pairs for small groups; otherwise the first factor runs over a
  // generating set, which covers all pairs by induction on word length.
  std::vector<std::size_t> left;
  if (aut.members.size() <= kAllPairsAut) {
    for (std::size_t s = 0; s < aut.members.size(); ++s) left.push_back(s);
  } else {
    std::map<std::vector<Elem>, std::size_t> where;
    for (std::size_t s = 0; s < aut.members.size(); ++s) where.emplace(aut.members[s].image, s);
    std::vector<char> in(aut.members.size(), 0);
    for (std::size_t s = 0; s < aut.members.size(); ++s) {
      if (in[s]) continue;
      left.push_back(s);
      std::fill(in.begin(), in.end(), 0);
      std::vector<std::size_t> list;
      for (std::size_t e = 0; e < aut.members.size(); ++e)
        if (image[e] == d.zero()) list.push_back(e);
      for (std::size_t e : list) in[e] = 1;
      for (std::size_t k = 0; k < list.size(); ++k)
        for (std::size_t gen : left) {
          const auto it = where.find(compose(aut.members[list[k]].image, aut.members[gen].image));
          if (it == where.end()) {
            c.multiplicative = false;
            return c;
          }
          if (!in[it->second]) {
            in[it->second] = 1;
            list.push_back(it->second);
          }
        }
    }
  }
  const auto& gens = d.generators();
  std::vector<Elem> gv(gens.size());
  c.multiplicative = true;
  for (std::size_t s : left) {
    if (!c.multiplicative) break;
    for (std::size_t t = 0; t < aut.members.size(); ++t) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Elem st = aut.members[t](aut.members[s](gens[k]));
        gv[k] = g.mul(g.inv(gens[k]), st);
      }
      const auto composed = d.find_by_generators(gv);
      if (!composed || *composed != d.circle(image[s], image[t])) {
        c.multiplicative = false;
        break;
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Restriction sequence

std::vector<std::size_t> additive_generators(const DerivationRing& d) {
  std::vector<std::size_t> gens;
  std::vector<char> in(d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (in[i]) continue;
    gens.push_back(i);
    std::fill(in.begin(), in.end(), 0);
    std::vector<std::size_t> list{d.zero()};
    in[d.zero()] = 1;
    for (std::size_t k = 0; k < list.size(); ++k)
      for (std::size_t g : gens) {
        const std::size_t s = d.add(list[k], g);
        if (!in[s]) {
          in[s] = 1;
          list.push_back(s);
        }
      }
  }
  return gens;
}

RestrictionSequence restriction_sequence(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (!b.is_subgroup_of(a)) throw AlgebraError(Errc::invalid_input, "restriction sequence needs B <= A");
  if (!is_normal(g, b)) throw AlgebraError(Errc::not_normal, "B must be normal in G");
  RestrictionSequence rs;
  rs.middle = enumerate_derivations(g, a);
  const auto bel = b.elements();
  for (std::size_t i = 0; i < rs.middle.size(); ++i)
    for (Elem x : bel)
      if (!b.contains(rs.middle[i](x)))
        throw AlgebraError(Errc::not_invariant, "derivation " + std::to_string(i) + " moves " + std::to_string(x) +
                                                    " outside B");
  rs.lower = enumerate_derivations(g, b);
  rs.quot = quotient(g, b);
  rs.upper = enumerate_derivations(rs.quot.group, rs.quot.image(a));

  rs.embedding.resize(rs.lower.size());
  for (std::size_t i = 0; i < rs.lower.size(); ++i) {
    auto idx = rs.middle.find(rs.lower[i].values);
    if (!idx) throw AlgebraError(Errc::cross_check_failed, "Der(G,B) element missing from Der(G,A)");
    rs.embedding[i] = *idx;
  }
  const std::size_t qn = rs.quot.group.order();
  rs.tilde.resize(rs.middle.size());
  std::vector<Elem> qv(qn);
  for (std::size_t i = 0; i < rs.middle.size(); ++i) {
    for (std::size_t c = 0; c < qn; ++c) qv[c] = rs.quot.projection(rs.middle[i](rs.quot.representative[c]));
    auto idx = rs.upper.find(qv);
    if (!idx) throw AlgebraError(Errc::cross_check_failed, "induced map is not a derivation of G/B");
    rs.tilde[i] = *idx;
  }

  // Both maps are additive iff they respect sums with additive generators,
  // and multiplicative iff they respect products of additive generators.
  rs.ring_homs = true;
  const auto lg = additive_generators(rs.lower);
  for (std::size_t i = 0; i < rs.lower.size() && rs.ring_homs; ++i)
    for (std::size_t j : lg)
      if (rs.embedding[rs.lower.add(i, j)] != rs.middle.add(rs.embedding[i], rs.embedding[j])) rs.ring_homs = false;
  for (std::size_t i : lg)
    for (std::size_t j : lg)
      if (rs.embedding[rs.lower.mul(i, j)] != rs.middle.mul(rs.embedding[i], rs.embedding[j])) rs.ring_homs = false;
  const auto mg = additive_generators(rs.middle);
  for (std::size_t i = 0; i < rs.middle.size() && rs.ring_homs; ++i)
    for (std::size_t j : mg)
      if (rs.tilde[rs.middle.add(i, j)] != rs.upper.add(rs.tilde[i], rs.tilde[j])) rs.ring_homs = false;
  for (std::size_t i : mg)
    for (std::size_t j : mg)
      if (rs.tilde[rs.middle.mul(i, j)] != rs.upper.mul(rs.tilde[i], rs.tilde[j])) rs.ring_homs = false;

  std::set<std::size_t> emb(rs.embedding.begin(), rs.embedding.end());
  rs.injective = emb.size() == rs.embedding.size();
  std::set<std::size_t> ker;
  for (std::size_t i = 0; i < rs.middle.size(); ++i)
    if (rs.tilde[i] == rs.upper.zero()) ker.insert(i);
  rs.exact_at_middle = ker == emb;
  rs.image_size = std::set<std::size_t>(rs.tilde.begin(), rs.tilde.end()).size();
  return rs;
}

}  // namespace pgroup
