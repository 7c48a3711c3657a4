#include "pgroup/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pgroup/structure.hpp"

namespace pgroup {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::too_large: return "TooLarge";
    case Errc::not_associative: return "NotAssociative";
    case Errc::no_identity: return "NoIdentity";
    case Errc::no_inverse: return "NoInverse";
    case Errc::inconsistent_presentation: return "InconsistentPresentation";
    case Errc::not_homomorphism: return "NotHomomorphism";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_abelian: return "NotAbelian";
    case Errc::not_nilpotent: return "NotNilpotent";
    case Errc::cross_check_failed: return "CrossCheckFailed";
    case Errc::not_p_power: return "NotPPower";
    case Errc::not_abelian_add: return "NotAbelianAdd";
    case Errc::not_associative_mul: return "NotAssociativeMul";
    case Errc::not_distributive: return "NotDistributive";
    case Errc::not_p_ring: return "NotPRing";
    case Errc::not_radical: return "NotRadical";
    case Errc::not_in_aut_a: return "NotInAutA";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::not_maximal: return "NotMaximal";
    case Errc::decomposition_failed: return "DecompositionFailed";
    case Errc::no_solution: return "NoSolution";
    case Errc::not_well_defined: return "NotWellDefined";
    case Errc::not_cocycle: return "NotCocycle";
    case Errc::hypothesis_failed: return "HypothesisFailed";
    case Errc::unknown_check: return "UnknownCheck";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup() : FiniteGroup(build({0}, 1, {}, {})) {}

Elem FiniteGroup::power(Elem x, std::int64_t k) const noexcept {
  const auto ord = static_cast<std::int64_t>(element_order(x));
  k %= ord;
  if (k < 0) k += ord;
  Elem r = identity();
  Elem base = x;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) r = mul(r, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return r;
}

std::string FiniteGroup::label(Elem x) const {
  if (has_labels()) return d_->labels[x];
  return std::to_string(x);
}

CayleyTable FiniteGroup::cayley_table() const {
  CayleyTable t(n_, std::vector<Elem>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = mul(static_cast<Elem>(i), static_cast<Elem>(j));
  return t;
}

namespace {

// Generating set of the magma (closure under all products), lowest index
// first. Light's associativity test only needs to run over these.
std::vector<Elem> magma_generators(const std::vector<Elem>& t, std::size_t n) {
  std::vector<char> in(n, 0);
  std::vector<Elem> list;
  std::vector<Elem> gens;
  list.reserve(n);
  auto add = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  std::size_t processed = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(static_cast<Elem>(x));
    add(static_cast<Elem>(x));
    while (processed < list.size()) {
      const Elem a = list[processed];
      // pair a with every element added no later than a
      for (std::size_t i = 0; i <= processed; ++i) {
        const Elem b = list[i];
        add(t[a * n + b]);
        add(t[b * n + a]);
      }
      ++processed;
    }
  }
  return gens;
}

}  // namespace

FiniteGroup FiniteGroup::build(std::vector<Elem> flat, std::size_t n, std::vector<std::string> labels,
                               const BuildOptions& opts) {
  if (n == 0) throw AlgebraError(Errc::invalid_input, "empty table");
  if (n > opts.max_order)
    throw AlgebraError(Errc::too_large,
                       "order " + std::to_string(n) + " exceeds cap " + std::to_string(opts.max_order));
  for (auto v : flat)
    if (v >= n) throw AlgebraError(Errc::invalid_input, "table entry " + std::to_string(v) + " out of range");

  auto at = [&](std::size_t x, std::size_t y) { return flat[x * n + y]; };

  Elem e = kNoElem;
  for (std::size_t c = 0; c < n && e == kNoElem; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = static_cast<Elem>(c);
  }
  if (e == kNoElem) throw AlgebraError(Errc::no_identity, "no two-sided identity element");

  std::vector<Elem> inverse(n, kNoElem);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (at(x, y) == e && at(y, x) == e) {
        inverse[x] = static_cast<Elem>(y);
        break;
      }
    }
    if (inverse[x] == kNoElem)
      throw AlgebraError(Errc::no_inverse, "element " + std::to_string(x) + " has no two-sided inverse");
  }

  for (Elem g : magma_generators(flat, n)) {
    for (std::size_t x = 0; x < n; ++x) {
      const Elem xg = at(x, g);
      for (std::size_t y = 0; y < n; ++y) {
        if (at(xg, y) != at(x, at(g, y))) {
          std::ostringstream os;
          os << "(" << x << "*" << g << ")*" << y << " != " << x << "*(" << g << "*" << y << ")";
          throw AlgebraError(Errc::not_associative, os.str());
        }
      }
    }
  }

  auto d = std::make_shared<Data>();
  d->table = std::move(flat);
  d->inverse = std::move(inverse);
  d->identity = e;
  d->labels = std::move(labels);
  d->orders.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    Elem y = static_cast<Elem>(x);
    while (y != e) {
      y = d->table[y * n + x];
      ++k;
    }
    d->orders[x] = k;
  }
  for (std::size_t x = 0; x < n && d->abelian; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (d->table[x * n + y] != d->table[y * n + x]) {
        d->abelian = false;
        break;
      }

  // greedy generators via incremental closure
  std::vector<char> in(n, 0);
  std::vector<Elem> span{e};
  in[e] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (in[x]) continue;
    d->generators.push_back(static_cast<Elem>(x));
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (Elem g : d->generators) {
        const Elem y = d->table[span[i] * n + g];
        if (!in[y]) {
          in[y] = 1;
          span.push_back(y);
        }
      }
    }
  }
  return FiniteGroup(std::move(d), n);
}

FiniteGroup from_cayley_table(const CayleyTable& table, const BuildOptions& opts) {
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw AlgebraError(Errc::invalid_input, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteGroup::build(std::move(flat), n, {}, opts);
}

FiniteGroup with_labels(const FiniteGroup& g, std::vector<std::string> labels) {
  if (labels.size() != g.order()) throw AlgebraError(Errc::invalid_input, "label count mismatch");
  auto d = std::make_shared<FiniteGroup::Data>(*g.d_);
  d->labels = std::move(labels);
  return FiniteGroup(std::move(d), g.order());
}

FiniteGroup cyclic_group(std::size_t n) {
  CayleyTable t(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Elem>((i + j) % n);
  return from_cayley_table(t, {kInternalMaxOrder});
}

// ---------------------------------------------------------------------------
// Polycyclic presentations

namespace {

// Collection from the left, memoised as a table of right multiplications by
// single generators. Row k of that table only depends on rows > k, so the
// rows are filled from the last generator upwards.
class Collector {
 public:
  explicit Collector(const PcPresentation& pcp) : p_(pcp.p), rank_(pcp.rank) {
    pw_.assign(rank_ + 1, 1);
    for (unsigned i = 1; i <= rank_; ++i) pw_[i] = pw_[i - 1] * p_;
    n_ = pw_[rank_];
    power_.assign(rank_, 0);
    for (const auto& [i, w] : pcp.powers) power_[i] = encode(w);
    comm_.assign(static_cast<std::size_t>(rank_) * rank_, 0);
    for (const auto& [ji, w] : pcp.commutators) comm_[ji.first * rank_ + ji.second] = encode(w);
    right_.assign(n_ * rank_, 0);
    conj_.assign(static_cast<std::size_t>(rank_) * rank_, 0);
    for (unsigned k = rank_; k-- > 0;) {
      for (unsigned j = k + 1; j < rank_; ++j) conj_[j * rank_ + k] = multiply(unit(j), comm_[j * rank_ + k]);
      for (std::size_t w = 0; w < n_; ++w) right_[w * rank_ + k] = right_mult(w, k);
    }
  }

  std::size_t order() const noexcept { return n_; }

  std::size_t multiply(std::size_t u, std::size_t v) const {
    for (unsigned l = 0; l < rank_; ++l) {
      const std::size_t e = digit(v, l);
      for (std::size_t c = 0; c < e; ++c) u = right_[u * rank_ + l];
    }
    return u;
  }

 private:
  std::size_t digit(std::size_t w, unsigned i) const noexcept { return (w / pw_[i]) % p_; }
  std::size_t unit(unsigned i) const noexcept { return pw_[i]; }
  std::size_t encode(const std::vector<unsigned>& w) const {
    std::size_t r = 0;
    for (unsigned i = 0; i < w.size() && i < rank_; ++i) r += static_cast<std::size_t>(w[i] % p_) * pw_[i];
    return r;
  }

  std::size_t right_mult(std::size_t w, unsigned k) const {
    const std::size_t prefix = w % pw_[k];
    const std::size_t ek = digit(w, k);
    // tail^{g_k}, a word in generators > k
    std::size_t tailc = 0;
    for (unsigned j = k + 1; j < rank_; ++j)
      for (std::size_t c = digit(w, j); c > 0; --c) tailc = multiply(tailc, conj_[j * rank_ + k]);
    if (ek + 1 < p_) return prefix + (ek + 1) * pw_[k] + tailc;
    return prefix + multiply(power_[k], tailc);
  }

  std::size_t p_;
  unsigned rank_;
  std::size_t n_ = 1;
  std::vector<std::size_t> pw_;
  std::vector<std::size_t> power_;
  std::vector<std::size_t> comm_;
  std::vector<std::size_t> conj_;
  std::vector<std::size_t> right_;
};

std::string word_label(std::size_t w, unsigned p, unsigned rank) {
  std::string s;
  for (unsigned i = 0; i < rank; ++i) {
    const std::size_t e = w % p;
    w /= p;
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "g" + std::to_string(i + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

namespace {

std::size_t validate_presentation(const PcPresentation& pcp, const BuildOptions& opts) {
  if (!is_prime(pcp.p)) throw AlgebraError(Errc::invalid_input, "p must be prime");
  std::size_t n = 1;
  for (unsigned i = 0; i < pcp.rank; ++i) {
    n *= pcp.p;
    if (n > opts.max_order)
      throw AlgebraError(Errc::too_large, "presentation order exceeds cap " + std::to_string(opts.max_order));
  }
  auto check_word = [&](const std::vector<unsigned>& w, unsigned after, const std::string& what) {
    if (w.size() > pcp.rank) throw AlgebraError(Errc::invalid_input, what + ": word longer than rank");
    for (unsigned i = 0; i < w.size(); ++i) {
      if (w[i] >= pcp.p) throw AlgebraError(Errc::invalid_input, what + ": exponent out of [0,p)");
      if (i <= after && w[i] != 0)
        throw AlgebraError(Errc::invalid_input, what + ": relation is not triangular");
    }
  };
  for (const auto& [i, w] : pcp.powers) {
    if (i >= pcp.rank) throw AlgebraError(Errc::invalid_input, "power relation for unknown generator");
    check_word(w, i, "power of g" + std::to_string(i + 1));
  }
  for (const auto& [ji, w] : pcp.commutators) {
    if (ji.first >= pcp.rank || ji.second >= ji.first)
      throw AlgebraError(Errc::invalid_input, "commutator relation must be [g_j,g_i] with j>i");
    check_word(w, ji.first, "commutator [g" + std::to_string(ji.first + 1) + ",g" + std::to_string(ji.second + 1) + "]");
  }

  return n;
}

}  // namespace

bool is_consistent(const PcPresentation& pcp, const BuildOptions& opts) {
  validate_presentation(pcp, opts);
  const Collector col(pcp);
  const unsigned p = pcp.p;
  std::vector<std::size_t> unit(pcp.rank, 1), top(pcp.rank);
  for (unsigned i = 1; i < pcp.rank; ++i) unit[i] = unit[i - 1] * p;
  for (unsigned i = 0; i < pcp.rank; ++i) {
    top[i] = 0;
    for (unsigned e = 0; e + 1 < p; ++e) top[i] = col.multiply(top[i], unit[i]);
  }
  const auto m = [&](std::size_t a, std::size_t b) { return col.multiply(a, b); };
  for (unsigned k = 0; k < pcp.rank; ++k)
    for (unsigned j = 0; j < k; ++j)
      for (unsigned i = 0; i < j; ++i)
        if (m(m(unit[k], unit[j]), unit[i]) != m(unit[k], m(unit[j], unit[i]))) return false;
  for (unsigned j = 0; j < pcp.rank; ++j)
    for (unsigned i = 0; i < j; ++i) {
      if (m(m(top[j], unit[j]), unit[i]) != m(top[j], m(unit[j], unit[i]))) return false;
      if (m(m(unit[j], unit[i]), top[i]) != m(unit[j], m(unit[i], top[i]))) return false;
    }
  for (unsigned i = 0; i < pcp.rank; ++i)
    if (m(m(unit[i], top[i]), unit[i]) != m(unit[i], m(top[i], unit[i]))) return false;
  return true;
}

FiniteGroup from_pc_presentation(const PcPresentation& pcp, const BuildOptions& opts) {
  const std::size_t n = validate_presentation(pcp, opts);
  Collector col(pcp);
  CayleyTable t(n, std::vector<Elem>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) t[u][v] = static_cast<Elem>(col.multiply(u, v));

  FiniteGroup g;
  try {
    g = from_cayley_table(t, opts);
  } catch (const AlgebraError& e) {
    if (e.code() == Errc::too_large) throw;
    throw AlgebraError(Errc::inconsistent_presentation, e.what());
  }
  std::vector<std::string> labels(n);
  for (std::size_t w = 0; w < n; ++w) labels[w] = word_label(w, pcp.p, pcp.rank);
  return with_labels(g, std::move(labels));
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(g.identity());
  return Subgroup(std::move(s));
}

Subgroup Subgroup::whole(const FiniteGroup& g) { return Subgroup(ElementSet::full(g.order())); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) { return Subgroup(a.members() & b.members()); }

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  ElementSet in(g.order());
  std::vector<Elem> list{g.identity()};
  in.insert(g.identity());
  std::vector<Elem> uniq;
  for (Elem x : gens)
    if (std::find(uniq.begin(), uniq.end(), x) == uniq.end() && x != g.identity()) uniq.push_back(x);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem s : uniq) {
      const Elem y = g.mul(list[i], s);
      if (!in.contains(y)) {
        in.insert(y);
        list.push_back(y);
      }
    }
  }
  return Subgroup(std::move(in));
}

Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& gens) {
  // Only keep generators that enlarge the running span.
  ElementSet span(g.order());
  span.insert(g.identity());
  std::vector<Elem> kept;
  for (Elem x : gens.elements()) {
    if (span.contains(x)) continue;
    kept.push_back(x);
    span = subgroup_closure(g, kept).members();
  }
  return Subgroup(std::move(span));
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  return subgroup_closure(g, a.members() | b.members());
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  ElementSet comms(g.order());
  const auto ae = a.elements();
  const auto be = b.elements();
  for (Elem x : ae)
    for (Elem y : be) comms.insert(g.commutator(x, y));
  return subgroup_closure(g, comms);
}

bool is_abelian(const FiniteGroup& g, const Subgroup& s) {
  const auto el = s.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (g.mul(el[i], el[j]) != g.mul(el[j], el[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Homomorphisms

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<Elem> image) {
  if (image.size() != source.order()) throw AlgebraError(Errc::invalid_input, "image table has wrong size");
  for (Elem v : image)
    if (v >= target.order()) throw AlgebraError(Errc::invalid_input, "image out of range");
  const auto n = static_cast<Elem>(source.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (image[source.mul(x, y)] != target.mul(image[x], image[y]))
        throw AlgebraError(Errc::not_homomorphism,
                           "h(" + std::to_string(x) + "*" + std::to_string(y) + ") != h(x)h(y)");
  return GroupHom{std::move(source), std::move(target), std::move(image)};
}

Subgroup kernel(const GroupHom& h) {
  ElementSet k(h.source.order());
  for (Elem x = 0; x < h.source.order(); ++x)
    if (h.image[x] == h.target.identity()) k.insert(x);
  return Subgroup(std::move(k));
}

Subgroup image_of(const GroupHom& h) {
  ElementSet s(h.target.order());
  for (Elem v : h.image) s.insert(v);
  return Subgroup(std::move(s));
}

bool is_bijective(const GroupHom& h) {
  return h.source.order() == h.target.order() && image_of(h).order() == h.target.order();
}

HomExtender::HomExtender(const FiniteGroup& source, std::vector<Elem> gens)
    : order_(source.order()), identity_(source.identity()), gens_(std::move(gens)) {
  std::vector<char> seen(order_, 0);
  std::vector<Elem> list{identity_};
  seen[identity_] = 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::uint32_t k = 0; k < gens_.size(); ++k) {
      const Elem y = source.mul(list[i], gens_[k]);
      if (!seen[y]) {
        seen[y] = 1;
        list.push_back(y);
        tree_.push_back({list[i], k, y});
      } else {
        checks_.push_back({list[i], k, y});
      }
    }
  }
  if (list.size() != order_) throw AlgebraError(Errc::invalid_input, "HomExtender: generators do not generate");
}

std::optional<std::vector<Elem>> HomExtender::extend(const FiniteGroup& target, std::span<const Elem> images) const {
  std::vector<Elem> phi(order_, kNoElem);
  phi[identity_] = target.identity();
  for (const auto& s : tree_) phi[s.to] = target.mul(phi[s.from], images[s.gen]);
  for (const auto& s : checks_)
    if (phi[s.to] != target.mul(phi[s.from], images[s.gen])) return std::nullopt;
  return phi;
}

std::vector<GroupHom> all_homs(const FiniteGroup& g, const FiniteGroup& t) {
  if (!t.is_abelian()) throw AlgebraError(Errc::not_abelian, "all_homs requires an abelian target");
  const std::vector<Elem> gens = minimal_generating_set(g);
  HomExtender ext(g, gens);
  std::vector<GroupHom> out;
  std::vector<Elem> idx(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  const auto m = static_cast<Elem>(t.order());
  // identity first so that the zero map leads the list
  std::vector<Elem> targets{t.identity()};
  for (Elem v = 0; v < m; ++v)
    if (v != t.identity()) targets.push_back(v);
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = targets[idx[i]];
    if (auto phi = ext.extend(t, images)) out.push_back(GroupHom{g, t, std::move(*phi)});
    std::size_t pos = gens.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < m) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

// ---------------------------------------------------------------------------
// Quotients and subgroup views

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw AlgebraError(Errc::not_normal, "quotient by a non-normal subgroup");
  const std::size_t order = g.order();
  std::vector<Elem> coset(order, kNoElem);
  std::vector<Elem> reps;
  const auto nel = n.elements();
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != kNoElem) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : nel) coset[g.mul(x, k)] = id;
  }
  const std::size_t m = reps.size();
  CayleyTable t(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i][j] = coset[g.mul(reps[i], reps[j])];
  FiniteGroup q = from_cayley_table(t, {kInternalMaxOrder});
  if (g.has_labels()) {
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = g.label(reps[i]) + "N";
    q = with_labels(q, std::move(labels));
  }
  GroupHom proj = make_hom(g, q, std::move(coset));
  return Quotient{std::move(q), std::move(proj), std::move(reps)};
}

Subgroup Quotient::image(const Subgroup& s) const {
  ElementSet out(group.order());
  for (Elem x : s.elements()) out.insert(projection(x));
  return Subgroup(std::move(out));
}

Subgroup Quotient::preimage(const Subgroup& s) const {
  ElementSet out(projection.source.order());
  for (Elem x = 0; x < projection.source.order(); ++x)
    if (s.contains(projection(x))) out.insert(x);
  return Subgroup(std::move(out));
}

SubgroupView subgroup_view(const FiniteGroup& g, const Subgroup& s) {
  SubgroupView v;
  v.to_parent = s.elements();
  v.from_parent.assign(g.order(), kNoElem);
  for (std::size_t i = 0; i < v.to_parent.size(); ++i) v.from_parent[v.to_parent[i]] = static_cast<Elem>(i);
  const std::size_t m = v.to_parent.size();
  CayleyTable t(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Elem prod = v.from_parent[g.mul(v.to_parent[i], v.to_parent[j])];
      if (prod == kNoElem) throw AlgebraError(Errc::invalid_input, "subgroup_view: set is not closed");
      t[i][j] = prod;
    }
  v.group = from_cayley_table(t, {kInternalMaxOrder});
  if (g.has_labels()) {
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = g.label(v.to_parent[i]);
    v.group = with_labels(v.group, std::move(labels));
  }
  return v;
}

Subgroup SubgroupView::lift(const Subgroup& inner) const {
  ElementSet out(from_parent.size());
  for (Elem x : inner.elements()) out.insert(to_parent[x]);
  return Subgroup(std::move(out));
}

Subgroup SubgroupView::restrict(const Subgroup& outer) const {
  ElementSet out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    if (outer.contains(to_parent[i])) out.insert(static_cast<Elem>(i));
  return Subgroup(std::move(out));
}

}  // namespace pgroup
