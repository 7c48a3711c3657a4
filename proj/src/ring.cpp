#include "pgroup/ring.hpp"

#include <algorithm>
#include <string>

namespace pgroup {

namespace {

std::vector<Elem> flatten(const CayleyTable& t, std::size_t n, const char* what) {
  if (t.size() != n) throw AlgebraError(Errc::invalid_input, std::string(what) + " table has wrong size");
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : t) {
    if (row.size() != n) throw AlgebraError(Errc::invalid_input, std::string(what) + " table is not square");
    for (Elem v : row)
      if (v >= n) throw AlgebraError(Errc::invalid_input, std::string(what) + " entry out of range");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

FiniteRing::FiniteRing() : FiniteRing(make_ring({{0}}, {{0}})) {}

Elem FiniteRing::times(std::int64_t m, Elem x) const noexcept {
  if (m < 0) return times(-m, neg(x));
  Elem r = zero();
  Elem base = x;
  auto e = static_cast<std::uint64_t>(m);
  while (e != 0) {
    if (e & 1U) r = add(r, base);
    base = add(base, base);
    e >>= 1U;
  }
  return r;
}

CayleyTable FiniteRing::add_table() const {
  CayleyTable t(n_, std::vector<Elem>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = add(static_cast<Elem>(i), static_cast<Elem>(j));
  return t;
}

CayleyTable FiniteRing::mul_table() const {
  CayleyTable t(n_, std::vector<Elem>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = mul(static_cast<Elem>(i), static_cast<Elem>(j));
  return t;
}

FiniteRing make_ring(const CayleyTable& add, const CayleyTable& mul) {
  const std::size_t n = add.size();
  if (n == 0) throw AlgebraError(Errc::invalid_input, "empty ring");
  auto d = std::make_shared<FiniteRing::Data>();
  d->add = flatten(add, n, "add");
  d->mul = flatten(mul, n, "mul");
  try {
    d->additive = from_cayley_table(add, {kInternalMaxOrder});
  } catch (const AlgebraError& e) {
    throw AlgebraError(Errc::not_abelian_add, e.what());
  }
  if (!d->additive.is_abelian()) throw AlgebraError(Errc::not_abelian_add, "addition is not commutative");
  d->zero = d->additive.identity();
  d->neg.resize(n);
  for (Elem x = 0; x < n; ++x) d->neg[x] = d->additive.inv(x);

  auto A = [&](Elem x, Elem y) { return d->add[x * n + y]; };
  auto M = [&](Elem x, Elem y) { return d->mul[x * n + y]; };
  const auto gens = d->additive.generators();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem g : gens) {
        if (M(x, A(y, g)) != A(M(x, y), M(x, g)))
          throw AlgebraError(Errc::not_distributive, std::to_string(x) + "*(" + std::to_string(y) + "+" +
                                                         std::to_string(g) + ") != xy + xg");
        if (M(A(y, g), x) != A(M(y, x), M(g, x)))
          throw AlgebraError(Errc::not_distributive, "(" + std::to_string(y) + "+" + std::to_string(g) + ")*" +
                                                         std::to_string(x) + " != yx + gx");
      }
  for (Elem a : gens)
    for (Elem b : gens)
      for (Elem c : gens)
        if (M(M(a, b), c) != M(a, M(b, c)))
          throw AlgebraError(Errc::not_associative_mul, "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                                            std::to_string(c) + " != a*(b*c)");
  return FiniteRing(std::move(d), n);
}

FiniteRing null_ring(std::size_t n) {
  CayleyTable add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) add[i][j] = static_cast<Elem>((i + j) % n);
  return make_ring(add, mul);
}

FiniteRing zmod_ring(std::size_t n) { return multiple_ring(1, n); }

FiniteRing multiple_ring(std::size_t m, std::size_t n) {
  if (m == 0 || n % m != 0) throw AlgebraError(Errc::invalid_input, "multiple_ring needs m | n");
  const std::size_t size = n / m;
  CayleyTable add(size, std::vector<Elem>(size)), mul(size, std::vector<Elem>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      add[i][j] = static_cast<Elem>((i + j) % size);
      mul[i][j] = static_cast<Elem>(((i * m) * (j * m) % n) / m);
    }
  return make_ring(add, mul);
}

FiniteRing strictly_upper_triangular_ring(unsigned p, unsigned dim) {
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = i + 1; j < dim; ++j) slots.emplace_back(i, j);
  std::size_t n = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) n *= p;
  auto decode = [&](std::size_t x) {
    std::vector<std::vector<unsigned>> m(dim, std::vector<unsigned>(dim, 0));
    for (const auto& [i, j] : slots) {
      m[i][j] = static_cast<unsigned>(x % p);
      x /= p;
    }
    return m;
  };
  auto encode = [&](const std::vector<std::vector<unsigned>>& m) {
    std::size_t x = 0, w = 1;
    for (const auto& [i, j] : slots) {
      x += m[i][j] % p * w;
      w *= p;
    }
    return static_cast<Elem>(x);
  };
  CayleyTable add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const auto ma = decode(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto mb = decode(b);
      std::vector<std::vector<unsigned>> s(dim, std::vector<unsigned>(dim, 0)), t = s;
      for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = 0; j < dim; ++j) {
          s[i][j] = (ma[i][j] + mb[i][j]) % p;
          unsigned acc = 0;
          for (unsigned k = 0; k < dim; ++k) acc += ma[i][k] * mb[k][j];
          t[i][j] = acc % p;
        }
      add[a][b] = encode(s);
      mul[a][b] = encode(t);
    }
  }
  return make_ring(add, mul);
}

Elem adjoint_power(const FiniteRing& r, Elem x, std::size_t m) {
  Elem acc = r.zero();
  for (std::size_t i = 0; i < m; ++i) acc = r.circle(acc, x);
  return acc;
}

AdjointGroupView adjoint_group(const FiniteRing& r, std::size_t max_order) {
  const auto n = static_cast<Elem>(r.order());
  AdjointGroupView v;
  v.members = ElementSet(n);
  v.from_ring.assign(n, kNoElem);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (r.circle(x, y) == r.zero() && r.circle(y, x) == r.zero()) {
        v.members.insert(x);
        break;
      }
  v.to_ring = v.members.elements();
  for (std::size_t i = 0; i < v.to_ring.size(); ++i) v.from_ring[v.to_ring[i]] = static_cast<Elem>(i);
  const std::size_t m = v.to_ring.size();
  CayleyTable t(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i][j] = v.from_ring[r.circle(v.to_ring[i], v.to_ring[j])];
  v.group = from_cayley_table(t, {max_order});
  return v;
}

bool is_radical(const FiniteRing& r) {
  const auto n = static_cast<Elem>(r.order());
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) found = r.circle(x, y) == r.zero() && r.circle(y, x) == r.zero();
    if (!found) return false;
  }
  return true;
}

Elem series_circle_inverse(const FiniteRing& r, Elem x) {
  Elem sum = r.zero();
  Elem pw = x;
  for (std::size_t i = 1; i <= r.order() + 1 && pw != r.zero(); ++i) {
    sum = r.add(sum, (i % 2 == 1) ? r.neg(pw) : pw);
    pw = r.mul(pw, x);
  }
  return sum;
}

ElementSet additive_span(const FiniteRing& r, const ElementSet& s) {
  return subgroup_closure(r.additive_group(), s).members();
}

ElementSet power_ideal(const FiniteRing& r, std::size_t n) {
  if (n == 0) throw AlgebraError(Errc::invalid_input, "power_ideal needs n >= 1");
  ElementSet cur = ElementSet::full(r.order());
  for (std::size_t k = 1; k < n; ++k) {
    ElementSet prods(r.order());
    for (Elem a : cur.elements())
      for (Elem g : r.additive_generators()) prods.insert(r.mul(a, g));
    prods.insert(r.zero());
    ElementSet next = additive_span(r, prods);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  return cur;
}

std::optional<std::size_t> nilpotency_degree(const FiniteRing& r) {
  ElementSet cur = ElementSet::full(r.order());
  for (std::size_t k = 1;; ++k) {
    // cur = R^k
    if (cur.count() == 1) return k == 1 ? std::optional<std::size_t>{0} : std::optional<std::size_t>{k - 1};
    ElementSet prods(r.order());
    for (Elem a : cur.elements())
      for (Elem g : r.additive_generators()) prods.insert(r.mul(a, g));
    prods.insert(r.zero());
    ElementSet next = additive_span(r, prods);
    if (next == cur) return std::nullopt;
    cur = std::move(next);
  }
}

unsigned additive_prime(const FiniteRing& r) {
  std::size_t n = r.order();
  if (n == 1) return 0;
  unsigned p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) throw AlgebraError(Errc::not_p_ring, "additive order " + std::to_string(r.order()) + " is not a prime power");
  return p;
}

std::size_t additive_exponent(const FiniteRing& r) {
  std::size_t e = 1;
  for (Elem x = 0; x < r.order(); ++x) e = std::max(e, r.additive_group().element_order(x));
  return e;
}

bool is_right_p_nil(const FiniteRing& r) {
  const unsigned p = additive_prime(r);
  if (p == 0) return true;
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.times(p, x) != r.zero()) continue;
    for (Elem y = 0; y < r.order(); ++y)
      if (r.mul(y, x) != r.zero()) return false;
  }
  return true;
}

bool is_left_p_nil(const FiniteRing& r) {
  const unsigned p = additive_prime(r);
  if (p == 0) return true;
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.times(p, x) != r.zero()) continue;
    for (Elem y = 0; y < r.order(); ++y)
      if (r.mul(x, y) != r.zero()) return false;
  }
  return true;
}

namespace {

std::size_t prime_power(unsigned p, unsigned n) {
  std::size_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= p;
  return q;
}

}  // namespace

ElementSet omega_additive(const FiniteRing& r, unsigned n) {
  const unsigned p = additive_prime(r);
  ElementSet out(r.order());
  const std::size_t q = p == 0 ? 1 : prime_power(p, n);
  for (Elem x = 0; x < r.order(); ++x)
    if (r.times(static_cast<std::int64_t>(q), x) == r.zero()) out.insert(x);
  return out;
}

ElementSet omega_set_adjoint(const FiniteRing& r, unsigned n) {
  const unsigned p = additive_prime(r);
  if (!is_radical(r)) throw AlgebraError(Errc::not_radical, "adjoint omega needs R° = R");
  ElementSet out(r.order());
  const std::size_t q = p == 0 ? 1 : prime_power(p, n);
  for (Elem x = 0; x < r.order(); ++x)
    if (adjoint_power(r, x, q) == r.zero()) out.insert(x);
  return out;
}

ElementSet omega_adjoint(const FiniteRing& r, unsigned n) {
  const ElementSet set = omega_set_adjoint(r, n);
  const AdjointGroupView v = adjoint_group(r);
  ElementSet inner(v.group.order());
  for (Elem x : set.elements()) inner.insert(v.from_ring[x]);
  ElementSet out(r.order());
  for (Elem y : subgroup_closure(v.group, inner).elements()) out.insert(v.to_ring[y]);
  return out;
}

bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& ideal) {
  if (!ideal.contains(r.zero())) return false;
  const auto el = ideal.elements();
  for (Elem a : el) {
    for (Elem b : el)
      if (!ideal.contains(r.add(a, b))) return false;
    for (Elem x = 0; x < r.order(); ++x)
      if (!ideal.contains(r.mul(a, x)) || !ideal.contains(r.mul(x, a))) return false;
  }
  return true;
}

QuotientRing quotient_ring(const FiniteRing& r, const ElementSet& ideal) {
  if (!is_two_sided_ideal(r, ideal)) throw AlgebraError(Errc::invalid_input, "quotient by a non-ideal");
  QuotientRing q;
  q.coset.assign(r.order(), kNoElem);
  const auto el = ideal.elements();
  for (Elem x = 0; x < r.order(); ++x) {
    if (q.coset[x] != kNoElem) continue;
    const auto id = static_cast<Elem>(q.representative.size());
    q.representative.push_back(x);
    for (Elem a : el) q.coset[r.add(x, a)] = id;
  }
  const std::size_t m = q.representative.size();
  CayleyTable add(m, std::vector<Elem>(m)), mul(m, std::vector<Elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = q.coset[r.add(q.representative[i], q.representative[j])];
      mul[i][j] = q.coset[r.mul(q.representative[i], q.representative[j])];
    }
  q.ring = make_ring(add, mul);
  return q;
}

}  // namespace pgroup
