#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

/// Finite associative ring, not necessarily unital, on indices 0..order-1.
class FiniteRing {
 public:
  FiniteRing();

  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return d_->zero; }
  Elem add(Elem x, Elem y) const noexcept { return d_->add[static_cast<std::size_t>(x) * n_ + y]; }
  Elem neg(Elem x) const noexcept { return d_->neg[x]; }
  Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const noexcept { return d_->mul[static_cast<std::size_t>(x) * n_ + y]; }
  /// m . x in the additive group (m may be negative).
  Elem times(std::int64_t m, Elem x) const noexcept;
  /// x o y = x + y + xy
  Elem circle(Elem x, Elem y) const noexcept { return add(add(x, y), mul(x, y)); }

  /// Generators of the additive group.
  std::span<const Elem> additive_generators() const noexcept { return d_->additive.generators(); }
  const FiniteGroup& additive_group() const noexcept { return d_->additive; }

  CayleyTable add_table() const;
  CayleyTable mul_table() const;

  friend FiniteRing make_ring(const CayleyTable& add, const CayleyTable& mul);

 private:
  struct Data {
    FiniteGroup additive;
    std::vector<Elem> add;
    std::vector<Elem> neg;
    std::vector<Elem> mul;
    Elem zero = 0;
  };
  FiniteRing(std::shared_ptr<const Data> d, std::size_t n) : d_(std::move(d)), n_(n) {}

  std::shared_ptr<const Data> d_;
  std::size_t n_ = 1;
};

/// Validates the additive abelian group, both distributive laws and
/// associativity of multiplication. Distributivity is checked against the
/// additive generators and associativity on generator triples, which is
/// exact once both products are known to be biadditive.
FiniteRing make_ring(const CayleyTable& add, const CayleyTable& mul);

FiniteRing null_ring(std::size_t n);
FiniteRing zmod_ring(std::size_t n);
/// The ideal mZ/nZ of Z/nZ, reindexed so that element k stands for k*m.
FiniteRing multiple_ring(std::size_t m, std::size_t n);
/// Strictly upper triangular dim x dim matrices over Z/p.
FiniteRing strictly_upper_triangular_ring(unsigned p, unsigned dim);

/// x^(m) in the adjoint monoid: x^(0) = 0, x^(m) = x^(m-1) o x.
Elem adjoint_power(const FiniteRing& r, Elem x, std::size_t m);

/// R° restricted to the circle-invertible elements.
struct AdjointGroupView {
  ElementSet members;
  FiniteGroup group;
  /// group index -> ring element
  std::vector<Elem> to_ring;
  /// ring element -> group index, kNoElem outside members
  std::vector<Elem> from_ring;
};

AdjointGroupView adjoint_group(const FiniteRing& r, std::size_t max_order = kInternalMaxOrder);
bool is_radical(const FiniteRing& r);
/// sum_{i>=1} (-1)^i x^i; the circle inverse of x when x is nilpotent.
Elem series_circle_inverse(const FiniteRing& r, Elem x);

/// Additive subgroup generated by the given set.
ElementSet additive_span(const FiniteRing& r, const ElementSet& s);
/// R^n (R^1 = R).
ElementSet power_ideal(const FiniteRing& r, std::size_t n);
/// Least n with R^(n+1) = 0, or nullopt when R is not nilpotent.
std::optional<std::size_t> nilpotency_degree(const FiniteRing& r);

/// Prime of the additive group; throws NotPRing if the order is not a
/// prime power. Returns 0 for the zero ring.
unsigned additive_prime(const FiniteRing& r);
std::size_t additive_exponent(const FiniteRing& r);
bool is_right_p_nil(const FiniteRing& r);
bool is_left_p_nil(const FiniteRing& r);

/// {x : p^n x = 0}
ElementSet omega_additive(const FiniteRing& r, unsigned n);
/// {x : x^(p^n) = 0}; throws NotRadical unless R° = R.
ElementSet omega_set_adjoint(const FiniteRing& r, unsigned n);
/// Subgroup of R° generated by omega_set_adjoint, as ring elements.
ElementSet omega_adjoint(const FiniteRing& r, unsigned n);

bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& i);

struct QuotientRing {
  FiniteRing ring;
  /// ring element -> coset index
  std::vector<Elem> coset;
  std::vector<Elem> representative;
};

/// Throws InvalidInput unless `i` is a two-sided ideal.
QuotientRing quotient_ring(const FiniteRing& r, const ElementSet& i);

}  // namespace pgroup
