#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/ring.hpp"

namespace pgroup {

/// Largest Der(G,A) that is materialised element by element.
inline constexpr std::size_t kMaxDerivations = 19683;
/// Largest Der(G,A) for which full ring tables are built.
inline constexpr std::size_t kMaxRingOrder = 2187;

/// A map G -> A given by its value on every group element.
struct Derivation {
  std::vector<Elem> values;

  Elem operator()(Elem x) const noexcept { return values[x]; }
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// First pair (x, y) with d(xy) != d(x)^y d(y), if any.
std::optional<std::pair<Elem, Elem>> cocycle_violation(const FiniteGroup& g, const std::vector<Elem>& values);
bool is_derivation(const FiniteGroup& g, const Subgroup& a, const std::vector<Elem>& values);

/// Der(G, A) for an abelian normal A, with the ring operations
/// (d1 + d2)(x) = d1(x) d2(x) and (d1 d2)(x) = d2(d1(x)).
///
/// A derivation is determined by its values on a minimal generating set, so
/// the ring operations only touch those values.
class DerivationRing {
 public:
  DerivationRing() = default;

  const FiniteGroup& group() const noexcept { return g_; }
  const Subgroup& module() const noexcept { return a_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }

  std::size_t size() const noexcept { return elems_.size(); }
  const Derivation& operator[](std::size_t i) const noexcept { return elems_[i]; }
  const std::vector<Derivation>& elements() const noexcept { return elems_; }
  std::size_t zero() const noexcept { return zero_; }

  std::size_t add(std::size_t i, std::size_t j) const;
  std::size_t neg(std::size_t i) const;
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t circle(std::size_t i, std::size_t j) const { return add(add(i, j), mul(i, j)); }

  /// Index of the derivation with these values on the generators.
  std::optional<std::size_t> find_by_generators(const std::vector<Elem>& gen_values) const;
  /// Index of a derivation given on all of G (all values compared).
  std::optional<std::size_t> find(const std::vector<Elem>& values) const;

  /// Indices of the derivations whose values all lie in b.
  std::vector<std::size_t> with_values_in(const Subgroup& b) const;

  /// Materialised ring; throws TooLarge above kMaxRingOrder.
  FiniteRing ring() const;

  friend DerivationRing enumerate_derivations(const FiniteGroup& g, const Subgroup& a);

 private:
  std::uint64_t key(const std::vector<Elem>& gen_values) const;

  FiniteGroup g_;
  Subgroup a_;
  std::vector<Elem> gens_;
  std::vector<Elem> a_pos_;
  std::vector<Derivation> elems_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t zero_ = 0;
};

/// Greedy additive generating set of Der(G,A), as indices.
std::vector<std::size_t> additive_generators(const DerivationRing& d);

/// All derivations G -> A via the correspondence d <-> (x -> x d(x)) with
/// endomorphisms that fix G/A. Throws NotAbelian, NotNormal or TooLarge.
DerivationRing enumerate_derivations(const FiniteGroup& g, const Subgroup& a);

/// x -> x d(x) when that map is bijective.
std::optional<GroupHom> aut_from_derivation(const FiniteGroup& g, const Derivation& d);
/// x -> x^-1 sigma(x); throws NotInAutA if some value leaves a.
Derivation derivation_from_aut(const FiniteGroup& g, const Subgroup& a, const GroupHom& sigma);

/// Composition applying `first` and then `second`.
std::vector<Elem> compose(const std::vector<Elem>& first, const std::vector<Elem>& second);

/// Aut_N(G), members sorted by image table.
struct AutNView {
  Subgroup n;
  std::vector<GroupHom> members;
};

/// Calls `visit` on each member of Aut_N(G) in enumeration order (generator
/// images inside the cosets g N) until it returns false.
void for_each_aut_n(const FiniteGroup& g, const Subgroup& n, const std::function<bool(std::vector<Elem>&)>& visit);
/// Search over generator images inside the cosets g N; throws TooLarge
/// above kMaxDerivations members.
AutNView aut_n_direct(const FiniteGroup& g, const Subgroup& n);
/// Adjoint group of Der(G,N) mapped to automorphisms; N abelian normal.
AutNView aut_n_via_derivations(const FiniteGroup& g, const Subgroup& n);
/// Uses both routes when N is abelian and normal and requires agreement
/// (CrossCheckFailed otherwise); falls back to the direct search.
AutNView aut_n(const FiniteGroup& g, const Subgroup& n);

/// Up to this |Aut_A(G)| multiplicativity is checked on all pairs.
inline constexpr std::size_t kAllPairsAut = 729;

/// Outcome of checking that sigma -> d_sigma is an isomorphism
/// Aut_A(G) -> Der(G,A)°.
struct AutIsoCheck {
  std::size_t der_size = 0;
  std::size_t adjoint_size = 0;
  std::size_t aut_size = 0;
  bool bijective = false;
  bool multiplicative = false;
  bool holds() const noexcept { return aut_size == adjoint_size && bijective && multiplicative; }
};

AutIsoCheck check_aut_derivation_iso(const FiniteGroup& g, const Subgroup& a);

/// 0 -> Der(G,B) -> Der(G,A) -> Der(G/B, A/B).
struct RestrictionSequence {
  DerivationRing lower;
  DerivationRing middle;
  DerivationRing upper;
  Quotient quot;
  /// lower index -> middle index
  std::vector<std::size_t> embedding;
  /// middle index -> upper index
  std::vector<std::size_t> tilde;
  bool ring_homs = false;
  bool injective = false;
  /// ker(tilde) == image(embedding)
  bool exact_at_middle = false;
  std::size_t image_size = 0;
};

/// Throws NotInvariant if some derivation moves B outside B.
RestrictionSequence restriction_sequence(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

}  // namespace pgroup
