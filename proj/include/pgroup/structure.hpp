#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

/// Three-valued answer for predicates that are only decided below a size cap.
enum class Tri { no, yes, unknown };
std::string_view to_string(Tri t) noexcept;

/// Order cap for full subgroup-lattice enumeration.
inline constexpr std::size_t kLatticeMaxOrder = 243;

Subgroup center(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer(const FiniteGroup& g, Elem x);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

/// zeta_0 = 1, zeta_1, ..., ending at G. Throws NotNilpotent on a stall.
std::vector<Subgroup> upper_central_series(const FiniteGroup& g);
/// gamma_1 = G, gamma_2, ..., ending at 1. Throws NotNilpotent on a stall.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
std::size_t nilpotency_class(const FiniteGroup& g);

/// The prime p with |G| = p^n. Throws NotPPower otherwise (including |G| = 1).
unsigned prime_of(const FiniteGroup& g);
/// n with |G| = p^n, 0 for the trivial group.
unsigned log_order(const FiniteGroup& g);

/// <x^m : x in S>
Subgroup power_subgroup(const FiniteGroup& g, const Subgroup& s, std::size_t m);
Subgroup power_subgroup(const FiniteGroup& g, std::size_t m);
/// {x in S : x^(p^n) = 1} and the subgroup it generates.
ElementSet omega_set(const FiniteGroup& g, const Subgroup& s, unsigned n);
Subgroup omega(const FiniteGroup& g, const Subgroup& s, unsigned n);

/// Intersection of all maximal subgroups, computed from the kernels of
/// G -> C_p and cross-checked against <G^p, [G,G]>.
Subgroup frattini(const FiniteGroup& g);
/// Preimages of a basis of G/Phi(G), lowest index first. Empty for |G| = 1.
std::vector<Elem> minimal_generating_set(const FiniteGroup& g);
std::size_t generator_rank(const FiniteGroup& g);
/// All subgroups of index p, sorted by bitmask.
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g);

std::size_t exponent(const FiniteGroup& g, const Subgroup& s);
/// Invariant factors (as orders, ascending) of an abelian p-group, from the
/// census of element orders.
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g, const Subgroup& s);
std::vector<std::size_t> abelian_invariants(const FiniteGroup& g);
bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& s);

/// Every subgroup, grown by the cyclic extension method and sorted by
/// bitmask. Throws TooLarge above `max_order`.
std::vector<Subgroup> subgroup_lattice(const FiniteGroup& g, std::size_t max_order = kLatticeMaxOrder);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t max_order = kLatticeMaxOrder);

bool is_powerful(const FiniteGroup& g);
Tri is_purely_nonabelian(const FiniteGroup& g, std::size_t lattice_cap = kLatticeMaxOrder);

struct StructureProfile {
  unsigned p = 0;
  unsigned n = 0;
  std::size_t nilpotency_class = 0;
  std::size_t coclass = 0;
  std::size_t d = 0;
  std::size_t exponent = 1;
  /// p^r = exp(G/gamma_2), p^s = exp(zeta(G))
  unsigned r = 0;
  unsigned s = 0;
  bool is_powerful = false;
  Tri is_purely_nonabelian = Tri::unknown;
  bool is_strongly_frattinian = false;
  bool cgphi_in_phi = false;
};

StructureProfile structure_profile(const FiniteGroup& g);

}  // namespace pgroup
