#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroup/derivation.hpp"
#include "pgroup/group.hpp"
#include "pgroup/verdict.hpp"

namespace pgroup {

/// The conditions a candidate K inside a maximal subgroup M must meet.
struct FullnessChecks {
  bool index_p2 = false;
  bool non_normal = false;
  bool KcapC_normal = false;
  bool contains_Gp = false;
  bool all() const noexcept { return index_p2 && non_normal && KcapC_normal && contains_Gp; }
};

struct FullnessRecord {
  Subgroup m;
  /// First passing K in bitmask order; empty when none passes.
  std::optional<Subgroup> k;
  FullnessChecks checks;
  std::size_t candidates = 0;
};

struct FullnessWitness {
  Subgroup c;
  /// One record per maximal M != C, in bitmask order.
  std::vector<FullnessRecord> records;
  /// False when G has no maximal subgroup other than C (cyclic G).
  bool full = false;
  /// Index into `records` of the first M without a K.
  std::optional<std::size_t> failing;
};

/// Throws NotMaximal unless `c` is a maximal subgroup.
FullnessWitness is_full_wrt(const FiniteGroup& g, const Subgroup& c);

/// The hypothesis is p odd, d(G) = 2 and G not powerful.
struct Prop42Verdict {
  bool in_hypothesis = false;
  std::size_t maximal_count = 0;
  std::size_t full_count = 0;
  /// Fullness of G and of G / gamma_3(G) G^p agree for every maximal C.
  bool quotient_criterion = false;
  bool holds() const noexcept { return quotient_criterion && (!in_hypothesis || full_count == maximal_count); }
};

Prop42Verdict check_prop42(const FiniteGroup& g);

/// alpha : K -> Z/p with [k, y] = x^alpha(k) mod K.
struct AlphaMap {
  Subgroup k;
  /// Indexed by element of G; only entries in K are meaningful.
  std::vector<unsigned> value;
  bool is_hom = false;
  bool kernel_is_KcapC = false;
  bool surjective = false;
};

/// Throws DecompositionFailed if some [k, y] lies outside <x>K.
AlphaMap alpha_hom(const FiniteGroup& g, const Subgroup& k, const Subgroup& c, Elem y, Elem x);

/// z in Z1 with [k, u] = z^alpha(k) for all k in K. Throws NoSolution.
Elem scale_z(const FiniteGroup& g, const AlphaMap& alpha, const Subgroup& z1, Elem u);

/// delta(k x^j y^i) = z^j u^i. Throws NotWellDefined or NotCocycle.
Derivation lemma46_derivation(const FiniteGroup& g, const Subgroup& k, Elem x, Elem y, Elem u, Elem z);

/// Data shared by every lift for a fixed (G, A).
struct LiftContext {
  FiniteGroup g;
  Subgroup a;
  Subgroup z1;
  /// C_G(A)
  Subgroup c;
  /// G -> G/Z1
  Quotient gz;
  /// A/Z1 inside G/Z1
  Subgroup abar;
  FullnessWitness fullness;
};

/// Checks the standing hypotheses: A elementary abelian of rank 2, normal,
/// not central, |A cap Z(G)| = p, G purely non-abelian. Throws
/// HypothesisFailed naming the first violated condition.
LiftContext make_lift_context(const FiniteGroup& g, const Subgroup& a);

enum class LiftBranch { zero, M_ne_C, M_eq_C };
std::string_view to_string(LiftBranch b) noexcept;

struct LiftResult {
  /// f : G/Z1 -> A/Z1 as an image table on G/Z1.
  std::vector<Elem> f;
  Derivation delta;
  LiftBranch branch = LiftBranch::zero;
  /// Only set on the M != C branch.
  std::optional<Subgroup> k;
  Elem x = kNoElem;
  Elem y = kNoElem;
  Elem u = kNoElem;
  Elem z = kNoElem;
};

/// Lifts f to a derivation G -> A. Throws HypothesisFailed when G is not
/// full with respect to C on the branch that needs it, and the errors of
/// the lemma operations when a step fails.
LiftResult lift_homomorphism(const LiftContext& ctx, const std::vector<Elem>& f);

struct Theorem43Verdict {
  bool exact = false;
  bool exact_by_count = false;
  bool full = false;
  bool agree = false;
  std::size_t der_size = 0;
  std::size_t hom_g_z1 = 0;
  std::size_t hom_quot = 0;
  std::size_t image_size = 0;
  std::size_t lifts_checked = 0;
  std::size_t lifts_ok = 0;
  /// f outside the image of the restriction map, when not exact.
  std::optional<std::vector<Elem>> non_liftable;
  std::vector<Finding> findings;
};

/// Throws HypothesisFailed when the standing hypotheses do not hold.
Theorem43Verdict check_theorem43(const FiniteGroup& g, const Subgroup& a);

struct Corollary47Instance {
  Subgroup a;
  std::size_t rank = 0;
  bool central = false;
  std::size_t homs = 0;
  std::size_t lifted = 0;
  std::size_t image_size = 0;
  bool exact = false;
};

struct Corollary47Verdict {
  bool in_hypothesis = false;
  std::string reason;
  std::vector<Corollary47Instance> instances;
  std::vector<Finding> findings;
  bool holds() const noexcept;
};

/// Elementary abelian normal subgroups of G inside zeta_2(G), bitmask order.
std::vector<Subgroup> elementary_normal_in_zeta2(const FiniteGroup& g);

/// Runs the decomposition argument on one A; G must be full with respect
/// to all maximal subgroups and have cyclic centre.
Corollary47Instance corollary47_instance(const FiniteGroup& g, const Subgroup& a, std::vector<Finding>& findings);
Corollary47Verdict check_corollary47(const FiniteGroup& g);

}  // namespace pgroup
