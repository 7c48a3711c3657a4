#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroup/derivation.hpp"
#include "pgroup/verdict.hpp"

namespace pgroup {

/// H is the preimage of Omega_1(zeta_2/zeta_1); H_i = Omega_i(H).
struct HTower {
  Subgroup zeta1;
  Subgroup zeta2;
  Subgroup h;
  /// H_1, H_2, ..., ending with H.
  std::vector<Subgroup> h_i;
  bool h_abelian = false;
  /// Der(G,H) and Der(G,H_1); empty when the module is not abelian or the
  /// ring is too large.
  std::optional<DerivationRing> d;
  std::optional<DerivationRing> d1;
};

HTower compute_h_tower(const FiniteGroup& g);

struct Lemma32Verdict {
  bool h_in_cgphi = false;
  bool cgphi_in_phi = false;
  bool h_abelian = false;
  bool holds() const noexcept { return h_in_cgphi && (!cgphi_in_phi || h_abelian); }
};

Lemma32Verdict check_lemma32(const FiniteGroup& g, const HTower& t);

struct Lemma33Verdict {
  Status status = Status::skipped;
  std::string reason;
  std::size_t d_size = 0;
  std::size_t d1_size = 0;
  bool d2_in_hom_center = false;
  bool d1_cubed_zero = false;
  bool d1_is_ideal = false;
  bool quotient_right_p_nil = false;
  std::size_t quotient_exponent = 0;
  /// p^min(r,s)
  std::size_t exponent_bound = 0;
};

Lemma33Verdict check_lemma33(const FiniteGroup& g, const HTower& t);

struct OmegaLevel {
  unsigned i = 0;
  std::size_t omega = 0;
  std::size_t omega_set = 0;
  std::size_t aut_hi = 0;
  bool equal = false;
};

struct Theorem31Verdict {
  Status status = Status::skipped;
  std::string reason;
  std::size_t class_aut_h = 0;
  std::size_t class_bound = 0;
  std::size_t degree_d = 0;
  std::size_t class_aut_h1 = 0;
  std::size_t aut_h_order = 0;
  std::size_t aut_h1_order = 0;
  /// Filled for p > 2.
  std::vector<OmegaLevel> levels;
};

Theorem31Verdict check_theorem31(const FiniteGroup& g, const HTower& t);

enum class BerkovichBranch { unequal_d_condition, strongly_frattinian_reduction_inapplicable, coclass2_main };
std::string_view to_string(BerkovichBranch b) noexcept;

struct BerkovichWitness {
  /// sigma as an image table on G.
  std::vector<Elem> sigma;
  std::size_t order = 0;
  /// Number of distinct inner automorphisms sigma was compared against.
  std::size_t certificate_size = 0;
  BerkovichBranch branch = BerkovichBranch::coclass2_main;
};

/// Order of sigma under composition, and whether sigma equals conjugation
/// by some element (compared against every inner automorphism).
std::size_t automorphism_order(const std::vector<Elem>& sigma);
/// Returns the number of distinct inner automorphisms when sigma is not
/// inner, and 0 when it is.
std::size_t noninner_certificate(const FiniteGroup& g, const std::vector<Elem>& sigma);

struct Theorem51Verdict {
  /// pass: witness found; skipped: refusal; inconclusive: branch (b) only.
  Status status = Status::skipped;
  std::string reason;
  std::optional<BerkovichBranch> branch;
  std::optional<BerkovichWitness> witness;
  std::size_t d_g = 0;
  std::size_t d_z = 0;
  std::size_t d_h_over_z = 0;
  // main branch counts
  std::size_t der_g_h1 = 0;
  std::size_t aut_h1_direct = 0;
  std::size_t hom_g_z1 = 0;
  std::size_t hom_quot = 0;
  std::size_t inner_part = 0;
  bool exact = false;
  bool full_all_maximals = false;
  bool inner_part_is_zeta3 = false;
  bool all_order_p = false;
  std::vector<Finding> findings;
};

Theorem51Verdict verify_theorem51(const FiniteGroup& g);

}  // namespace pgroup
