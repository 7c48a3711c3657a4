#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgroup/element_set.hpp"
#include "pgroup/error.hpp"

namespace pgroup {

/// Groups larger than this are refused unless the caller raises the cap.
inline constexpr std::size_t kDefaultMaxOrder = 729;
/// Cap used for internally derived groups (adjoint groups, quotients).
inline constexpr std::size_t kInternalMaxOrder = 1U << 16;

struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
};

using CayleyTable = std::vector<std::vector<Elem>>;

/// A finite group stored as a dense multiplication table. Instances are
/// immutable and cheap to copy (the tables are shared).
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  std::size_t order() const noexcept { return n_; }
  Elem identity() const noexcept { return d_->identity; }

  Elem mul(Elem x, Elem y) const noexcept { return d_->table[static_cast<std::size_t>(x) * n_ + y]; }
  Elem inv(Elem x) const noexcept { return d_->inverse[x]; }
  /// y^-1 x y
  Elem conjugate(Elem x, Elem y) const noexcept { return mul(inv(y), mul(x, y)); }
  /// x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const noexcept { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem power(Elem x, std::int64_t k) const noexcept;
  std::size_t element_order(Elem x) const noexcept { return d_->orders[x]; }

  /// Greedy generating set: lowest index not yet in the span, repeated.
  std::span<const Elem> generators() const noexcept { return d_->generators; }

  bool is_abelian() const noexcept { return d_->abelian; }
  bool has_labels() const noexcept { return !d_->labels.empty(); }
  std::string label(Elem x) const;

  CayleyTable cayley_table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.d_ == b.d_ || (a.n_ == b.n_ && a.d_->table == b.d_->table);
  }

  friend FiniteGroup from_cayley_table(const CayleyTable& table, const BuildOptions& opts);

 private:
  struct Data {
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::size_t> orders;
    std::vector<Elem> generators;
    std::vector<std::string> labels;
    Elem identity = 0;
    bool abelian = true;
  };
  FiniteGroup(std::shared_ptr<const Data> d, std::size_t n) : d_(std::move(d)), n_(n) {}
  static FiniteGroup build(std::vector<Elem> flat, std::size_t n, std::vector<std::string> labels,
                           const BuildOptions& opts);

  friend FiniteGroup with_labels(const FiniteGroup& g, std::vector<std::string> labels);

  std::shared_ptr<const Data> d_;
  std::size_t n_ = 1;
};

/// Validates identity, inverses and associativity (Light's test over a
/// magma generating set) before returning the group.
FiniteGroup from_cayley_table(const CayleyTable& table, const BuildOptions& opts = {});
FiniteGroup with_labels(const FiniteGroup& g, std::vector<std::string> labels);

/// Consistent polycyclic presentation of a group of order p^rank.
///
/// Generators are 0-based here (g_0 .. g_{rank-1}). Exponent vectors are
/// little-endian in the generator index and every relation may only involve
/// generators strictly later than the ones on its left-hand side.
struct PcPresentation {
  unsigned p = 2;
  unsigned rank = 0;
  /// i -> word for g_i^p
  std::map<unsigned, std::vector<unsigned>> powers;
  /// (j, i) with j > i -> word for [g_j, g_i]
  std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> commutators;
};

/// Elements are normal words; word (e_0, .., e_{n-1}) has index sum e_i p^i.
FiniteGroup from_pc_presentation(const PcPresentation& pcp, const BuildOptions& opts = {});
/// The overlap tests (g_k g_j) g_i = g_k (g_j g_i), the power variants and
/// g_i g_i^p = g_i^p g_i, evaluated by collection. Much cheaper than
/// building the table; throws the same validation errors.
bool is_consistent(const PcPresentation& pcp, const BuildOptions& opts = {});

FiniteGroup cyclic_group(std::size_t n);

/// Subset of a group's elements that is closed under products and inverses.
/// The parent group is not stored; every function taking a Subgroup also
/// takes the group it lives in.
class Subgroup {
 public:
  Subgroup() = default;
  /// Trusts the caller that `members` is a subgroup.
  explicit Subgroup(ElementSet members) : members_(std::move(members)) {}

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  std::size_t order() const noexcept { return members_.count(); }
  bool contains(Elem x) const noexcept { return members_.contains(x); }
  const ElementSet& members() const noexcept { return members_; }
  std::vector<Elem> elements() const { return members_.elements(); }
  bool is_subgroup_of(const Subgroup& o) const noexcept { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ <=> b.members_;
  }

 private:
  ElementSet members_;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Smallest subgroup containing `gens` (breadth-first closure).
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup subgroup_closure(const FiniteGroup& g, const ElementSet& gens);
/// Subgroup generated by two subgroups.
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
/// Subgroup generated by all [a, b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> image;

  Elem operator()(Elem x) const noexcept { return image[x]; }
};

/// Verifies the homomorphism law on all pairs.
GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<Elem> image);
Subgroup kernel(const GroupHom& h);
Subgroup image_of(const GroupHom& h);
bool is_bijective(const GroupHom& h);

/// Extends generator images to a homomorphism by walking the right Cayley
/// graph of the source. The walk is precomputed once per (group, gens).
class HomExtender {
 public:
  HomExtender(const FiniteGroup& source, std::vector<Elem> gens);

  const std::vector<Elem>& gens() const noexcept { return gens_; }

  /// Returns the full image table, or nullopt if the assignment does not
  /// extend to a homomorphism.
  std::optional<std::vector<Elem>> extend(const FiniteGroup& target, std::span<const Elem> images) const;

 private:
  struct Step {
    Elem from;
    std::uint32_t gen;
    Elem to;
  };
  std::size_t order_;
  Elem identity_;
  std::vector<Elem> gens_;
  std::vector<Step> tree_;
  std::vector<Step> checks_;
};

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  /// Smallest element of each coset, indexed by coset.
  std::vector<Elem> representative;

  Subgroup image(const Subgroup& s) const;
  Subgroup preimage(const Subgroup& s) const;
};

Quotient quotient(const FiniteGroup& g, const Subgroup& n);

/// A subgroup rebuilt as a standalone group, with index maps both ways.
struct SubgroupView {
  FiniteGroup group;
  std::vector<Elem> to_parent;
  /// kNoElem outside the subgroup.
  std::vector<Elem> from_parent;

  Subgroup lift(const Subgroup& inner) const;
  Subgroup restrict(const Subgroup& outer) const;
};

SubgroupView subgroup_view(const FiniteGroup& g, const Subgroup& s);

bool is_abelian(const FiniteGroup& g, const Subgroup& s);

/// Every homomorphism g -> t for abelian t, zero map first. Generator images
/// are assigned over a minimal generating set.
std::vector<GroupHom> all_homs(const FiniteGroup& g, const FiniteGroup& t);

}  // namespace pgroup
