#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pgroup/io.hpp"

namespace pgroup {

inline constexpr const char* kReportVersion = "1";

/// fullness, theorem43, corollary47, derivation_ring, lemma32, lemma33,
/// theorem31, berkovich
const std::vector<std::string>& known_checks();
std::set<std::string> all_checks();

struct CheckOptions {
  /// Module for derivation_ring and theorem43 instead of the defaults.
  std::optional<Subgroup> module;
  /// Restricts fullness to one maximal subgroup (index into
  /// maximal_subgroups).
  std::optional<std::size_t> wrt;
  bool timings = false;
};

struct Report {
  std::string group;
  json profile;
  /// check name -> section with at least "status"
  json checks = json::object();
  json findings = json::array();
  /// Seconds per check, or null when timings were not requested.
  json timings;

  /// Some check failed or some finding was recorded.
  bool failed() const;
  json to_json() const;
  /// Stable key order, two-space indent, trailing newline.
  std::string dump() const;
};

/// Throws UnknownCheck for names outside known_checks().
Report run_checks(const std::string& id, const FiniteGroup& g, const std::set<std::string>& selection,
                  const CheckOptions& opts = {});

/// Compact generating set of a subgroup, as parent indices.
std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& s);

}  // namespace pgroup
