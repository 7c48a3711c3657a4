#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pgroup/io.hpp"

namespace pgroup {

struct CatalogEntry {
  std::string id;
  std::string description;
  PcPresentation presentation;
  /// Frozen profile fields (see profile_to_json); empty when not recorded.
  json expected;
};

/// The bundled groups, in a fixed order.
const std::vector<CatalogEntry>& bundled_catalog();
/// nullptr when the id is unknown.
const CatalogEntry* find_catalog_entry(std::string_view id);
FiniteGroup build_entry(const CatalogEntry& e, const BuildOptions& opts = {});

}  // namespace pgroup
