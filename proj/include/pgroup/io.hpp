#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "pgroup/group.hpp"
#include "pgroup/ring.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

using json = nlohmann::json;

/// {"format":"pc","p":..,"rank":..,"powers":{"i":[..]},"commutators":{"j,i":[..]}}
/// with 1-based generator keys; zero words may be omitted.
PcPresentation pc_from_json(const json& j);
json pc_to_json(const PcPresentation& pcp);

/// Accepts the "pc" and "cayley" formats.
FiniteGroup group_from_json(const json& j, const BuildOptions& opts = {});
json cayley_to_json(const FiniteGroup& g);

/// {"format":"ring","order":n,"add":[[..]],"mul":[[..]]}
FiniteRing ring_from_json(const json& j);
json ring_to_json(const FiniteRing& r);

/// Field names: p, n, order, class, coclass, dG, exponent, r, s and the four
/// flags; is_purely_nonabelian is "true", "false" or "unknown".
json profile_to_json(const StructureProfile& prof);

json read_json_file(const std::filesystem::path& path);

/// "center", "omega1-center", or a list of element indices separated by
/// commas or spaces, closed to a subgroup.
Subgroup parse_module_spec(const FiniteGroup& g, const std::string& spec);

}  // namespace pgroup
