#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgroup/element_set.hpp"

namespace pgroup {

enum class Status { pass, fail, skipped, inconclusive };
std::string_view to_string(Status s) noexcept;

/// A violation of a stated result on an instance meeting its hypotheses.
struct Finding {
  std::string check;
  std::string message;
  /// Replay data: named element lists and tables.
  std::vector<std::pair<std::string, std::vector<Elem>>> data;
};

}  // namespace pgroup
