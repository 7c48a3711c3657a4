#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgroup {

enum class Errc {
  invalid_input,
  too_large,
  not_associative,
  no_identity,
  no_inverse,
  inconsistent_presentation,
  not_homomorphism,
  not_normal,
  not_abelian,
  not_nilpotent,
  cross_check_failed,
  not_p_power,
  not_abelian_add,
  not_associative_mul,
  not_distributive,
  not_p_ring,
  not_radical,
  not_in_aut_a,
  not_invariant,
  not_maximal,
  decomposition_failed,
  no_solution,
  not_well_defined,
  not_cocycle,
  hypothesis_failed,
  unknown_check,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the report layer) can branch on the kind of violation.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pgroup
