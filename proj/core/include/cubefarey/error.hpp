// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubefarey {

enum class Errc {
  InvalidInput,
  Reducible,
  NotIsolating,
  DivisionByZero,
  RefinementCap,
  NotInDomain,
  TieImpossible,
  BoundaryImpossible,
  WrongTriangle,
  ForbiddenWordDetected,
  DegenerateDenominator,
  ZeroDenominator,
  EigenRelationViolated,
  NegativeEntry,
  FaceCollision,
  SurfaceMembershipViolated,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cubefarey
