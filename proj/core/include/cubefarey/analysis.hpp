// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubefarey/farey.hpp"

namespace cubefarey {

enum class PeriodStatus { Found, CapExceeded };

struct PeriodResult {
  PeriodStatus status = PeriodStatus::CapExceeded;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  /// All digits computed: preperiod + period of them when Found.
  std::vector<IndexPair> digits;
  /// states[k] = T^k(α, β) for k = 0..digits.size().
  std::vector<PointPair> states;

  [[nodiscard]] bool found() const noexcept { return status == PeriodStatus::Found; }
  [[nodiscard]] std::vector<IndexPair> period_digits() const;
};

inline constexpr std::size_t kDefaultCap = 1000000;

/// Iterates T until an exact state repeats or `cap` steps have been taken.
PeriodResult detect_period(const PointPair& point, const ValueExponent& r, std::size_t cap = kDefaultCap);

struct PeriodMatrix {
  IntMatrix3 matrix;
  Polynomial charpoly;
  /// Eigenvalue of the matrix on (1 - α_m - β_m, α_m, β_m).
  FieldElement lambda;
};

/// Product of M over the period, with the eigen relation checked exactly.
/// Throws InvalidInput unless Found, EigenRelationViolated on failure.
PeriodMatrix period_matrix(const PeriodResult& result);

/// Product M_{e0}···M_{e(n-1)}.
IntMatrix3 product_M(const std::vector<IndexPair>& digits);

struct PisotCertificate {
  Polynomial poly;
  bool pisot = false;
  std::string reason;
  int real_roots = 0;
  int roots_above_one = 0;
  /// Isolating interval of the largest real root.
  std::optional<RootInterval> dominant;
};

/// Exact decision for a monic cubic with integer coefficients.
PisotCertificate is_pisot(const Polynomial& poly);

/// For each convergent M_n of the orbit: the worst vertex error
/// max_k max(|α - q_k/p_k|, |β - r_k/p_k|) scaled by p_k^exponent.
std::vector<double> vertex_error_profile(const PointPair& point, const ExpansionOrbit& orbit, double exponent);

/// Some power up to the fifth is entrywise positive. Throws NegativeEntry.
bool is_primitive(const IntMatrix3& m);

}  // namespace cubefarey
