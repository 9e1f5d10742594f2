// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "cubefarey/farey.hpp"

namespace cubefarey {

bool is_perfect_cube(long m);

/// (<∛m>/2, <∛m²>/2) in Q(∛m); throws InvalidInput for m < 2 or perfect cubes.
PointPair purecubic_point(long m);

/// (1/(1+λ+λ²), λ/(1+λ+λ²)) for λ the real root of x³ - m x² - 1, m >= 1.
PointPair p2_point(long m);

/// (1/(1+α+α²), α/(1+α+α²)) for α the largest real root of poly, which must be
/// positive. Throws InvalidInput otherwise, Reducible for reducible poly.
PointPair nt_basis_point(const CubicPolynomial& poly);

/// "purecubic:m", "p2:m" or "nt-basis:c0,c1,c2".
PointPair family_point(std::string_view spec);

/// Parses "c0,c1,c2" into x³ + c2 x² + c1 x + c0.
CubicPolynomial parse_cubic(std::string_view text);

}  // namespace cubefarey
