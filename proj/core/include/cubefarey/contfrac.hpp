// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubefarey/farey.hpp"
#include "cubefarey/int_matrix.hpp"

namespace cubefarey {

/// Column vector (a, b) with a, b >= 0.
struct CFDigit {
  long a = 0;
  long b = 0;

  [[nodiscard]] bool is_zero() const noexcept { return a == 0 && b == 0; }
  friend bool operator==(const CFDigit&, const CFDigit&) = default;
  friend CFDigit operator+(const CFDigit& x, const CFDigit& y) { return {x.a + y.a, x.b + y.b}; }
};

/// Finite word, or an eventually periodic one when period_start is set: the
/// digits from period_start on repeat forever.
struct CFWord {
  std::vector<CFDigit> digits;
  std::optional<std::size_t> period_start;

  [[nodiscard]] bool periodic() const noexcept { return period_start.has_value(); }
  /// "a/b a/b | a/b ..." with "|" before the first periodic digit.
  [[nodiscard]] std::string to_string() const;
  static CFWord parse(std::string_view text);

  friend bool operator==(const CFWord&, const CFWord&) = default;
};

/// C(a, b) = [[0, 0, 1], [1, 0, a], [0, 1, b]].
IntMatrix3 cf_matrix(const CFDigit& d);

/// The three-digit word of each digit (i, j).
const std::array<CFDigit, 3>& digit_word(IndexPair eps);

CFWord digits_to_cfword(const std::vector<IndexPair>& digits);
/// Periodic word for digits[0..preperiod) followed by digits[preperiod..) repeated.
CFWord digits_to_cfword(const std::vector<IndexPair>& digits, std::size_t preperiod);

/// Rewrites x 0 0 y -> (x + y) wherever digits stand on both sides of the zero
/// pair, until no such pattern remains. Periodic words are brought to a
/// periodic normal form.
CFWord reduce_cfword(const CFWord& word);

/// Product C(d0)···C(dn) of a finite word (identity for the empty word).
IntMatrix3 cf_product(const std::vector<CFDigit>& digits);

/// (p1/p0, p2/p0) from the last column of the product. Throws ZeroDenominator.
std::pair<Rational, Rational> evaluate_cf(const CFWord& word);
/// The word followed by a real tail: P^frac(x, y).
std::pair<FieldElement, FieldElement> evaluate_cf(const CubicField& field, const CFWord& word,
                                                  const FieldElement& x, const FieldElement& y);

struct IdentityCheck {
  std::string name;
  bool pass;
};

/// The six S^-1 A S = M identities and the six R/U/V factorizations.
std::vector<IdentityCheck> verify_decompositions();

}  // namespace cubefarey
