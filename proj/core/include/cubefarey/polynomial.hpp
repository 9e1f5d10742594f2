// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubefarey/rational.hpp"

namespace cubefarey {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(const Rational& c, int degree);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] Rational coeff(int k) const;
  [[nodiscard]] const Rational& leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] int sign_at(const Rational& x) const;
  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Polynomial monic() const;

  /// Euclidean division over Q; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in x, highest degree first, e.g. "x^3 - 57x^2 + 3x - 1".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Open interval (lo, hi) with rational endpoints isolating one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Sturm chain f, f', -rem(f, f'), ... used for exact real root counting.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& f);

  [[nodiscard]] int sign_changes_at(const Rational& x) const;
  [[nodiscard]] int sign_changes_at_neg_infinity() const;
  [[nodiscard]] int sign_changes_at_pos_infinity() const;

  /// Number of distinct real roots in the half-open interval (lo, hi].
  [[nodiscard]] int count_roots(const Rational& lo, const Rational& hi) const;
  [[nodiscard]] int count_roots_above(const Rational& lo) const;
  [[nodiscard]] int count_real_roots() const;

  [[nodiscard]] const std::vector<Polynomial>& chain() const noexcept { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// Cauchy bound: every complex root z satisfies |z| < bound.
Rational root_bound(const Polynomial& f);

/// Isolating intervals for all distinct real roots, in ascending order. The
/// endpoints are never roots.
std::vector<RootInterval> isolate_real_roots(const Polynomial& f);

/// Bisects an isolating interval (sign change of f across it) until its width
/// is at most `width`.
RootInterval refine_root(const Polynomial& f, RootInterval iv, const Rational& width);

/// All rational roots of f (distinct, ascending).
std::vector<Rational> rational_roots(const Polynomial& f);

}  // namespace cubefarey
