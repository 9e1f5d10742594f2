// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubefarey/int_matrix.hpp"
#include "cubefarey/number_field.hpp"

namespace cubefarey {

/// Digit (i, j), i != j, both in {0, 1, 2}.
struct IndexPair {
  int i = 1;
  int j = 2;

  /// Throws InvalidInput outside Ind.
  static IndexPair make(int i, int j);
  [[nodiscard]] int third() const noexcept { return 3 - i - j; }
  /// Stable position in all() (0..5).
  [[nodiscard]] int ordinal() const noexcept;
  [[nodiscard]] std::string to_string() const;

  static const std::array<IndexPair, 6>& all();

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// The two digits that may not follow `prev`.
std::array<IndexPair, 2> forbidden_successors(IndexPair prev);
bool is_forbidden(IndexPair prev, IndexPair next);

/// r = p/q with gcd(p, q) = 1 and 3 not dividing p.
class ValueExponent {
 public:
  ValueExponent() = default;
  ValueExponent(unsigned long p, unsigned long q);
  static ValueExponent parse(std::string_view text);

  [[nodiscard]] unsigned long p() const noexcept { return p_; }
  [[nodiscard]] unsigned long q() const noexcept { return q_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ValueExponent&, const ValueExponent&) = default;

 private:
  unsigned long p_ = 5;
  unsigned long q_ = 2;
};

using FieldPtr = std::shared_ptr<const CubicField>;

/// A state (α, β) of the algorithm.
class PointPair {
 public:
  /// Checks independence of 1, α, β and 0 < α, β, α + β < 1; throws NotInDomain.
  PointPair(FieldPtr field, FieldElement alpha, FieldElement beta);
  /// Skips the domain check; for images of maps already known to preserve it.
  static PointPair trusted(FieldPtr field, FieldElement alpha, FieldElement beta);

  [[nodiscard]] const CubicField& field() const noexcept { return *field_; }
  [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }
  [[nodiscard]] const FieldElement& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const FieldElement& beta() const noexcept { return beta_; }
  [[nodiscard]] FieldElement gamma() const { return FieldElement(1) - alpha_ - beta_; }
  /// (α, β) / (1 - α - β).
  [[nodiscard]] std::pair<FieldElement, FieldElement> starred() const;
  /// Empty string when the invariants hold, else a description of the first failure.
  [[nodiscard]] std::string domain_violation() const;

  [[nodiscard]] std::size_t hash() const noexcept;
  friend bool operator==(const PointPair& a, const PointPair& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  PointPair(FieldPtr field, FieldElement alpha, FieldElement beta, bool);
  FieldPtr field_;
  FieldElement alpha_;
  FieldElement beta_;
};

struct PointPairHash {
  std::size_t operator()(const PointPair& p) const noexcept { return p.hash(); }
};

const IntMatrix3& matrix_A(IndexPair eps);
const IntMatrix3& matrix_S();
const IntMatrix3& matrix_S_inverse();
/// I + E_ij.
const IntMatrix3& matrix_M(IndexPair eps);

/// Fractional linear action (x, y) -> ((a10 + a11 x + a12 y) / d, (a20 + a21 x + a22 y) / d) with
/// d = a00 + a01 x + a02 y. Throws ZeroDenominator.
std::pair<Rational, Rational> frac_apply(const IntMatrix3& a, const Rational& x, const Rational& y);
std::pair<FieldElement, FieldElement> frac_apply(const CubicField& field, const IntMatrix3& a,
                                                 const FieldElement& x, const FieldElement& y);

enum class Ordering { Less, Greater };

/// Compares x^{p/q}/|N(x)| against y^{p/q}/|N(y)|; x, y > 0 irrational. Throws TieImpossible.
Ordering weight_compare(const CubicField& field, const ValueExponent& r, const FieldElement& x,
                        const FieldElement& y);

/// Strict membership of (α, β) in the open half of △(eps) cut out by its defining line.
bool in_triangle(const PointPair& point, IndexPair eps);

IndexPair select_epsilon(const PointPair& point, const ValueExponent& r);
/// Throws WrongTriangle.
PointPair apply_T(const PointPair& point, IndexPair eps);
std::pair<IndexPair, PointPair> step(const PointPair& point, const ValueExponent& r);

/// M_n = A_{ε0}···A_{ε(n-1)} S; columns are (p'', q'', r''), (p', q', r'), (p, q, r).
class ConvergentState {
 public:
  ConvergentState() : m_(matrix_S()) {}
  explicit ConvergentState(IntMatrix3 m) : m_(std::move(m)) {}

  /// One recurrence step: column i is added into column j.
  void advance(IndexPair eps);

  [[nodiscard]] const IntMatrix3& matrix() const noexcept { return m_; }
  /// Vertex from column k: (q/p, r/p). Throws DegenerateDenominator.
  [[nodiscard]] std::pair<Rational, Rational> vertex(int k) const;
  [[nodiscard]] std::array<std::pair<Rational, Rational>, 3> triangle() const;
  [[nodiscard]] bool contains(const CubicField& field, const FieldElement& alpha, const FieldElement& beta) const;

 private:
  IntMatrix3 m_;
};

struct ExpandOptions {
  bool keep_states = true;
  bool keep_convergents = true;
};

struct ExpansionOrbit {
  std::vector<IndexPair> digits;
  /// states[k] = T^k(α, β); size digits.size() + 1 when kept.
  std::vector<PointPair> states;
  /// convergents[k] = M_k; size digits.size() + 1 when kept.
  std::vector<ConvergentState> convergents;
};

/// Throws ForbiddenWordDetected if two consecutive digits form a forbidden pair.
ExpansionOrbit expand(const PointPair& point, const ValueExponent& r, std::size_t n, const ExpandOptions& opts = {});

/// Decimal height of a polynomial: max over all coefficients (the monic leading 1 included).
int decimal_height(const Polynomial& f);
/// max over α, β of the height of their minimal polynomials.
int state_height(const PointPair& point);

struct HeightSample {
  int dh;
  Rational rdh;
};

std::vector<HeightSample> decimal_heights(const ExpansionOrbit& orbit);

}  // namespace cubefarey
