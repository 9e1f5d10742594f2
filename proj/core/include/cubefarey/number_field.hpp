// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>

#include "cubefarey/polynomial.hpp"
#include "cubefarey/rational.hpp"

namespace cubefarey {

/// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct CubicPolynomial {
  Rational c0;
  Rational c1;
  Rational c2;

  [[nodiscard]] Polynomial as_polynomial() const;
  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] std::string to_string() const { return as_polynomial().to_string(); }
  [[nodiscard]] bool is_irreducible() const;

  /// Reads a monic cubic back from a general polynomial; throws InvalidInput
  /// unless deg f == 3.
  static CubicPolynomial from_polynomial(const Polynomial& f);

  friend bool operator==(const CubicPolynomial&, const CubicPolynomial&) = default;
};

struct RootSpec {
  Rational lo;
  Rational hi;

  friend bool operator==(const RootSpec&, const RootSpec&) = default;
};

/// a0 + a1 θ + a2 θ² with canonical rational coordinates.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Rational a0, Rational a1, Rational a2);
  explicit FieldElement(const Rational& a0) : FieldElement(a0, 0, 0) {}
  static FieldElement theta() { return {0, 1, 0}; }

  [[nodiscard]] const Rational& operator[](std::size_t k) const { return a_[k]; }
  [[nodiscard]] const std::array<Rational, 3>& coords() const noexcept { return a_; }
  [[nodiscard]] bool is_zero() const { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0; }
  [[nodiscard]] bool is_rational() const { return a_[1] == 0 && a_[2] == 0; }
  [[nodiscard]] std::size_t hash() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x);
  friend FieldElement operator*(const Rational& c, const FieldElement& x);
  friend bool operator==(const FieldElement& x, const FieldElement& y) { return x.a_ == y.a_; }

 private:
  std::array<Rational, 3> a_{Rational(0), Rational(0), Rational(0)};
};

using RationalMatrix3 = std::array<std::array<Rational, 3>, 3>;

/// Q(θ) together with the real embedding fixed by an isolating interval.
/// Immutable after construction and safe to share across threads.
class CubicField {
 public:
  static constexpr int kDefaultRefinementCap = 10000;

  /// Throws Reducible or NotIsolating.
  CubicField(CubicPolynomial poly, RootSpec root, int refinement_cap = kDefaultRefinementCap);

  /// Selects the k-th real root (0-based, ascending).
  static CubicField with_root_index(CubicPolynomial poly, int k);

  static std::shared_ptr<const CubicField> make(CubicPolynomial poly, RootSpec root) {
    return std::make_shared<const CubicField>(std::move(poly), std::move(root));
  }

  [[nodiscard]] const CubicPolynomial& poly() const noexcept { return poly_; }
  [[nodiscard]] const RootSpec& root() const noexcept { return root_; }
  [[nodiscard]] const SturmSequence& sturm() const noexcept { return sturm_; }
  [[nodiscard]] int real_root_count() const { return sturm_.count_real_roots(); }

  [[nodiscard]] FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  [[nodiscard]] FieldElement sqr(const FieldElement& x) const { return mul(x, x); }
  [[nodiscard]] FieldElement pow(FieldElement x, unsigned long n) const;
  [[nodiscard]] FieldElement inv(const FieldElement& x) const;
  [[nodiscard]] FieldElement div(const FieldElement& x, const FieldElement& y) const;

  /// Column k holds the coordinates of x·θ^k.
  [[nodiscard]] RationalMatrix3 mul_matrix(const FieldElement& x) const;
  [[nodiscard]] Rational norm(const FieldElement& x) const;
  [[nodiscard]] Rational trace(const FieldElement& x) const;

  [[nodiscard]] int sign(const FieldElement& x) const;
  [[nodiscard]] Integer floor(const FieldElement& x) const;
  [[nodiscard]] Polynomial min_poly(const FieldElement& x) const;

  /// x(θ) to roughly `bits` bits of absolute precision.
  [[nodiscard]] mpf_class approximate(const FieldElement& x, unsigned bits) const;
  [[nodiscard]] double to_double(const FieldElement& x) const;

  friend bool operator==(const CubicField& a, const CubicField& b) {
    return a.poly_ == b.poly_ && a.root_ == b.root_;
  }

 private:
  CubicPolynomial poly_;
  RootSpec root_;
  Polynomial f_;
  SturmSequence sturm_;
  RootInterval work_;
  int cap_;
};

}  // namespace cubefarey
