// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/number_field.hpp"

#include <sstream>

#include "cubefarey/error.hpp"

namespace cubefarey {

Polynomial CubicPolynomial::as_polynomial() const { return Polynomial({c0, c1, c2, Rational(1)}); }

Rational CubicPolynomial::operator()(const Rational& x) const { return ((x + c2) * x + c1) * x + c0; }

bool CubicPolynomial::is_irreducible() const { return rational_roots(as_polynomial()).empty(); }

CubicPolynomial CubicPolynomial::from_polynomial(const Polynomial& f) {
  if (f.degree() != 3) throw Error(Errc::InvalidInput, "expected a cubic, got " + f.to_string());
  const Polynomial g = f.monic();
  return {g.coeff(0), g.coeff(1), g.coeff(2)};
}

FieldElement::FieldElement(Rational a0, Rational a1, Rational a2)
    : a_{std::move(a0), std::move(a1), std::move(a2)} {
  for (auto& c : a_) c.canonicalize();
}

std::size_t FieldElement::hash() const noexcept {
  std::size_t seed = 0;
  for (const auto& c : a_) hash_combine(seed, hash_rational(c));
  return seed;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << "(" << format_rational(a_[0]) << ", " << format_rational(a_[1]) << ", " << format_rational(a_[2])
     << ")";
  return os.str();
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  return {x.a_[0] + y.a_[0], x.a_[1] + y.a_[1], x.a_[2] + y.a_[2]};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  return {x.a_[0] - y.a_[0], x.a_[1] - y.a_[1], x.a_[2] - y.a_[2]};
}

FieldElement operator-(const FieldElement& x) { return {-x.a_[0], -x.a_[1], -x.a_[2]}; }

FieldElement operator*(const Rational& c, const FieldElement& x) {
  return {c * x.a_[0], c * x.a_[1], c * x.a_[2]};
}

namespace {

Rational half_width_bits(int bits) {
  Rational w(1);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return w;
}

}  // namespace

CubicField::CubicField(CubicPolynomial poly, RootSpec root, int refinement_cap)
    : poly_(std::move(poly)),
      root_(std::move(root)),
      f_(poly_.as_polynomial()),
      sturm_(f_),
      cap_(refinement_cap) {
  if (!poly_.is_irreducible()) throw Error(Errc::Reducible, poly_.to_string() + " has a rational root");
  if (!(root_.lo < root_.hi)) throw Error(Errc::NotIsolating, "interval endpoints out of order");
  const int slo = f_.sign_at(root_.lo);
  const int shi = f_.sign_at(root_.hi);
  if (slo == 0 || shi == 0 || slo == shi || sturm_.count_roots(root_.lo, root_.hi) != 1)
    throw Error(Errc::NotIsolating, "[" + format_rational(root_.lo) + ", " + format_rational(root_.hi) +
                                        "] does not isolate a single root of " + poly_.to_string());
  work_ = refine_root(f_, {root_.lo, root_.hi}, half_width_bits(64));
}

CubicField CubicField::with_root_index(CubicPolynomial poly, int k) {
  const auto roots = isolate_real_roots(poly.as_polynomial());
  if (k < 0 || k >= static_cast<int>(roots.size()))
    throw Error(Errc::InvalidInput, "root index " + std::to_string(k) + " out of range for " + poly.to_string());
  const auto& iv = roots[static_cast<std::size_t>(k)];
  return CubicField(std::move(poly), RootSpec{iv.lo, iv.hi});
}

FieldElement CubicField::mul(const FieldElement& x, const FieldElement& y) const {
  std::array<Rational, 5> p;
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < 3; ++j) p[i + j] += x[i] * y[j];
  }
  for (std::size_t k = 4; k >= 3; --k) {
    if (p[k] == 0) continue;
    const Rational v = p[k];
    p[k - 1] -= poly_.c2 * v;
    p[k - 2] -= poly_.c1 * v;
    p[k - 3] -= poly_.c0 * v;
  }
  return {p[0], p[1], p[2]};
}

FieldElement CubicField::pow(FieldElement x, unsigned long n) const {
  FieldElement acc(1);
  while (n > 0) {
    if (n & 1UL) acc = mul(acc, x);
    n >>= 1;
    if (n > 0) x = mul(x, x);
  }
  return acc;
}

RationalMatrix3 CubicField::mul_matrix(const FieldElement& x) const {
  RationalMatrix3 m;
  FieldElement col = x;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) m[i][k] = col[i];
    if (k < 2) col = mul(col, FieldElement::theta());
  }
  return m;
}

namespace {

Rational det3(const RationalMatrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Rational cofactor(const RationalMatrix3& a, std::size_t i, std::size_t j) {
  const std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
  return a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1];
}

}  // namespace

Rational CubicField::norm(const FieldElement& x) const { return det3(mul_matrix(x)); }

Rational CubicField::trace(const FieldElement& x) const {
  const auto m = mul_matrix(x);
  return m[0][0] + m[1][1] + m[2][2];
}

FieldElement CubicField::inv(const FieldElement& x) const {
  if (x.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (x.is_rational()) return FieldElement(1 / x[0]);
  const auto m = mul_matrix(x);
  const Rational d = det3(m);
  // First column of m^{-1}: entry i is the (0, i) cofactor over det.
  return {cofactor(m, 0, 0) / d, cofactor(m, 0, 1) / d, cofactor(m, 0, 2) / d};
}

FieldElement CubicField::div(const FieldElement& x, const FieldElement& y) const { return mul(x, inv(y)); }

namespace {

Rational eval_quadratic(const FieldElement& x, const Rational& t) { return (x[2] * t + x[1]) * t + x[0]; }

}  // namespace

int CubicField::sign(const FieldElement& x) const {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x[0]);
  RootInterval iv = work_;
  const int flo = f_.sign_at(iv.lo);
  for (int step = 0; step <= cap_; ++step) {
    const bool monotone =
        x[2] == 0 || sgn(x[1] + 2 * x[2] * iv.lo) * sgn(x[1] + 2 * x[2] * iv.hi) > 0;
    if (monotone) {
      const int glo = sgn(eval_quadratic(x, iv.lo));
      if (glo != 0 && glo == sgn(eval_quadratic(x, iv.hi))) return glo;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (f_.sign_at(mid) == flo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  throw Error(Errc::RefinementCap, "sign of " + x.to_string() + " undecided after " + std::to_string(cap_) +
                                       " bisections");
}

Integer CubicField::floor(const FieldElement& x) const {
  const Rational v = eval_quadratic(x, (work_.lo + work_.hi) / 2);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  while (sign(x - FieldElement(Rational(n))) < 0) --n;
  while (sign(x - FieldElement(Rational(n + 1))) >= 0) ++n;
  return n;
}

Polynomial CubicField::min_poly(const FieldElement& x) const {
  if (x.is_rational()) return Polynomial({-x[0], Rational(1)});
  const auto m = mul_matrix(x);
  const Rational tr = m[0][0] + m[1][1] + m[2][2];
  const Rational minors = cofactor(m, 0, 0) + cofactor(m, 1, 1) + cofactor(m, 2, 2);
  return Polynomial({-det3(m), minors, -tr, Rational(1)});
}

mpf_class CubicField::approximate(const FieldElement& x, unsigned bits) const {
  const Rational slope = abs(x[1]) + 2 * abs(x[2]) * (abs(work_.hi) + 1) + 1;
  const int extra = static_cast<int>(mpz_sizeinbase(slope.get_num_mpz_t(), 2)) + 4;
  const RootInterval iv = refine_root(f_, work_, half_width_bits(static_cast<int>(bits) + extra));
  const Rational v = eval_quadratic(x, (iv.lo + iv.hi) / 2);
  mpf_class out(0, bits + 64);
  out = v;
  return out;
}

double CubicField::to_double(const FieldElement& x) const {
  return eval_quadratic(x, (work_.lo + work_.hi) / 2).get_d();
}

}  // namespace cubefarey
