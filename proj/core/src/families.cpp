// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/families.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "cubefarey/error.hpp"

namespace cubefarey {

bool is_perfect_cube(long m) {
  Integer r;
  const Integer v(m);
  return mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3) != 0;
}

PointPair purecubic_point(long m) {
  if (m < 2) throw Error(Errc::InvalidInput, "purecubic needs m >= 2");
  if (is_perfect_cube(m)) throw Error(Errc::InvalidInput, std::to_string(m) + " is a perfect cube");
  auto field = std::make_shared<const CubicField>(CubicField::with_root_index({Rational(-m), 0, 0}, 0));
  const FieldElement t = FieldElement::theta();
  const FieldElement t2(0, 0, 1);
  const Rational half(1, 2);
  FieldElement a = half * (t - FieldElement(Rational(field->floor(t))));
  FieldElement b = half * (t2 - FieldElement(Rational(field->floor(t2))));
  return PointPair(field, std::move(a), std::move(b));
}

namespace {

PointPair basis_point(const std::shared_ptr<const CubicField>& field) {
  const FieldElement t = FieldElement::theta();
  const FieldElement d = field->inv(FieldElement(1, 1, 1));
  return PointPair(field, d, field->mul(t, d));
}

}  // namespace

PointPair p2_point(long m) {
  if (m < 1) throw Error(Errc::InvalidInput, "p2 needs m >= 1");
  const CubicPolynomial poly{Rational(-1), Rational(0), Rational(-m)};
  const int n = static_cast<int>(isolate_real_roots(poly.as_polynomial()).size());
  return basis_point(std::make_shared<const CubicField>(CubicField::with_root_index(poly, n - 1)));
}

PointPair nt_basis_point(const CubicPolynomial& poly) {
  const auto roots = isolate_real_roots(poly.as_polynomial());
  auto field = std::make_shared<const CubicField>(poly, RootSpec{roots.back().lo, roots.back().hi});
  if (field->sign(FieldElement::theta()) <= 0)
    throw Error(Errc::InvalidInput, "largest real root of " + poly.to_string() + " is not positive");
  return basis_point(field);
}

namespace {

long parse_long(std::string_view s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw Error(Errc::InvalidInput, "expected an integer: " + std::string(s));
  return v;
}

}  // namespace

CubicPolynomial parse_cubic(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    c.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (c.size() != 3) throw Error(Errc::InvalidInput, "expected c0,c1,c2: " + std::string(text));
  return {c[0], c[1], c[2]};
}

PointPair family_point(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::InvalidInput, "family needs name:argument");
  const auto name = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (name == "purecubic") return purecubic_point(parse_long(arg));
  if (name == "p2") return p2_point(parse_long(arg));
  if (name == "nt-basis") return nt_basis_point(parse_cubic(arg));
  throw Error(Errc::InvalidInput, "unknown family " + std::string(name));
}

}  // namespace cubefarey
