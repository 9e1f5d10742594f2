// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/rational.hpp"

#include <algorithm>
#include <cctype>

#include "cubefarey/error.hpp"

namespace cubefarey {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Reducible: return "Reducible";
    case Errc::NotIsolating: return "NotIsolating";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::RefinementCap: return "RefinementCap";
    case Errc::NotInDomain: return "NotInDomain";
    case Errc::TieImpossible: return "TieImpossible";
    case Errc::BoundaryImpossible: return "BoundaryImpossible";
    case Errc::WrongTriangle: return "WrongTriangle";
    case Errc::ForbiddenWordDetected: return "ForbiddenWordDetected";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::EigenRelationViolated: return "EigenRelationViolated";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::FaceCollision: return "FaceCollision";
    case Errc::SurfaceMembershipViolated: return "SurfaceMembershipViolated";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(Errc::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(s, text));
  } else {
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

int decimal_digits(const Integer& n) {
  if (n == 0) return 0;
  Integer a = abs(n);
  // mpz_sizeinbase may overshoot by one in base 10, so count exactly.
  return static_cast<int>(a.get_str().size());
}

int decimal_height(const Rational& q) {
  if (q == 0) return 0;
  return std::max(decimal_digits(q.get_num()), decimal_digits(q.get_den()));
}

std::size_t hash_integer(const Integer& n) noexcept {
  const mpz_srcptr z = n.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(z->_mp_size);
  const auto limbs = static_cast<std::size_t>(z->_mp_size < 0 ? -z->_mp_size : z->_mp_size);
  for (std::size_t k = 0; k < limbs; ++k) hash_combine(seed, static_cast<std::size_t>(z->_mp_d[k]));
  return seed;
}

std::size_t hash_rational(const Rational& q) noexcept {
  std::size_t seed = hash_integer(q.get_num());
  hash_combine(seed, hash_integer(q.get_den()));
  return seed;
}

}  // namespace cubefarey
