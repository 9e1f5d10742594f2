// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace cubefarey {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or "num" (optional sign, surrounding blanks ignored) into
/// canonical form. Throws Error(InvalidInput) on malformed text or den == 0.
Rational parse_rational(std::string_view text);

/// Always "num/den" with den > 0, even for integers, so persisted data never
/// depends on context to be read back.
std::string format_rational(const Rational& q);

/// Number of decimal digits of |n|; 0 for n == 0.
int decimal_digits(const Integer& n);

/// Decimal height of p/q in lowest terms: max digit count of |p| and q,
/// with dh(0) = 0.
int decimal_height(const Rational& q);

std::size_t hash_integer(const Integer& n) noexcept;
std::size_t hash_rational(const Rational& q) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& n) { return ::sgn(n); }

}  // namespace cubefarey
