// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <initializer_list>
#include <string>

#include "cubefarey/polynomial.hpp"
#include "cubefarey/rational.hpp"

namespace cubefarey {

/// 3x3 matrix over Z, row-major.
class IntMatrix3 {
 public:
  IntMatrix3();
  IntMatrix3(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix3 identity();
  /// Identity plus a single 1 at (i, j).
  static IntMatrix3 elementary(int i, int j);

  [[nodiscard]] Integer& operator()(int i, int j) { return m_[idx(i)][idx(j)]; }
  [[nodiscard]] const Integer& operator()(int i, int j) const { return m_[idx(i)][idx(j)]; }

  [[nodiscard]] Integer det() const;
  [[nodiscard]] Integer trace() const;
  [[nodiscard]] Integer principal_minor_sum() const;
  [[nodiscard]] IntMatrix3 transpose() const;
  /// x^3 - tr x^2 + (sum of principal 2x2 minors) x - det.
  [[nodiscard]] Polynomial charpoly() const;
  [[nodiscard]] bool all_positive() const;
  [[nodiscard]] bool all_nonnegative() const;
  [[nodiscard]] std::array<Integer, 3> apply(const std::array<Integer, 3>& v) const;
  [[nodiscard]] std::string to_string() const;

  friend IntMatrix3 operator*(const IntMatrix3& a, const IntMatrix3& b);
  friend IntMatrix3 operator+(const IntMatrix3& a, const IntMatrix3& b);
  friend IntMatrix3 operator-(const IntMatrix3& a, const IntMatrix3& b);
  friend bool operator==(const IntMatrix3& a, const IntMatrix3& b) { return a.m_ == b.m_; }

 private:
  static std::size_t idx(int k) { return static_cast<std::size_t>(k); }
  std::array<std::array<Integer, 3>, 3> m_;
};

}  // namespace cubefarey
