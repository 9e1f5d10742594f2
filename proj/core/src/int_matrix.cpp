// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/int_matrix.hpp"

#include <sstream>

namespace cubefarey {

IntMatrix3::IntMatrix3() {
  for (auto& row : m_) row.fill(Integer(0));
}

IntMatrix3::IntMatrix3(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix3() {
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m_[i][j++] = v;
    ++i;
  }
}

IntMatrix3 IntMatrix3::identity() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

IntMatrix3 IntMatrix3::elementary(int i, int j) {
  IntMatrix3 m = identity();
  m(i, j) += 1;
  return m;
}

Integer IntMatrix3::det() const {
  const auto& a = m_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Integer IntMatrix3::trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

Integer IntMatrix3::principal_minor_sum() const {
  const auto& a = m_;
  return (a[1][1] * a[2][2] - a[1][2] * a[2][1]) + (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
         (a[0][0] * a[1][1] - a[0][1] * a[1][0]);
}

IntMatrix3 IntMatrix3::transpose() const {
  IntMatrix3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t.m_[j][i] = m_[i][j];
  return t;
}

Polynomial IntMatrix3::charpoly() const {
  return Polynomial({Rational(-det()), Rational(principal_minor_sum()), Rational(-trace()), Rational(1)});
}

bool IntMatrix3::all_positive() const {
  for (const auto& row : m_)
    for (const auto& v : row)
      if (v <= 0) return false;
  return true;
}

bool IntMatrix3::all_nonnegative() const {
  for (const auto& row : m_)
    for (const auto& v : row)
      if (v < 0) return false;
  return true;
}

std::array<Integer, 3> IntMatrix3::apply(const std::array<Integer, 3>& v) const {
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return out;
}

std::string IntMatrix3::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < 3; ++j) os << (j ? ", " : "") << m_[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix3 operator*(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      c.m_[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
  return c;
}

IntMatrix3 operator+(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c.m_[i][j] = a.m_[i][j] + b.m_[i][j];
  return c;
}

IntMatrix3 operator-(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c.m_[i][j] = a.m_[i][j] - b.m_[i][j];
  return c;
}

}  // namespace cubefarey
