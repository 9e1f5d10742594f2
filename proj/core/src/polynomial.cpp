// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cubefarey/error.hpp"

namespace cubefarey {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(Errc::InvalidInput, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lb;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

SturmSequence::SturmSequence(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::InvalidInput, "Sturm sequence of the zero polynomial");
  chain_.push_back(f);
  Polynomial d = f.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    auto rem = Polynomial::divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (rem.is_zero()) break;
    chain_.push_back(Rational(-1) * rem);
  }
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::sign_changes_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(p.sign_at(x));
  return count_changes(s);
}

int SturmSequence::sign_changes_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()));
  return count_changes(s);
}

int SturmSequence::sign_changes_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()) * ((p.degree() % 2 == 0) ? 1 : -1));
  return count_changes(s);
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return sign_changes_at(lo) - sign_changes_at(hi);
}

int SturmSequence::count_roots_above(const Rational& lo) const {
  return sign_changes_at(lo) - sign_changes_at_pos_infinity();
}

int SturmSequence::count_real_roots() const {
  return sign_changes_at_neg_infinity() - sign_changes_at_pos_infinity();
}

Rational root_bound(const Polynomial& f) {
  if (f.degree() < 1) return Rational(1);
  Rational m = 0;
  const Rational& lc = f.leading();
  for (int k = 0; k < f.degree(); ++k) m = std::max(m, Rational(abs(f.coeff(k) / lc)));
  return m + 1;
}

namespace {

// Moves a prospective split point off a root of f, staying strictly inside (lo, hi).
Rational split_point(const Polynomial& f, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  int k = 3;
  while (f.sign_at(mid) == 0) {
    mid = lo + (hi - lo) / k;
    ++k;
  }
  return mid;
}

void isolate(const Polynomial& f, const SturmSequence& sturm, const Rational& lo, const Rational& hi,
             std::vector<RootInterval>& out) {
  const int n = sturm.count_roots(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = split_point(f, lo, hi);
  isolate(f, sturm, lo, mid, out);
  isolate(f, sturm, mid, hi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& f) {
  if (f.degree() < 1) return {};
  const SturmSequence sturm(f);
  Rational b = root_bound(f);
  // The bound is strict, so +-b are never roots.
  std::vector<RootInterval> out;
  isolate(f, sturm, -b, b, out);
  return out;
}

RootInterval refine_root(const Polynomial& f, RootInterval iv, const Rational& width) {
  int s_lo = f.sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int s = f.sign_at(mid);
    if (s == 0) {
      // Exact rational root: collapse onto a tiny interval around it.
      const Rational eps = width / 4;
      return {mid - eps, mid + eps};
    }
    if (s == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<Rational> rational_roots(const Polynomial& f) {
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  const Polynomial g = f.monic();
  // With D the lcm of the denominators, D^n g(y/D) is monic over Z, so any
  // rational root of g has the form k/D.
  Integer den = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Rational width(Integer(1), den * 2);
  for (auto iv : isolate_real_roots(g)) {
    iv = refine_root(g, iv, width);
    Integer klo, khi;
    Rational a = iv.lo * den;
    Rational b = iv.hi * den;
    mpz_cdiv_q(klo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(khi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    for (Integer k = klo; k <= khi; ++k) {
      Rational cand(k, den);
      cand.canonicalize();
      if (g(cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace cubefarey
