// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/farey.hpp"

#include <algorithm>
#include <numeric>

#include "cubefarey/error.hpp"

namespace cubefarey {

IndexPair IndexPair::make(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || i == j)
    throw Error(Errc::InvalidInput, "(" + std::to_string(i) + "," + std::to_string(j) + ") is not a digit");
  return {i, j};
}

const std::array<IndexPair, 6>& IndexPair::all() {
  static const std::array<IndexPair, 6> digits{
      IndexPair{1, 2}, IndexPair{2, 1}, IndexPair{0, 1}, IndexPair{1, 0}, IndexPair{0, 2}, IndexPair{2, 0}};
  return digits;
}

int IndexPair::ordinal() const noexcept {
  const auto& a = all();
  return static_cast<int>(std::find(a.begin(), a.end(), *this) - a.begin());
}

std::string IndexPair::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::array<IndexPair, 2> forbidden_successors(IndexPair prev) {
  const int k = prev.third();
  return {IndexPair{prev.i, k}, IndexPair{k, prev.i}};
}

bool is_forbidden(IndexPair prev, IndexPair next) {
  const auto f = forbidden_successors(prev);
  return next == f[0] || next == f[1];
}

ValueExponent::ValueExponent(unsigned long p, unsigned long q) : p_(p), q_(q) {
  if (p == 0 || q == 0) throw Error(Errc::InvalidInput, "r must be positive");
  if (std::gcd(p, q) != 1) throw Error(Errc::InvalidInput, "r = p/q needs gcd(p, q) = 1");
  if (p % 3 == 0) throw Error(Errc::InvalidInput, "r = p/q needs p not divisible by 3");
}

ValueExponent ValueExponent::parse(std::string_view text) {
  const Rational r = parse_rational(text);
  if (r <= 0 || !r.get_num().fits_ulong_p() || !r.get_den().fits_ulong_p())
    throw Error(Errc::InvalidInput, "r out of range: " + std::string(text));
  return {r.get_num().get_ui(), r.get_den().get_ui()};
}

std::string ValueExponent::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

PointPair::PointPair(FieldPtr field, FieldElement alpha, FieldElement beta, bool)
    : field_(std::move(field)), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

PointPair::PointPair(FieldPtr field, FieldElement alpha, FieldElement beta)
    : PointPair(std::move(field), std::move(alpha), std::move(beta), true) {
  if (auto why = domain_violation(); !why.empty()) throw Error(Errc::NotInDomain, why);
}

PointPair PointPair::trusted(FieldPtr field, FieldElement alpha, FieldElement beta) {
  return PointPair(std::move(field), std::move(alpha), std::move(beta), true);
}

std::string PointPair::domain_violation() const {
  if (!field_) return "no field";
  if (alpha_[1] * beta_[2] - alpha_[2] * beta_[1] == 0) return "1, alpha, beta are linearly dependent";
  if (field_->sign(alpha_) <= 0) return "alpha is not positive";
  if (field_->sign(beta_) <= 0) return "beta is not positive";
  if (field_->sign(gamma()) <= 0) return "alpha + beta is not below 1";
  return {};
}

std::pair<FieldElement, FieldElement> PointPair::starred() const {
  const FieldElement g = field_->inv(gamma());
  return {field_->mul(alpha_, g), field_->mul(beta_, g)};
}

std::size_t PointPair::hash() const noexcept {
  std::size_t seed = alpha_.hash();
  hash_combine(seed, beta_.hash());
  return seed;
}

namespace {

std::array<IntMatrix3, 6> build_A() {
  return {IntMatrix3{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}},    IntMatrix3{{1, 1, 0}, {0, 1, 0}, {0, 1, 1}},
          IntMatrix3{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}},    IntMatrix3{{2, -1, -1}, {1, 0, -1}, {0, 0, 1}},
          IntMatrix3{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}},    IntMatrix3{{2, -1, -1}, {0, 1, 0}, {1, -1, 0}}};
}

std::array<IntMatrix3, 6> build_M() {
  std::array<IntMatrix3, 6> m;
  for (const auto& e : IndexPair::all()) m[static_cast<std::size_t>(e.ordinal())] = IntMatrix3::elementary(e.i, e.j);
  return m;
}

}  // namespace

const IntMatrix3& matrix_A(IndexPair eps) {
  static const auto table = build_A();
  return table[static_cast<std::size_t>(eps.ordinal())];
}

const IntMatrix3& matrix_S() {
  static const IntMatrix3 s{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}};
  return s;
}

const IntMatrix3& matrix_S_inverse() {
  static const IntMatrix3 s{{1, -1, -1}, {0, 1, 0}, {0, 0, 1}};
  return s;
}

const IntMatrix3& matrix_M(IndexPair eps) {
  static const auto table = build_M();
  return table[static_cast<std::size_t>(eps.ordinal())];
}

std::pair<Rational, Rational> frac_apply(const IntMatrix3& a, const Rational& x, const Rational& y) {
  auto row = [&](int i) {
    Rational v = Rational(a(i, 0)) + Rational(a(i, 1)) * x + Rational(a(i, 2)) * y;
    v.canonicalize();
    return v;
  };
  const Rational d = row(0);
  if (d == 0) throw Error(Errc::ZeroDenominator, "fractional linear map has a vanishing denominator");
  Rational u = row(1) / d;
  Rational v = row(2) / d;
  u.canonicalize();
  v.canonicalize();
  return {u, v};
}

std::pair<FieldElement, FieldElement> frac_apply(const CubicField& field, const IntMatrix3& a,
                                                 const FieldElement& x, const FieldElement& y) {
  auto row = [&](int i) {
    return FieldElement(Rational(a(i, 0))) + Rational(a(i, 1)) * x + Rational(a(i, 2)) * y;
  };
  const FieldElement d = row(0);
  if (d.is_zero()) throw Error(Errc::ZeroDenominator, "fractional linear map has a vanishing denominator");
  const FieldElement di = field.inv(d);
  return {field.mul(row(1), di), field.mul(row(2), di)};
}

namespace {

Rational rational_pow(const Rational& x, unsigned long n) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), n);
  return out;
}

struct Weight {
  FieldElement power;
  Rational norm_power;
};

Weight weight_of(const CubicField& field, const ValueExponent& r, const FieldElement& x) {
  return {field.pow(x, r.p()), rational_pow(abs(field.norm(x)), r.q())};
}

Ordering compare(const CubicField& field, const Weight& x, const Weight& y) {
  const int s = field.sign(x.norm_power == y.norm_power ? x.power - y.power
                                                         : y.norm_power * x.power - x.norm_power * y.power);
  if (s == 0) throw Error(Errc::TieImpossible, "equal weights; inputs violate the domain invariants");
  return s < 0 ? Ordering::Less : Ordering::Greater;
}

}  // namespace

Ordering weight_compare(const CubicField& field, const ValueExponent& r, const FieldElement& x,
                        const FieldElement& y) {
  return compare(field, weight_of(field, r, x), weight_of(field, r, y));
}

namespace {

// The line splitting the pair {i, j} into △(i, j) and △(j, i), oriented so that
// positive means the first of the two.
FieldElement splitting_form(const PointPair& pt, int lo_index, int hi_index) {
  const FieldElement& a = pt.alpha();
  const FieldElement& b = pt.beta();
  const FieldElement one(1);
  if (lo_index == 1 && hi_index == 2) return a - b;
  if (lo_index == 0 && hi_index == 1) return one - Rational(2) * a - b;
  return one - a - Rational(2) * b;
}

int pair_orientation(const PointPair& pt, IndexPair eps) {
  const int lo = std::min(eps.i, eps.j);
  const int hi = std::max(eps.i, eps.j);
  const int s = pt.field().sign(splitting_form(pt, lo, hi));
  if (s == 0) throw Error(Errc::BoundaryImpossible, "point on a triangle boundary");
  // (1,2), (0,1), (0,2) sit on the positive side.
  return eps.i == lo ? s : -s;
}

}  // namespace

bool in_triangle(const PointPair& point, IndexPair eps) { return pair_orientation(point, eps) > 0; }

IndexPair select_epsilon(const PointPair& point, const ValueExponent& r) {
  const CubicField& f = point.field();
  const std::array<Weight, 3> w{weight_of(f, r, point.gamma()), weight_of(f, r, point.alpha()),
                                weight_of(f, r, point.beta())};
  std::size_t k = 0;
  if (compare(f, w[1], w[0]) == Ordering::Less) k = 1;
  if (compare(f, w[2], w[k]) == Ordering::Less) k = 2;
  IndexPair eps;
  if (k == 0) eps = {1, 2};
  else if (k == 2) eps = {0, 1};
  else eps = {0, 2};
  if (pair_orientation(point, eps) < 0) std::swap(eps.i, eps.j);
  return eps;
}

PointPair apply_T(const PointPair& point, IndexPair eps) {
  if (!in_triangle(point, eps))
    throw Error(Errc::WrongTriangle, "point is not in the triangle of " + eps.to_string());
  const CubicField& f = point.field();
  const FieldElement& x = point.alpha();
  const FieldElement& y = point.beta();
  const FieldElement one(1);
  FieldElement nx, ny;
  if (eps == IndexPair{1, 2}) {
    const FieldElement d = f.inv(one - y);
    nx = f.mul(x - y, d);
    ny = f.mul(y, d);
  } else if (eps == IndexPair{2, 1}) {
    const FieldElement d = f.inv(one - x);
    nx = f.mul(x, d);
    ny = f.mul(y - x, d);
  } else if (eps == IndexPair{0, 1}) {
    const FieldElement d = f.inv(one - x);
    nx = f.mul(x, d);
    ny = f.mul(y, d);
  } else if (eps == IndexPair{1, 0}) {
    const FieldElement d = f.inv(x + y);
    nx = f.mul(Rational(2) * x + y - one, d);
    ny = f.mul(y, d);
  } else if (eps == IndexPair{0, 2}) {
    const FieldElement d = f.inv(one - y);
    nx = f.mul(x, d);
    ny = f.mul(y, d);
  } else {
    const FieldElement d = f.inv(x + y);
    nx = f.mul(x, d);
    ny = f.mul(x + Rational(2) * y - one, d);
  }
  return PointPair::trusted(point.field_ptr(), std::move(nx), std::move(ny));
}

std::pair<IndexPair, PointPair> step(const PointPair& point, const ValueExponent& r) {
  const IndexPair eps = select_epsilon(point, r);
  return {eps, apply_T(point, eps)};
}

void ConvergentState::advance(IndexPair eps) {
  for (int row = 0; row < 3; ++row) m_(row, eps.j) += m_(row, eps.i);
}

std::pair<Rational, Rational> ConvergentState::vertex(int k) const {
  if (m_(0, k) == 0) throw Error(Errc::DegenerateDenominator, "convergent column with p = 0");
  Rational q(m_(1, k), m_(0, k));
  Rational r(m_(2, k), m_(0, k));
  q.canonicalize();
  r.canonicalize();
  return {q, r};
}

std::array<std::pair<Rational, Rational>, 3> ConvergentState::triangle() const {
  return {vertex(0), vertex(1), vertex(2)};
}

bool ConvergentState::contains(const CubicField& field, const FieldElement& alpha, const FieldElement& beta) const {
  const auto v = triangle();
  const Rational area = (v[1].first - v[0].first) * (v[2].second - v[0].second) -
                        (v[1].second - v[0].second) * (v[2].first - v[0].first);
  const int orientation = sgn(area);
  if (orientation == 0) return false;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % 3];
    // (b - a) x (P - a)
    const FieldElement cross = Rational(b.first - a.first) * (beta - FieldElement(a.second)) -
                               Rational(b.second - a.second) * (alpha - FieldElement(a.first));
    if (field.sign(cross) * orientation < 0) return false;
  }
  return true;
}

ExpansionOrbit expand(const PointPair& point, const ValueExponent& r, std::size_t n, const ExpandOptions& opts) {
  ExpansionOrbit orbit;
  orbit.digits.reserve(n);
  ConvergentState conv;
  if (opts.keep_states) orbit.states.push_back(point);
  if (opts.keep_convergents) orbit.convergents.push_back(conv);
  PointPair cur = point;
  for (std::size_t k = 0; k < n; ++k) {
    auto [eps, next] = step(cur, r);
    if (!orbit.digits.empty() && is_forbidden(orbit.digits.back(), eps))
      throw Error(Errc::ForbiddenWordDetected,
                  orbit.digits.back().to_string() + eps.to_string() + " at step " + std::to_string(k));
    orbit.digits.push_back(eps);
    conv.advance(eps);
    if (opts.keep_states) orbit.states.push_back(next);
    if (opts.keep_convergents) orbit.convergents.push_back(conv);
    cur = std::move(next);
  }
  return orbit;
}

int decimal_height(const Polynomial& f) {
  int h = 0;
  for (const auto& c : f.coeffs()) h = std::max(h, decimal_height(c));
  return h;
}

int state_height(const PointPair& point) {
  const CubicField& f = point.field();
  return std::max(decimal_height(f.min_poly(point.alpha())), decimal_height(f.min_poly(point.beta())));
}

std::vector<HeightSample> decimal_heights(const ExpansionOrbit& orbit) {
  std::vector<HeightSample> out;
  if (orbit.states.empty()) return out;
  const int h0 = state_height(orbit.states.front());
  out.reserve(orbit.states.size());
  for (const auto& s : orbit.states) {
    const int h = state_height(s);
    Rational rdh(h, h0);
    rdh.canonicalize();
    out.push_back({h, rdh});
  }
  return out;
}

}  // namespace cubefarey
