// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cubefarey/error.hpp"

namespace cubefarey {

std::vector<IndexPair> PeriodResult::period_digits() const {
  if (!found()) return {};
  return {digits.begin() + static_cast<long>(preperiod), digits.end()};
}

PeriodResult detect_period(const PointPair& point, const ValueExponent& r, std::size_t cap) {
  if (cap == 0) throw Error(Errc::InvalidInput, "cap must be at least 1");
  PeriodResult res;
  std::unordered_map<PointPair, std::size_t, PointPairHash> seen;
  res.states.push_back(point);
  seen.emplace(point, 0);
  for (std::size_t n = 0; n < cap; ++n) {
    auto [eps, next] = step(res.states.back(), r);
    if (!res.digits.empty() && is_forbidden(res.digits.back(), eps))
      throw Error(Errc::ForbiddenWordDetected,
                  res.digits.back().to_string() + eps.to_string() + " at step " + std::to_string(n));
    res.digits.push_back(eps);
    auto [it, inserted] = seen.emplace(next, n + 1);
    res.states.push_back(std::move(next));
    if (!inserted) {
      res.status = PeriodStatus::Found;
      res.preperiod = it->second;
      res.period = n + 1 - it->second;
      res.states.pop_back();
      return res;
    }
  }
  res.status = PeriodStatus::CapExceeded;
  return res;
}

IntMatrix3 product_M(const std::vector<IndexPair>& digits) {
  ConvergentState c(IntMatrix3::identity());
  for (const auto& e : digits) c.advance(e);
  return c.matrix();
}

PeriodMatrix period_matrix(const PeriodResult& result) {
  if (!result.found()) throw Error(Errc::InvalidInput, "no period was found");
  PeriodMatrix pm;
  pm.matrix = product_M(result.period_digits());
  pm.charpoly = pm.matrix.charpoly();
  const PointPair& s = result.states[result.preperiod];
  const CubicField& f = s.field();
  const std::array<FieldElement, 3> nu{s.gamma(), s.alpha(), s.beta()};
  std::array<FieldElement, 3> image;
  for (int i = 0; i < 3; ++i)
    image[static_cast<std::size_t>(i)] = Rational(pm.matrix(i, 0)) * nu[0] + Rational(pm.matrix(i, 1)) * nu[1] +
                                         Rational(pm.matrix(i, 2)) * nu[2];
  pm.lambda = f.div(image[0], nu[0]);
  for (std::size_t i = 1; i < 3; ++i)
    if (f.mul(pm.lambda, nu[i]) != image[i])
      throw Error(Errc::EigenRelationViolated, "period matrix does not fix the direction of the periodic state");
  if (f.min_poly(pm.lambda) != pm.charpoly)
    throw Error(Errc::EigenRelationViolated,
                "eigenvalue minimal polynomial " + f.min_poly(pm.lambda).to_string() + " differs from " +
                    pm.charpoly.to_string());
  return pm;
}

PisotCertificate is_pisot(const Polynomial& poly) {
  PisotCertificate cert;
  cert.poly = poly;
  if (poly.degree() != 3 || poly.leading() != 1) {
    cert.reason = "not a monic cubic";
    return cert;
  }
  for (const auto& c : poly.coeffs())
    if (c.get_den() != 1) {
      cert.reason = "coefficients are not integers";
      return cert;
    }
  const SturmSequence sturm(poly);
  cert.real_roots = sturm.count_real_roots();
  if (!rational_roots(poly).empty()) {
    cert.reason = "reducible over Q";
    return cert;
  }
  cert.roots_above_one = sturm.count_roots_above(Rational(1));
  const auto roots = isolate_real_roots(poly);
  cert.dominant = roots.back();
  if (cert.roots_above_one != 1) {
    cert.reason = std::to_string(cert.roots_above_one) + " real roots above 1";
    return cert;
  }
  const CubicPolynomial cubic = CubicPolynomial::from_polynomial(poly);
  const CubicField field(cubic, RootSpec{cert.dominant->lo, cert.dominant->hi});
  // poly = (x - rho)(x^2 + s x + t)
  const FieldElement s = FieldElement(cubic.c2) + FieldElement::theta();
  const FieldElement t = Rational(-cubic.c0) * field.inv(FieldElement::theta());
  const FieldElement one(1);
  const std::array<std::pair<const char*, FieldElement>, 4> jury{{
      {"1 - t", one - t},
      {"1 + t", one + t},
      {"1 + s + t", one + s + t},
      {"1 - s + t", one - s + t},
  }};
  for (const auto& [name, value] : jury) {
    if (field.sign(value) <= 0) {
      cert.reason = std::string("conjugates not inside the unit disk (") + name + " <= 0)";
      return cert;
    }
  }
  cert.pisot = true;
  cert.reason = "dominant root > 1, conjugates inside the unit disk";
  return cert;
}

namespace {

double log_abs(const mpf_class& x) {
  long exp = 0;
  const double mant = mpf_get_d_2exp(&exp, x.get_mpf_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

std::vector<double> vertex_error_profile(const PointPair& point, const ExpansionOrbit& orbit, double exponent) {
  std::size_t bits = 64;
  for (const auto& c : orbit.convergents)
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) bits = std::max(bits, mpz_sizeinbase(c.matrix()(i, k).get_mpz_t(), 2));
  const auto prec = static_cast<unsigned>(4 * bits + 128);
  const CubicField& f = point.field();
  const mpf_class a = f.approximate(point.alpha(), prec);
  const mpf_class b = f.approximate(point.beta(), prec);
  std::vector<double> out;
  out.reserve(orbit.convergents.size());
  for (const auto& c : orbit.convergents) {
    const IntMatrix3& m = c.matrix();
    double worst = 0;
    for (int k = 0; k < 3; ++k) {
      if (m(0, k) <= 0) throw Error(Errc::DegenerateDenominator, "convergent column with p <= 0");
      const mpf_class p(m(0, k), prec), q(m(1, k), prec), r(m(2, k), prec);
      const mpf_class e1 = abs(a - q / p), e2 = abs(b - r / p);
      const mpf_class e = e1 > e2 ? e1 : e2;
      if (e == 0) continue;
      worst = std::max(worst, std::exp(log_abs(e) + exponent * log_abs(p)));
    }
    out.push_back(worst);
  }
  return out;
}

bool is_primitive(const IntMatrix3& m) {
  if (!m.all_nonnegative()) throw Error(Errc::NegativeEntry, "matrix has a negative entry");
  IntMatrix3 p = m;
  for (int k = 1; k <= 5; ++k) {
    if (p.all_positive()) return true;
    p = p * m;
  }
  return false;
}

}  // namespace cubefarey
