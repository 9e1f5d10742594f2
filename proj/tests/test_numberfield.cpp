// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cubefarey/error.hpp"
#include "cubefarey/number_field.hpp"
#include "support/examples.hpp"

using namespace cubefarey;

namespace {

FieldElement random_element(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::IoError;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_EQ(format_rational(Rational(5)), "5/1");
  EXPECT_EQ(format_rational(Rational(-3, 9)), "-1/3");
  EXPECT_EQ(code_of([] { (void)parse_rational("1/0"); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { (void)parse_rational("x"); }), Errc::InvalidInput);
}

TEST(Rational, DecimalHeight) {
  EXPECT_EQ(decimal_height(Rational(0)), 0);
  EXPECT_EQ(decimal_height(Rational(123, 7)), 3);
  EXPECT_EQ(decimal_height(Rational(-1, 1000)), 4);
}

TEST(Polynomial, SturmCountsAndIsolation) {
  const Polynomial f({Rational(-1), 7, -6, 1});  // three real roots near 0.198, 1.555, 4.247
  const SturmSequence s(f);
  EXPECT_EQ(s.count_real_roots(), 3);
  EXPECT_EQ(s.count_roots(4, 6), 1);
  EXPECT_EQ(s.count_roots(0, 2), 2);
  const auto roots = isolate_real_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  for (const auto& iv : roots) {
    EXPECT_NE(f.sign_at(iv.lo), 0);
    EXPECT_NE(f.sign_at(iv.hi), 0);
    EXPECT_EQ(s.count_roots(iv.lo, iv.hi), 1);
  }
  EXPECT_LT(roots[0].hi, roots[1].lo + Rational(1, 1000000));
}

TEST(Polynomial, RationalRoots) {
  EXPECT_EQ(rational_roots(Polynomial({Rational(-1), 0, 0, 1})), std::vector<Rational>{Rational(1)});
  EXPECT_TRUE(rational_roots(Polynomial({Rational(-2), 0, 0, 1})).empty());
  const Polynomial g({Rational(-3, 8), Rational(-1, 4), Rational(3, 2), 1});  // (x + 3/2)(x - 1/2)(x + 1/2)
  EXPECT_EQ(rational_roots(g), (std::vector<Rational>{Rational(-3, 2), Rational(-1, 2), Rational(1, 2)}));
}

TEST(FieldNew, ValidFields) {
  EXPECT_NO_THROW(CubicField({Rational(-2), 0, 0}, {1, 2}));
  EXPECT_NO_THROW(CubicField({Rational(-1), 7, -6}, {4, 6}));
}

TEST(FieldNew, Errors) {
  EXPECT_EQ(code_of([] { CubicField({Rational(-1), 0, 0}, {0, 2}); }), Errc::Reducible);
  EXPECT_EQ(code_of([] { CubicField({Rational(-1), 7, -6}, {0, 2}); }), Errc::NotIsolating);
  EXPECT_EQ(code_of([] { CubicField({Rational(-2), 0, 0}, {2, 3}); }), Errc::NotIsolating);
  EXPECT_EQ(code_of([] { CubicField({Rational(-2), 0, 0}, {2, 1}); }), Errc::NotIsolating);
}

TEST(FieldNew, RootIndex) {
  const auto k = CubicField::with_root_index({Rational(-1), 7, -6}, 2);
  EXPECT_GT(k.sign(FieldElement::theta() - FieldElement(Rational(4))), 0);
  EXPECT_THROW(CubicField::with_root_index({Rational(-1), 7, -6}, 3), Error);
}

TEST(FieldArithmetic, Examples) {
  const auto k = examples::cbrt2_field();
  const FieldElement t = FieldElement::theta();
  const FieldElement t2(0, 0, 1);
  EXPECT_EQ(k->mul(t, t2), FieldElement(Rational(2)));
  EXPECT_EQ(k->inv(t), FieldElement(0, 0, Rational(1, 2)));
  EXPECT_EQ(k->mul(FieldElement(1, 1, 0), FieldElement(1, -1, 0)), FieldElement(1, 0, -1));
  EXPECT_EQ(code_of([&] { (void)k->inv(FieldElement()); }), Errc::DivisionByZero);
}

TEST(FieldArithmetic, Norm) {
  const auto k = examples::cbrt2_field();
  EXPECT_EQ(k->norm(FieldElement::theta()), 2);
  EXPECT_EQ(k->norm(FieldElement()), 0);
  EXPECT_EQ(k->norm(FieldElement(1, 1, 0)), 3);
}

TEST(FieldSign, Examples) {
  const auto k = examples::cbrt2_field();
  EXPECT_EQ(k->sign(FieldElement(-1, 1, 0)), 1);
  EXPECT_EQ(k->sign(FieldElement()), 0);
  EXPECT_EQ(k->sign(FieldElement(-1, -1, 1)), -1);
}

TEST(FieldSign, CapIsReported) {
  const CubicField k({Rational(-2), 0, 0}, {1, 2}, 0);
  const Polynomial f({Rational(-2), 0, 0, 1});
  const RootInterval iv = refine_root(f, {1, 2}, Rational(Integer(1), Integer(Integer(1) << 200)));
  EXPECT_EQ(code_of([&] { (void)k.sign(FieldElement(-iv.lo, 1, 0)); }), Errc::RefinementCap);
  const CubicField roomy({Rational(-2), 0, 0}, {1, 2});
  EXPECT_EQ(roomy.sign(FieldElement(-iv.lo, 1, 0)), 1);
}

TEST(FieldFloor, Examples) {
  const auto k5 = std::make_shared<const CubicField>(CubicField::with_root_index({Rational(-5), 0, 0}, 0));
  EXPECT_EQ(k5->floor(FieldElement::theta()), 1);
  const auto k = examples::cbrt2_field();
  EXPECT_EQ(k->floor(FieldElement(0, 0, 1)), 1);
  EXPECT_EQ(k->floor(FieldElement(0, -1, 0)), -2);
  EXPECT_EQ(k->floor(FieldElement(Rational(7))), 7);
}

TEST(FieldMinPoly, Examples) {
  const auto k = examples::cbrt2_field();
  EXPECT_EQ(k->min_poly(FieldElement::theta()), Polynomial({Rational(-2), 0, 0, 1}));
  EXPECT_EQ(k->min_poly(FieldElement(Rational(5, 3))), Polynomial({Rational(-5, 3), 1}));
  EXPECT_EQ(k->min_poly(FieldElement(1, 1, 0)), Polynomial({Rational(-3), 3, -3, 1}));
}

class FieldProperties : public ::testing::TestWithParam<int> {};

TEST_P(FieldProperties, RandomElements) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()));
  const std::vector<FieldPtr> fields{examples::cbrt2_field(), examples::real_field(), examples::mixed_field()};
  for (const auto& k : fields) {
    for (int trial = 0; trial < 40; ++trial) {
      const FieldElement x = random_element(rng);
      const FieldElement y = random_element(rng);
      EXPECT_EQ(k->norm(k->mul(x, y)), k->norm(x) * k->norm(y));
      if (!x.is_zero()) {
        EXPECT_EQ(k->mul(x, k->inv(x)), FieldElement(1));
      }
      const int s = k->sign(k->mul(x, x));
      EXPECT_GE(s, 0);
      EXPECT_EQ(s == 0, x.is_zero());
      // min_poly(x) evaluated at x through field arithmetic
      const Polynomial mp = k->min_poly(x);
      FieldElement acc;
      for (int d = mp.degree(); d >= 0; --d) acc = k->mul(acc, x) + FieldElement(mp.coeff(d));
      EXPECT_TRUE(acc.is_zero());
      const Integer fl = k->floor(x);
      EXPECT_GE(k->sign(x - FieldElement(Rational(fl))), 0);
      EXPECT_LT(k->sign(x - FieldElement(Rational(fl + 1))), 0);
      EXPECT_EQ(k->sign(x) * k->sign(y), k->sign(k->mul(x, y)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FieldProperties, ::testing::Values(1, 2, 3));
