// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>

#include "cubefarey/analysis.hpp"
#include "cubefarey/error.hpp"
#include "cubefarey/families.hpp"
#include "cubefarey/stepped.hpp"
#include "support/examples.hpp"

using namespace cubefarey;

namespace {

Patch difference(const Patch& a, const Patch& b) {
  Patch out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool subset(const Patch& a, const Patch& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t lines_starting(const std::string& text, const std::string& prefix) {
  std::size_t n = text.rfind(prefix, 0) == 0 ? 1 : 0;
  return n + count_of(text, "\n" + prefix);
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

TEST(FaceInSurface, Examples) {
  const Direction dir = Direction::of(examples::cbrt2_point());
  for (const auto& f : seed_patch(Seed::U)) {
    EXPECT_TRUE(face_in_surface(dir, f, SurfaceVariant::S));
    EXPECT_FALSE(face_in_surface(dir, f, SurfaceVariant::SPrime));
  }
  for (const auto& f : seed_patch(Seed::UPrime)) {
    EXPECT_TRUE(face_in_surface(dir, f, SurfaceVariant::SPrime));
    EXPECT_FALSE(face_in_surface(dir, f, SurfaceVariant::S));
  }
  EXPECT_FALSE(face_in_surface(dir, Face{{2, 0, 0}, 0}));
}

TEST(ThetaApply, TwoZeroRules) {
  const IndexPair eps{2, 0};
  const Vec3 x{1, -2, 3};
  const auto zero = theta_apply(eps, Face{x, 0});
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_NE(std::find(zero.begin(), zero.end(), Face{apply_L_inverse(eps, x), 0}), zero.end());
  EXPECT_NE(std::find(zero.begin(), zero.end(), Face{apply_L_inverse(eps, Vec3{1, -2, 4}), 2}), zero.end());
  const auto one = theta_apply(eps, Face{x, 1});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (Face{apply_L_inverse(eps, x), 1}));
  for (const auto& e : IndexPair::all()) {
    EXPECT_EQ(apply_L(e, apply_L_inverse(e, x)), x);
    EXPECT_EQ(patch_apply(e, seed_patch(Seed::U)).size(), 4u) << e.to_string();
  }
}

TEST(PatchApply, EmptyAndCollision) {
  EXPECT_TRUE(patch_apply(IndexPair{1, 2}, Patch{}).empty());
  const Patch bad{Face{{0, 0, 0}, 0}, Face{{0, 0, 1}, 2}};
  EXPECT_EQ(code_of([&] { (void)patch_apply(IndexPair{2, 0}, bad); }), Errc::FaceCollision);
}

TEST(GrowPatch, CubeRootOfTwoFirstStepsNest) {
  const PointPair p = examples::cbrt2_point();
  const Direction dir = Direction::of(p);
  const auto& d = examples::cbrt2_digits();
  const Patch g1 = grow_patch({d[0]}, Seed::U, &dir);
  EXPECT_EQ(g1.size(), 4u);
  for (const auto& f : g1) EXPECT_TRUE(face_in_surface(dir, f));
  Patch prev = seed_patch(Seed::U);
  for (std::size_t n = 1; n <= 3; ++n) {
    const Patch next = grow_patch({d.begin(), d.begin() + static_cast<long>(n)}, Seed::U, &dir);
    EXPECT_TRUE(subset(prev, next)) << n;
    prev = next;
  }
  EXPECT_EQ(grow_patch({}, Seed::U), seed_patch(Seed::U));
}

TEST(GrowPatch, CountsMatchOracle) {
  const Direction dir = Direction::of(examples::cbrt2_point());
  const auto& d = examples::cbrt2_digits();
  const Patch full = grow_patch(d, Seed::U, &dir);
  EXPECT_EQ(full.size(), 174u);
  EXPECT_EQ(Integer(full.size()), face_count_oracle(d));
  for (long m = 1; m <= 3; ++m) {
    const PointPair p = p2_point(m);
    const Direction pd = Direction::of(p);
    const auto w = examples::p2_word(static_cast<int>(m));
    EXPECT_EQ(Integer(grow_patch(w, Seed::U, &pd).size()), face_count_oracle(w));
  }
}

TEST(GrowPatch, MembershipViolation) {
  const Direction dir = Direction::of(examples::cbrt2_point());
  EXPECT_EQ(code_of([&] { (void)grow_patch(examples::p2_word(2), Seed::U, &dir); }), Errc::SurfaceMembershipViolated);
}

TEST(GrowPatch, SeedsDifferByTheirSeeds) {
  const Direction dir = Direction::of(examples::cbrt2_point());
  const auto& d = examples::cbrt2_digits();
  for (std::size_t n = 0; n <= d.size(); ++n) {
    const std::vector<IndexPair> prefix(d.begin(), d.begin() + static_cast<long>(n));
    const Patch u = grow_patch(prefix, Seed::U, &dir);
    const Patch up = grow_patch(prefix, Seed::UPrime);
    EXPECT_EQ(difference(u, up), seed_patch(Seed::U)) << n;
    EXPECT_EQ(difference(up, u), seed_patch(Seed::UPrime)) << n;
  }
}

TEST(EigenDirection, CubeRootOfTwoAndP2) {
  const auto cbrt2 = detect_period(examples::cbrt2_point(), ValueExponent());
  std::vector<PointPair> states = cbrt2.states;
  states.push_back(states.front());
  for (const auto& c : verify_eigen_direction(states, cbrt2.digits)) {
    EXPECT_TRUE(c.direction_ok) << c.n;
    EXPECT_TRUE(c.scale_ok) << c.n;
  }
  const auto p2 = expand(p2_point(2), ValueExponent(), 6);
  const auto checks = verify_eigen_direction(p2.states, p2.digits);
  EXPECT_EQ(checks.size(), 6u);
  for (const auto& c : checks) EXPECT_TRUE(c.direction_ok && c.scale_ok) << c.n;
}

TEST(EigenDirection, WrongDigitFails) {
  const auto orbit = expand(examples::cbrt2_point(), ValueExponent(), 3);
  auto digits = orbit.digits;
  digits[0] = IndexPair{0, 1};
  const auto checks = verify_eigen_direction(orbit.states, digits);
  EXPECT_FALSE(checks[0].direction_ok && checks[0].scale_ok);
}

TEST(Bijectivity, CubeRootOfTwoAndP2Windows) {
  for (const PointPair& start : {examples::cbrt2_point(), p2_point(2)}) {
    const auto orbit = expand(start, ValueExponent(), 4);
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto report = check_bijectivity(orbit.digits[n], Direction::of(orbit.states[n + 1]),
                                            Direction::of(orbit.states[n]), 2);
      EXPECT_TRUE(report.ok()) << n << (report.failures.empty() ? "" : " " + report.failures.front());
      EXPECT_GT(report.target_faces, 0u);
    }
  }
}

TEST(FixedPoint, CubeRootOfTwoWindow) {
  const auto res = detect_period(examples::cbrt2_point(), ValueExponent());
  std::vector<PointPair> states = res.states;
  states.push_back(states.front());
  const auto report = check_fixed_point(states, res.digits, 2);
  EXPECT_TRUE(report.ok) << (report.failures.empty() ? "" : report.failures.front());
  EXPECT_GT(report.faces, 0u);
}

TEST(SurfaceWindow, AllFacesBelong) {
  const Direction dir = Direction::of(examples::cbrt2_point());
  const Patch w = surface_window(dir, 2);
  EXPECT_FALSE(w.empty());
  for (const auto& f : w) {
    EXPECT_TRUE(face_in_surface(dir, f));
    EXPECT_LE(f.sup_norm(), 2);
  }
  EXPECT_TRUE(subset(seed_patch(Seed::U), w));
}

TEST(Export, Formats) {
  const Patch u = seed_patch(Seed::U);
  const std::string svg = export_patch(u, nullptr, "svg");
  EXPECT_EQ(count_of(svg, "<path"), 3u);
  EXPECT_NE(svg.find("#d9d9d9"), std::string::npos);
  ExportOptions custom;
  custom.colors = {"red", "green", "blue"};
  custom.origin_marker = true;
  const std::string colored = export_patch(u, nullptr, "svg", custom);
  EXPECT_NE(colored.find("blue"), std::string::npos);
  EXPECT_NE(colored.find("<circle"), std::string::npos);

  const Direction dir = Direction::of(examples::cbrt2_point());
  const Patch g1 = grow_patch({examples::cbrt2_digits()[0]}, Seed::U, &dir);
  const std::string obj = export_patch(g1, &dir, "obj");
  EXPECT_EQ(lines_starting(obj, "f "), 4u);
  EXPECT_EQ(lines_starting(obj, "v "), 16u);

  EXPECT_EQ(count_of(export_patch({}, nullptr, "svg"), "<path"), 0u);
  EXPECT_NE(export_patch({}, nullptr, "svg").find("</svg>"), std::string::npos);
  EXPECT_EQ(lines_starting(export_patch({}, nullptr, "obj"), "f "), 0u);
  EXPECT_NE(export_patch({}, nullptr, "json").find("\"faces\""), std::string::npos);
  EXPECT_THROW((void)export_patch(u, nullptr, "png"), Error);
}
