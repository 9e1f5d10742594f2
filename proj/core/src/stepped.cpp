// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/stepped.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cubefarey/error.hpp"
#include "cubefarey/serialize.hpp"

namespace cubefarey {

long Face::sup_norm() const { return std::max({std::labs(x[0]), std::labs(x[1]), std::labs(x[2])}); }

std::string Face::to_string() const {
  return "((" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + ")," +
         std::to_string(kind) + "*)";
}

Direction Direction::of(const PointPair& point) {
  return {point.field_ptr(), {point.gamma(), point.alpha(), point.beta()}};
}

FieldElement Direction::dot(const Vec3& x) const {
  return Rational(x[0]) * nu[0] + Rational(x[1]) * nu[1] + Rational(x[2]) * nu[2];
}

namespace {

Vec3 unit(int i) {
  Vec3 e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

Vec3 add(Vec3 a, const Vec3& b) {
  for (std::size_t k = 0; k < 3; ++k) a[k] += b[k];
  return a;
}

Vec3 sub(Vec3 a, const Vec3& b) {
  for (std::size_t k = 0; k < 3; ++k) a[k] -= b[k];
  return a;
}

}  // namespace

Patch seed_patch(Seed seed) {
  Patch p;
  for (int i = 0; i < 3; ++i) p.insert({seed == Seed::U ? unit(i) : Vec3{0, 0, 0}, i});
  return p;
}

bool face_in_surface(const Direction& dir, const Face& face, SurfaceVariant variant) {
  const CubicField& f = *dir.field;
  const int s1 = f.sign(dir.dot(face.x));
  const int s2 = f.sign(dir.dot(sub(face.x, unit(face.kind))));
  if (variant == SurfaceVariant::S) return s1 > 0 && s2 <= 0;
  return s1 >= 0 && s2 < 0;
}

Vec3 apply_L_inverse(IndexPair eps, const Vec3& x) {
  Vec3 y = x;
  y[static_cast<std::size_t>(eps.j)] -= x[static_cast<std::size_t>(eps.i)];
  return y;
}

Vec3 apply_L(IndexPair eps, const Vec3& x) {
  Vec3 y = x;
  y[static_cast<std::size_t>(eps.j)] += x[static_cast<std::size_t>(eps.i)];
  return y;
}

std::vector<Face> theta_apply(IndexPair eps, const Face& face) {
  if (face.kind != eps.j) return {Face{apply_L_inverse(eps, face.x), face.kind}};
  return {Face{apply_L_inverse(eps, add(face.x, unit(eps.i))), eps.i}, Face{apply_L_inverse(eps, face.x), eps.j}};
}

Patch patch_apply(IndexPair eps, const Patch& patch) {
  Patch out;
  for (const auto& face : patch)
    for (auto& img : theta_apply(eps, face))
      if (!out.insert(img).second)
        throw Error(Errc::FaceCollision, img.to_string() + " produced twice by " + eps.to_string());
  return out;
}

std::optional<Face> theta_preimage(IndexPair eps, const Face& face, const Direction& source, SurfaceVariant variant) {
  const Vec3 lz = apply_L(eps, face.x);
  std::vector<Face> candidates;
  if (face.kind != eps.j) candidates.push_back({lz, face.kind});
  if (face.kind == eps.i) candidates.push_back({sub(lz, unit(eps.i)), eps.j});
  if (face.kind == eps.j) candidates.push_back({lz, eps.j});
  for (const auto& c : candidates)
    if (face_in_surface(source, c, variant)) return c;
  return std::nullopt;
}

Patch grow_patch(const std::vector<IndexPair>& digits, Seed seed, const Direction* dir) {
  Patch p = seed_patch(seed);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) p = patch_apply(*it, p);
  if (dir) {
    const auto variant = seed == Seed::U ? SurfaceVariant::S : SurfaceVariant::SPrime;
    for (const auto& face : p)
      if (!face_in_surface(*dir, face, variant))
        throw Error(Errc::SurfaceMembershipViolated, face.to_string() + " is not in the stepped surface");
  }
  return p;
}

Integer face_count_oracle(const std::vector<IndexPair>& digits) {
  IntMatrix3 m = IntMatrix3::identity();
  for (const auto& e : digits) m = m * matrix_M(e);
  Integer total = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) total += m(i, j);
  return total;
}

std::vector<EigenStepCheck> verify_eigen_direction(const std::vector<PointPair>& states,
                                                   const std::vector<IndexPair>& digits) {
  std::vector<EigenStepCheck> out;
  const std::size_t n = std::min(digits.size(), states.empty() ? 0 : states.size() - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const CubicField& f = states[k].field();
    const Direction cur = Direction::of(states[k]);
    const Direction next = Direction::of(states[k + 1]);
    const IndexPair e = digits[k];
    // ᵗL^-1 = I - E_ij
    auto moved = cur.nu;
    moved[static_cast<std::size_t>(e.i)] = cur.nu[static_cast<std::size_t>(e.i)] - cur.nu[static_cast<std::size_t>(e.j)];
    const FieldElement& a = states[k].alpha();
    const FieldElement& b = states[k].beta();
    FieldElement c;
    if (e == IndexPair{1, 2} || e == IndexPair{0, 2}) c = f.inv(FieldElement(1) - b);
    else if (e == IndexPair{2, 1} || e == IndexPair{0, 1}) c = f.inv(FieldElement(1) - a);
    else c = f.inv(a + b);
    bool dir_ok = true;
    for (std::size_t i = 0; i < 3; ++i) dir_ok = dir_ok && f.mul(c, moved[i]) == next.nu[i];
    const FieldElement sum = moved[0] + moved[1] + moved[2];
    const bool scale_ok = !sum.is_zero() && f.inv(sum) == c;
    out.push_back({k, dir_ok, scale_ok});
  }
  return out;
}

Patch surface_window(const Direction& dir, long bound, SurfaceVariant variant) {
  Patch p;
  for (long x0 = -bound; x0 <= bound; ++x0)
    for (long x1 = -bound; x1 <= bound; ++x1)
      for (long x2 = -bound; x2 <= bound; ++x2)
        for (int k = 0; k < 3; ++k) {
          Face f{{x0, x1, x2}, k};
          if (face_in_surface(dir, f, variant)) p.insert(f);
        }
  return p;
}

BijectivityReport check_bijectivity(IndexPair eps, const Direction& source, const Direction& target, long window) {
  BijectivityReport rep;
  const Patch src = surface_window(source, 2 * window + 1);
  const Patch tgt = surface_window(target, window);
  rep.source_faces = src.size();
  rep.target_faces = tgt.size();
  Patch image;
  for (const auto& face : src)
    for (const auto& img : theta_apply(eps, face)) {
      if (!face_in_surface(target, img)) {
        rep.into = false;
        rep.failures.push_back("image " + img.to_string() + " of " + face.to_string() + " leaves the surface");
      }
      if (!image.insert(img).second) {
        rep.disjoint = false;
        rep.failures.push_back("image " + img.to_string() + " hit twice");
      }
    }
  for (const auto& face : tgt)
    if (!image.count(face)) {
      rep.onto = false;
      rep.failures.push_back(face.to_string() + " has no preimage in the window");
    }
  return rep;
}

FixedPointReport check_fixed_point(const std::vector<PointPair>& states, const std::vector<IndexPair>& period,
                                   long window) {
  FixedPointReport rep;
  if (states.size() < period.size() + 1 || period.empty())
    throw Error(Errc::InvalidInput, "fixed point check needs one state per period step plus the return state");
  std::vector<Direction> dirs;
  for (std::size_t k = 0; k <= period.size(); ++k) dirs.push_back(Direction::of(states[k]));
  const Direction& base = dirs.front();
  const Patch win = surface_window(base, window);
  rep.faces = win.size();
  for (const auto& face : win) {
    Face cur = face;
    bool ok = true;
    for (std::size_t k = 0; k < period.size() && ok; ++k) {
      auto pre = theta_preimage(period[k], cur, dirs[k + 1]);
      if (!pre) ok = false;
      else cur = *pre;
    }
    if (ok && !face_in_surface(base, cur)) ok = false;
    if (ok) {
      Patch fwd{cur};
      for (auto it = period.rbegin(); it != period.rend(); ++it) fwd = patch_apply(*it, fwd);
      ok = fwd.count(face) > 0;
      rep.max_preimage_norm = std::max(rep.max_preimage_norm, cur.sup_norm());
    }
    if (!ok) {
      rep.ok = false;
      rep.failures.push_back(face.to_string() + " is not reproduced");
    }
  }
  return rep;
}

namespace {

struct P2 {
  double x;
  double y;
};

P2 project(const Vec3& v) {
  const double c = std::sqrt(3.0) / 2.0;
  // e0 -> 90 degrees, e1 -> 210 degrees, e2 -> 330 degrees; SVG y grows downward.
  const double px = -c * static_cast<double>(v[1]) + c * static_cast<double>(v[2]);
  const double py = static_cast<double>(v[0]) - 0.5 * static_cast<double>(v[1]) - 0.5 * static_cast<double>(v[2]);
  return {px, -py};
}

std::array<Vec3, 4> corners(const Face& f) {
  const int j = (f.kind + 1) % 3;
  const int k = (f.kind + 2) % 3;
  return {f.x, add(f.x, unit(j)), add(add(f.x, unit(j)), unit(k)), add(f.x, unit(k))};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string to_svg(const Patch& patch, const ExportOptions& opts) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const auto& f : patch)
    for (const auto& c : corners(f)) {
      const P2 p = project(c);
      if (first) {
        minx = maxx = p.x;
        miny = maxy = p.y;
        first = false;
      }
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  const double pad = 0.25;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - pad) << ' ' << fmt(miny - pad) << ' '
     << fmt(maxx - minx + 2 * pad) << ' ' << fmt(maxy - miny + 2 * pad) << "\">\n";
  for (const auto& f : patch) {
    os << "  <path d=\"";
    const auto cs = corners(f);
    for (std::size_t k = 0; k < 4; ++k) {
      const P2 p = project(cs[k]);
      os << (k == 0 ? "M" : " L") << fmt(p.x) << ',' << fmt(p.y);
    }
    os << " Z\" fill=\"" << opts.colors[static_cast<std::size_t>(f.kind)]
       << "\" stroke=\"#000000\" stroke-width=\"0.02\"/>\n";
  }
  if (opts.origin_marker) {
    const P2 o = project({1, 1, 1});
    os << "  <circle cx=\"" << fmt(o.x) << "\" cy=\"" << fmt(o.y) << "\" r=\"0.06\" fill=\"#cc0000\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_obj(const Patch& patch) {
  std::ostringstream os;
  os << "# " << patch.size() << " faces\n";
  std::size_t base = 1;
  for (const auto& f : patch) {
    for (const auto& c : corners(f)) os << "v " << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
    os << "f " << base << ' ' << base + 1 << ' ' << base + 2 << ' ' << base + 3 << '\n';
    base += 4;
  }
  return os.str();
}

}  // namespace

std::string export_patch(const Patch& patch, const Direction* dir, const std::string& format,
                         const ExportOptions& opts) {
  if (format == "json") return patch_to_json(patch, dir).dump(2) + "\n";
  if (format == "svg") return to_svg(patch, opts);
  if (format == "obj") return to_obj(patch);
  throw Error(Errc::InvalidInput, "unknown patch format " + format);
}

}  // namespace cubefarey
