// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubefarey/farey.hpp"

namespace cubefarey {

using Vec3 = std::array<long, 3>;

/// Unit square (x, i*) at x spanned by the two unit vectors other than e_i.
struct Face {
  Vec3 x{0, 0, 0};
  int kind = 0;

  [[nodiscard]] long sup_norm() const;
  [[nodiscard]] std::string to_string() const;
  friend auto operator<=>(const Face&, const Face&) = default;
};

using Patch = std::set<Face>;

enum class SurfaceVariant { S, SPrime };
enum class Seed { U, UPrime };

/// ν = (1 - α - β, α, β).
struct Direction {
  FieldPtr field;
  std::array<FieldElement, 3> nu;

  static Direction of(const PointPair& point);
  [[nodiscard]] FieldElement dot(const Vec3& x) const;
};

Patch seed_patch(Seed seed);

bool face_in_surface(const Direction& dir, const Face& face, SurfaceVariant variant = SurfaceVariant::S);

/// L^-1 for L = I + E_ji, eps = (i, j).
Vec3 apply_L_inverse(IndexPair eps, const Vec3& x);
Vec3 apply_L(IndexPair eps, const Vec3& x);

/// Dual substitution of one face: one or two faces.
std::vector<Face> theta_apply(IndexPair eps, const Face& face);
/// Throws FaceCollision if two images overlap.
Patch patch_apply(IndexPair eps, const Patch& patch);

/// The unique face of the source surface whose image under Θ_eps contains `face`,
/// chosen among the (at most two) candidates by surface membership.
std::optional<Face> theta_preimage(IndexPair eps, const Face& face, const Direction& source,
                                   SurfaceVariant variant = SurfaceVariant::S);

/// Θ_{d0}···Θ_{d(n-1)}(seed), innermost digit last. When `dir` is given every
/// face is checked against its stepped surface (SurfaceMembershipViolated).
Patch grow_patch(const std::vector<IndexPair>& digits, Seed seed, const Direction* dir = nullptr);

/// 1ᵀ M_{d0}···M_{d(n-1)} 1.
Integer face_count_oracle(const std::vector<IndexPair>& digits);

struct EigenStepCheck {
  std::size_t n;
  bool direction_ok;
  bool scale_ok;
};

/// ν_{n+1} = c_n ᵗL^-1 ν_n with the branch constant c_n, at every step.
std::vector<EigenStepCheck> verify_eigen_direction(const std::vector<PointPair>& states,
                                                   const std::vector<IndexPair>& digits);

/// All faces of the surface with sup norm <= bound.
Patch surface_window(const Direction& dir, long bound, SurfaceVariant variant = SurfaceVariant::S);

struct BijectivityReport {
  bool into = true;       // images lie in the target surface
  bool disjoint = true;   // images of distinct faces do not overlap
  bool onto = true;       // every target window face is hit
  std::size_t source_faces = 0;
  std::size_t target_faces = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return into && disjoint && onto; }
};

/// Θ_eps from S(source) to S(target) checked on windows: targets with sup norm
/// <= window, sources with sup norm <= 2 * window + 1.
BijectivityReport check_bijectivity(IndexPair eps, const Direction& source, const Direction& target, long window);

struct FixedPointReport {
  bool ok = true;
  std::size_t faces = 0;
  long max_preimage_norm = 0;
  std::vector<std::string> failures;
};

/// For a purely periodic orbit: every window face of S(ν_0) lies in the image
/// of S(ν_0) under Θ_{ε0}···Θ_{ε(l-1)}.
FixedPointReport check_fixed_point(const std::vector<PointPair>& states, const std::vector<IndexPair>& period,
                                   long window);

struct ExportOptions {
  std::array<std::string, 3> colors{"#d9d9d9", "#a6a6a6", "#595959"};
  bool origin_marker = false;
};

/// format is "json", "svg" or "obj".
std::string export_patch(const Patch& patch, const Direction* dir, const std::string& format,
                         const ExportOptions& opts = {});

}  // namespace cubefarey
