#pragma once

#include <array>

#include "excloak/types.hpp"
#include "excloak/wave.hpp"

namespace excloak::helmholtz3d {

/// Regular-tetrahedron cloak: vertices a_l on S(0,sigma), one multipolar
/// device x_l = -(delta/sigma) a_l on S(0,delta) opposite each face.
/// Every ball B(x_l, r(sigma,delta)) reaches exactly the vertices of its
/// assigned face; the cloaked region is D minus the union of those balls.
struct TetraCloakGeometry {
  double sigma = 0.0;
  double delta = 0.0;
  std::array<Vec3, 4> vertices{};
  std::array<Vec3, 4> devices{};
  double ball_radius = 0.0;  // r(sigma,delta) = sqrt((sigma-delta/3)^2 + 8 delta^2/9)
  double r_eff = 0.0;        // delta - r(sigma,delta)
  bool optimal = false;      // sigma == delta/3 within rounding

  /// Vertex indices of the face assigned to device l (face opposite a_l).
  std::array<int, 3> face(int l) const;
  /// Unit normal of face l pointing out of the tetrahedron.
  Vec3 face_outward_normal(int l) const;
};

TetraCloakGeometry make_tetra_cloak(double sigma, double delta, const WaveContext& ctx);

/// Largest sphere radius that fits in the cloaked region at the optimal
/// sigma = delta/3: r_eff* = (1 - 2 sqrt(2)/3) delta.
double r_eff_star(double delta);

/// True iff x lies in any closed ball B(x_l, r(sigma,delta)).
bool region_A_contains(const TetraCloakGeometry& geom, const Vec3& x);

/// Multipole truncation heuristic N = ceil(1.5 k delta), capped at 256.
int truncation_order(double delta, const WaveContext& ctx);

inline constexpr int kMaxTruncationOrder = 256;

}  // namespace excloak::helmholtz3d
