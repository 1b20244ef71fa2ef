#pragma once

#include <array>
#include <vector>

#include "excloak/types.hpp"

namespace excloak::helmholtz3d {

/// Surface quadrature on one triangular face: uniform refinement into q^2
/// congruent sub-triangles with the three edge-midpoint nodes per sub-triangle
/// (exact for piecewise quadratic, in particular piecewise linear, data).
struct FaceQuadrature {
  std::array<Vec3, 3> verts{};
  Vec3 normal{};           // unit outward normal (fixed over the flat face)
  double node_spacing = 0.0;  // sub-triangle edge length
  double area = 0.0;
  std::vector<Vec3> nodes;
  std::vector<double> weights;

  /// Builds the rule with sub-triangle edges <= max_spacing. The normal is
  /// oriented away from `opposite`, the vertex the face does not contain.
  static FaceQuadrature build(const std::array<Vec3, 3>& verts, const Vec3& opposite,
                              double max_spacing);
};

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Quadrature on the sphere S(0, radius): Gauss-Legendre in cos(theta) times
/// uniform azimuth. Exact for spherical harmonics up to degree ~2 n_theta - 1.
struct SphereQuadrature {
  double radius = 1.0;
  std::vector<Vec3> nodes;
  std::vector<double> weights;  // surface measure, sum = 4 pi radius^2

  static SphereQuadrature build(double radius, int n_theta, int n_phi);
};

}  // namespace excloak::helmholtz3d
