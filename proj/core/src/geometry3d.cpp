#include "excloak/helmholtz3d/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "excloak/errors.hpp"

namespace excloak::helmholtz3d {

std::array<int, 3> TetraCloakGeometry::face(int l) const {
  std::array<int, 3> f{};
  int q = 0;
  for (int v = 0; v < 4; ++v)
    if (v != l) f[q++] = v;
  return f;
}

Vec3 TetraCloakGeometry::face_outward_normal(int l) const {
  const auto f = face(l);
  const Vec3 u = vertices[f[1]] - vertices[f[0]];
  const Vec3 v = vertices[f[2]] - vertices[f[0]];
  Vec3 n = u.cross(v).normalized();
  if (n.dot(vertices[l] - vertices[f[0]]) > 0.0) n = -n;
  return n;
}

TetraCloakGeometry make_tetra_cloak(double sigma, double delta, const WaveContext&) {
  if (!(sigma > 0.0)) throw std::domain_error("make_tetra_cloak: sigma must be > 0");
  if (!(delta > sigma)) throw std::domain_error("make_tetra_cloak: need delta > sigma");
  TetraCloakGeometry g;
  g.sigma = sigma;
  g.delta = delta;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  g.vertices[0] = sigma * inv_sqrt3 * Vec3(1, 1, 1);
  g.vertices[1] = sigma * inv_sqrt3 * Vec3(1, -1, -1);
  g.vertices[2] = sigma * inv_sqrt3 * Vec3(-1, 1, -1);
  g.vertices[3] = sigma * inv_sqrt3 * Vec3(-1, -1, 1);
  for (int l = 0; l < 4; ++l) g.devices[l] = -(delta / sigma) * g.vertices[l];
  const double t = sigma - delta / 3.0;
  g.ball_radius = std::sqrt(t * t + 8.0 * delta * delta / 9.0);
  g.r_eff = delta - g.ball_radius;
  g.optimal = std::abs(sigma - delta / 3.0) <= 1e-12 * delta;
  return g;
}

double r_eff_star(double delta) {
  if (!(delta > 0.0)) throw std::domain_error("r_eff_star: delta must be > 0");
  return (1.0 - 2.0 * std::sqrt(2.0) / 3.0) * delta;
}

bool region_A_contains(const TetraCloakGeometry& geom, const Vec3& x) {
  // Closed balls; the relative slack keeps exact tangency points (the
  // tetrahedron vertices in the optimal case) inside despite rounding.
  const double reach = geom.ball_radius * (1.0 + 1e-12);
  for (int l = 0; l < 4; ++l)
    if ((x - geom.devices[l]).norm() <= reach) return true;
  return false;
}

int truncation_order(double delta, const WaveContext& ctx) {
  if (!(delta > 0.0)) throw std::domain_error("truncation_order: delta must be > 0");
  const int n = static_cast<int>(std::ceil(1.5 * ctx.k * delta));
  if (n > kMaxTruncationOrder)
    throw numeric_error("truncation_order: N exceeds the supported cap of 256");
  return n < 0 ? 0 : n;
}

}  // namespace excloak::helmholtz3d
