#include "excloak/helmholtz3d/layer.hpp"

#include <cmath>

#include "excloak/specfun/greens.hpp"

namespace excloak::helmholtz3d {

FaceQuadratureSet make_face_quadratures(const TetraCloakGeometry& geom, double max_spacing) {
  FaceQuadratureSet quads;
  for (int l = 0; l < 4; ++l) {
    const auto f = geom.face(l);
    quads[l] =
        FaceQuadrature::build({geom.vertices[f[0]], geom.vertices[f[1]], geom.vertices[f[2]]},
                              geom.vertices[l], max_spacing);
  }
  return quads;
}

namespace {

cplx layer_integral(const Field& u, const Vec3& x, const FaceQuadratureSet& quads,
                    const WaveContext& ctx, bool* near_surface) {
  cplx sum = 0.0;
  bool warn = false;
  for (const auto& fq : quads) {
    const Vec3c nc = fq.normal.cast<cplx>();
    for (std::size_t q = 0; q < fq.nodes.size(); ++q) {
      const Vec3& y = fq.nodes[q];
      if ((x - y).norm() < fq.node_spacing) warn = true;
      const cplx g = specfun::greens_function(x, y, ctx);
      const Vec3c dg = specfun::greens_function_grad_y(x, y, ctx);
      const cplx dn_u = nc.dot(u.gradient(y));
      sum += fq.weights[q] * (-dn_u * g + u.value(y) * nc.dot(dg));
    }
  }
  if (near_surface) *near_surface = warn;
  return sum;
}

}  // namespace

cplx green_device_field(const TetraCloakGeometry&, const Field& u_i, const Vec3& x,
                        const FaceQuadratureSet& quads, const WaveContext& ctx,
                        bool* near_surface) {
  return layer_integral(u_i, x, quads, ctx, near_surface);
}

cplx green_exterior_field(const TetraCloakGeometry&, const Field& u_rad, const Vec3& x,
                          const FaceQuadratureSet& quads, const WaveContext& ctx,
                          bool* near_surface) {
  return -layer_integral(u_rad, x, quads, ctx, near_surface);
}

}  // namespace excloak::helmholtz3d
