#pragma once

#include <array>

#include "excloak/helmholtz3d/fields.hpp"
#include "excloak/helmholtz3d/geometry.hpp"
#include "excloak/helmholtz3d/quadrature.hpp"

namespace excloak::helmholtz3d {

using FaceQuadratureSet = std::array<FaceQuadrature, 4>;

/// Builds the four face rules of the tetrahedron with sub-triangle edges
/// <= max_spacing (the "eight points per wavelength" rule is
/// max_spacing = lambda/8).
FaceQuadratureSet make_face_quadratures(const TetraCloakGeometry& geom, double max_spacing);

/// Green's-formula device field
///   u_d(x) = int_dD [ -(n.grad u_i) G(x,y) + u_i n.grad_y G(x,y) ] dS_y,
/// which tends to -u_i(x) inside D and 0 outside as the rule refines.
/// Sets *near_surface to true when x is within one node spacing of a node
/// (the kernels are nearly singular there and accuracy degrades).
cplx green_device_field(const TetraCloakGeometry& geom, const Field& u_i, const Vec3& x,
                        const FaceQuadratureSet& quads, const WaveContext& ctx,
                        bool* near_surface = nullptr);

/// Exterior variant: for a radiating field with sources inside D this
/// returns ~0 inside D and ~ -u_rad(x) outside.
cplx green_exterior_field(const TetraCloakGeometry& geom, const Field& u_rad, const Vec3& x,
                          const FaceQuadratureSet& quads, const WaveContext& ctx,
                          bool* near_surface = nullptr);

}  // namespace excloak::helmholtz3d
