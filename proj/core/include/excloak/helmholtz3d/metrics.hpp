#pragma once

#include <cstdint>
#include <vector>

#include "excloak/helmholtz3d/multipole.hpp"

namespace excloak::helmholtz3d {

struct CloakMetrics {
  double interior_residual = 0.0;  // ||u_i + u_d|| / ||u_i|| on S(0, r_eff*)
  double exterior_leakage = 0.0;   // ||u_d|| / ||u_i|| on S(0, 2 delta)
  bool zero_incident = false;
};

/// L2 sphere-norm metrics of the cloak, with Gauss-Legendre x uniform
/// quadrature of at least 2 (N+1)^2 nodes per sphere.
CloakMetrics cloak_metrics(const DeviceArray& devices, const Field& u_i,
                           const TetraCloakGeometry& geom, const WaveContext& ctx);

struct ExtendedDeviceAnalysis {
  double open_area_percent = 0.0;  // % of S(0,sigma) with |u_d| below the level
  int grid_theta = 0, grid_phi = 0;
  std::vector<std::uint8_t> sphere_mask;   // row-major (theta-band, phi), 255 = |u_d| >= level
  int raster_width = 0, raster_height = 0;
  std::vector<std::uint8_t> mollweide_mask;  // equal-area projected mask, 0 outside the ellipse
  std::vector<double> mollweide_abs;         // |u_d| on the projection, 0 outside
};

/// Cross-section of the |u_d| >= level set on the sphere S(0,sigma), sampled
/// on an equal-area (phi x cos theta) grid, plus a Mollweide projection.
ExtendedDeviceAnalysis extended_device_analysis(const DeviceArray& devices, double level,
                                                const TetraCloakGeometry& geom,
                                                const WaveContext& ctx, int grid_phi = 512,
                                                int raster_width = 720);

}  // namespace excloak::helmholtz3d
