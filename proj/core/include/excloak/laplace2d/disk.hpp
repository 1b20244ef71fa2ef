#pragma once

#include <vector>

#include "excloak/types.hpp"

namespace excloak::laplace2d {

/// Dielectric disk scatterer in the quasistatic regime. The reflection
/// factor lambda = (1-eps)/(1+eps) amplifies near eps = -1.
struct DielectricDisk {
  cplx center;
  double radius;
  double eps;

  DielectricDisk(cplx center, double radius, double eps);
  double reflection_factor() const;  // (1-eps)/(1+eps)
};

/// Scattering solution for an ambient harmonic field Re sum_k A_k (z-c)^k
/// given by its Taylor coefficients about the disk center.
class DiskScatterSolution {
 public:
  DiskScatterSolution(DielectricDisk disk, std::vector<cplx> ambient_coeffs);

  /// Exterior scattered potential Re sum_{k>=1} lambda r^{2k} conj(A_k) (z-c)^{-k}.
  double exterior_scattered(cplx z) const;
  /// Total interior potential Re[A_0 + (1+lambda) sum_{k>=1} A_k (z-c)^k].
  double interior_total(cplx z) const;
  /// Ambient potential reconstructed from the coefficients (for checks).
  double ambient(cplx z) const;

  /// Radial derivatives at angle theta on the circle |z-c| = rho.
  double radial_flux_exterior(double rho, double theta) const;  // d/drho (ambient+scattered)
  double radial_flux_interior(double rho, double theta) const;  // eps * d/drho interior

  const DielectricDisk& disk() const { return disk_; }

 private:
  DielectricDisk disk_;
  std::vector<cplx> a_;  // ambient Taylor coefficients
  double lambda_;
};

/// Convenience single-point evaluation of the exterior scattered potential.
double disk_scatter(const DielectricDisk& disk, const std::vector<cplx>& ambient_coeffs,
                    cplx z);

}  // namespace excloak::laplace2d
