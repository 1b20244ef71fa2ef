#pragma once

#include <functional>
#include <vector>

#include "excloak/specfun/legendre.hpp"
#include "excloak/types.hpp"
#include "excloak/wave.hpp"

namespace excloak::helmholtz3d {

/// Scattered field of a sound-soft (Dirichlet) ball at the origin. Built by
/// projecting the ambient field on S(0,a_s) onto spherical harmonics and
/// cancelling it mode by mode with outgoing waves; the total field vanishes
/// on the sphere up to the projection truncation.
class SoundSoftScatter {
 public:
  /// ambient: field value callable, regular (source-free) near the ball.
  /// max_degree: highest harmonic degree M retained.
  SoundSoftScatter(const std::function<cplx(const Vec3&)>& ambient, double radius,
                   int max_degree, const WaveContext& ctx);

  cplx value(const Vec3& x) const;
  double radius() const { return radius_; }
  int max_degree() const { return M_; }
  /// Regular-wave coefficients c_{n,m} of the ambient field.
  const std::vector<cplx>& regular_coeffs() const { return c_; }

 private:
  double radius_;
  int M_;
  WaveContext ctx_;
  std::vector<cplx> c_;  // gamma_{n,m} / j_n(k a_s), packed by mode_index
  std::vector<cplx> d_;  // outgoing coefficients, packed by mode_index
  specfun::LegendreBarTable table_;
};

/// Convenience wrapper returning the scattered field as a callable.
std::function<cplx(const Vec3&)> soundsoft_sphere_scatter(
    const std::function<cplx(const Vec3&)>& ambient, double radius, int max_degree,
    const WaveContext& ctx);

}  // namespace excloak::helmholtz3d
