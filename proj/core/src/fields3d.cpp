#include "excloak/helmholtz3d/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace excloak::helmholtz3d {

Field incident_plane_wave(const Vec3& khat, const WaveContext& ctx) {
  if (std::abs(khat.norm() - 1.0) > 1e-12)
    throw std::domain_error("incident_plane_wave: direction must be a unit vector");
  const double k = ctx.k;
  const Vec3 dir = khat;
  Field f;
  f.value = [k, dir](const Vec3& x) { return std::polar(1.0, k * dir.dot(x)); };
  f.gradient = [k, dir](const Vec3& x) -> Vec3c {
    const cplx v = cplx(0.0, k) * std::polar(1.0, k * dir.dot(x));
    return v * dir.cast<cplx>();
  };
  return f;
}

}  // namespace excloak::helmholtz3d
