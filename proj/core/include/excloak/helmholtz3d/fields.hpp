#pragma once

#include <functional>

#include "excloak/types.hpp"
#include "excloak/wave.hpp"

namespace excloak::helmholtz3d {

/// A complex scalar field with gradient, for layer-potential integrands.
struct Field {
  std::function<cplx(const Vec3&)> value;
  std::function<Vec3c(const Vec3&)> gradient;
};

/// Plane wave u(x) = exp(i k khat.x); khat must be a unit vector.
Field incident_plane_wave(const Vec3& khat, const WaveContext& ctx);

}  // namespace excloak::helmholtz3d
