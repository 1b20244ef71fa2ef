#pragma once

#include <stdexcept>

#include "excloak/types.hpp"

namespace excloak {

/// Fixed-frequency wave parameters: k*lambda = 2*pi, omega = k*c.
struct WaveContext {
  double lambda;  // wavelength
  double k;       // wavenumber
  double c;       // propagation speed
  double omega;   // angular frequency

  static WaveContext from_wavelength(double lambda, double speed = 1.0) {
    if (!(lambda > 0.0)) throw std::domain_error("WaveContext: lambda must be > 0");
    if (!(speed > 0.0)) throw std::domain_error("WaveContext: speed must be > 0");
    WaveContext ctx;
    ctx.lambda = lambda;
    ctx.k = 2.0 * kPi / lambda;
    ctx.c = speed;
    ctx.omega = ctx.k * speed;
    return ctx;
  }

  static WaveContext from_wavenumber(double k, double speed = 1.0) {
    if (!(k > 0.0)) throw std::domain_error("WaveContext: k must be > 0");
    return from_wavelength(2.0 * kPi / k, speed);
  }
};

}  // namespace excloak
