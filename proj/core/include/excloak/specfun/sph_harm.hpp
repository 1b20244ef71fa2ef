#pragma once

#include <complex>
#include <span>

#include "excloak/specfun/legendre.hpp"
#include "excloak/types.hpp"

namespace excloak::specfun {

/// Spherical-harmonic mode (n, m) with |m| <= n.
struct ModeIndex {
  int n;
  int m;
  ModeIndex(int n_, int m_) : n(n_), m(m_) {
    if (n < 0 || m < -n || m > n) throw std::domain_error("ModeIndex: need |m| <= n, n >= 0");
  }
};

/// Packed index over the full mode set, 0 <= n <= nmax, -n <= m <= n.
inline int mode_index(int n, int m) { return n * n + n + m; }
inline int mode_count(int nmax) { return (nmax + 1) * (nmax + 1); }

/// Direction on the unit sphere, elevation theta in [0,pi], azimuth phi.
struct UnitDirection {
  double theta;
  double phi;

  static UnitDirection from_angles(double theta, double phi);
  /// Normalizes v; throws if |v| deviates from its normalized form by more
  /// than the representable guard (zero vector).
  static UnitDirection from_vector(const Vec3& v);

  Vec3 to_vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }
};

/// Y_n^m(theta,phi) = sqrt((2n+1)/(4pi) (n-|m|)!/(n+|m|)!) P_n^{|m|}(cos th) e^{i m phi}.
/// With this convention Y_n^{-m} = conj(Y_n^m).
cplx sph_harm(const ModeIndex& mode, const UnitDirection& dir);

/// Surface gradient of Y_n^m on the unit sphere (tangential 3-vector).
/// Poles are evaluated by the analytic limit (nonzero only for |m| = 1).
Vec3c sph_harm_surface_gradient(const ModeIndex& mode, const UnitDirection& dir);

/// Batch evaluation of all Y_n^m, n <= nmax, into ynm[mode_index(n,m)].
/// The caller provides the Legendre table (built once per nmax).
void sph_harm_all(const LegendreBarTable& table, const UnitDirection& dir,
                  std::span<cplx> ynm);

}  // namespace excloak::specfun
