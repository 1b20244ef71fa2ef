#include "excloak/specfun/sph_harm.hpp"

#include <cmath>
#include <vector>

namespace excloak::specfun {

UnitDirection UnitDirection::from_angles(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::domain_error("UnitDirection: theta must lie in [0, pi]");
  if (!std::isfinite(phi)) throw std::domain_error("UnitDirection: phi must be finite");
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  return {theta, phi};
}

UnitDirection UnitDirection::from_vector(const Vec3& v) {
  const double r = v.norm();
  if (!(r > 0.0)) throw std::domain_error("UnitDirection: zero vector");
  const double ct = std::clamp(v.z() / r, -1.0, 1.0);
  double phi = std::atan2(v.y(), v.x());
  if (phi < 0.0) phi += 2.0 * kPi;
  return {std::acos(ct), phi};
}

cplx sph_harm(const ModeIndex& mode, const UnitDirection& dir) {
  const int n = mode.n, am = std::abs(mode.m);
  LegendreBarTable table(n);
  std::vector<double> pbar(table.size());
  table.eval(std::cos(dir.theta), std::sin(dir.theta), pbar);
  const cplx e = std::polar(1.0, mode.m * dir.phi);
  return pbar[legendre_index(n, am)] * e;
}

void sph_harm_all(const LegendreBarTable& table, const UnitDirection& dir,
                  std::span<cplx> ynm) {
  const int nmax = table.nmax();
  if (ynm.size() < static_cast<std::size_t>(mode_count(nmax)))
    throw std::domain_error("sph_harm_all: output span too small");
  std::vector<double> pbar(table.size());
  table.eval(std::cos(dir.theta), std::sin(dir.theta), pbar);
  std::vector<cplx> em(nmax + 1);
  em[0] = 1.0;
  const cplx e1 = std::polar(1.0, dir.phi);
  for (int m = 1; m <= nmax; ++m) em[m] = em[m - 1] * e1;
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= n; ++m) {
      const cplx y = pbar[legendre_index(n, m)] * em[m];
      ynm[mode_index(n, m)] = y;
      if (m > 0) ynm[mode_index(n, -m)] = std::conj(y);
    }
  }
}

namespace {

// Analytic pole limit: the surface gradient vanishes except for |m| = 1,
// where it equals C (1, +-i, 0) at the north pole and (-1)^{n+1} times
// that at the south pole, C = sqrt(n(n+1)(2n+1)/(16 pi)).
Vec3c pole_gradient(int n, int m, bool north) {
  if (std::abs(m) != 1) return Vec3c::Zero();
  double c = std::sqrt(n * (n + 1.0) * (2.0 * n + 1.0) / (16.0 * kPi));
  if (!north && n % 2 == 0) c = -c;
  const cplx i_unit{0.0, m > 0 ? 1.0 : -1.0};
  return Vec3c(cplx(c, 0.0), i_unit * c, cplx(0.0, 0.0));
}

}  // namespace

Vec3c sph_harm_surface_gradient(const ModeIndex& mode, const UnitDirection& dir) {
  const int n = mode.n, m = mode.m, am = std::abs(m);
  if (n == 0) return Vec3c::Zero();
  const double ct = std::cos(dir.theta), st = std::sin(dir.theta);
  if (st < 1e-7) return pole_gradient(n, m, ct > 0.0);

  LegendreBarTable table(n);
  std::vector<double> pbar(table.size()), dpbar(table.size());
  table.eval_with_dtheta(ct, st, pbar, dpbar);
  const cplx e = std::polar(1.0, m * dir.phi);
  const cplx dth = dpbar[legendre_index(n, am)] * e;
  const cplx dph_over_st = cplx(0.0, m) * pbar[legendre_index(n, am)] / st * e;

  const double cp = std::cos(dir.phi), sp = std::sin(dir.phi);
  const Vec3 theta_hat(ct * cp, ct * sp, -st);
  const Vec3 phi_hat(-sp, cp, 0.0);
  return dth * theta_hat.cast<cplx>() + dph_over_st * phi_hat.cast<cplx>();
}

}  // namespace excloak::specfun
