#include "excloak/specfun/greens.hpp"

#include <cmath>
#include <vector>

#include "excloak/specfun/bessel.hpp"

namespace excloak::specfun {

cplx greens_function(const Vec3& x, const Vec3& y, const WaveContext& ctx) {
  const double r = (x - y).norm();
  if (r < 1e-14) throw std::domain_error("greens_function: coincident points");
  return std::polar(1.0 / (4.0 * kPi * r), ctx.k * r);
}

Vec3c greens_function_grad_y(const Vec3& x, const Vec3& y, const WaveContext& ctx) {
  const Vec3 d = y - x;
  const double r = d.norm();
  if (r < 1e-14) throw std::domain_error("greens_function_grad_y: coincident points");
  const cplx g = std::polar(1.0 / (4.0 * kPi * r), ctx.k * r);
  const cplx factor = g * (cplx(0.0, ctx.k) - 1.0 / r) / r;
  return factor * d.cast<cplx>();
}

namespace {

struct ExpansionAtoms {
  std::vector<cplx> hx;   // h_n(k|x-c|)
  std::vector<double> jy; // j_n(k|y-c|)
  std::vector<cplx> yx, yy;
};

ExpansionAtoms prepare(const Vec3& x, const Vec3& y, const Vec3& center, int N,
                       const WaveContext& ctx) {
  const Vec3 dx = x - center, dy = y - center;
  const double rx = dx.norm(), ry = dy.norm();
  if (!(rx > ry))
    throw std::domain_error(
        "greens_addition_partial: need |x-center| > |y-center| for convergence");
  ExpansionAtoms a;
  a.hx.resize(N + 1);
  a.jy.resize(N + 1);
  spherical_hankel1_all(N, ctx.k * rx, a.hx);
  spherical_bessel_j_all(N, ctx.k * ry, a.jy);
  LegendreBarTable table(N);
  a.yx.resize(mode_count(N));
  a.yy.resize(mode_count(N));
  sph_harm_all(table, UnitDirection::from_vector(dx), a.yx);
  sph_harm_all(table, UnitDirection::from_vector(dy), a.yy);
  return a;
}

}  // namespace

cplx greens_addition_partial(const Vec3& x, const Vec3& y, const Vec3& center, int N,
                             const WaveContext& ctx) {
  if (N < 0) throw std::domain_error("greens_addition_partial: N must be >= 0");
  const ExpansionAtoms a = prepare(x, y, center, N, ctx);
  cplx sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    cplx inner = 0.0;
    for (int m = -n; m <= n; ++m)
      inner += a.yx[mode_index(n, m)] * std::conj(a.yy[mode_index(n, m)]);
    sum += a.hx[n] * a.jy[n] * inner;
  }
  return cplx(0.0, ctx.k) * sum;
}

double greens_addition_term_magnitude(const Vec3& x, const Vec3& y, const Vec3& center,
                                      int n, const WaveContext& ctx) {
  const ExpansionAtoms a = prepare(x, y, center, n, ctx);
  cplx inner = 0.0;
  for (int m = -n; m <= n; ++m)
    inner += a.yx[mode_index(n, m)] * std::conj(a.yy[mode_index(n, m)]);
  return std::abs(cplx(0.0, ctx.k) * a.hx[n] * a.jy[n] * inner);
}

}  // namespace excloak::specfun
