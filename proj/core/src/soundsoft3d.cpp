#include "excloak/helmholtz3d/soundsoft.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "excloak/errors.hpp"
#include "excloak/helmholtz3d/quadrature.hpp"
#include "excloak/specfun/bessel.hpp"
#include "excloak/specfun/sph_harm.hpp"

namespace excloak::helmholtz3d {

using specfun::legendre_index;
using specfun::mode_count;
using specfun::mode_index;

SoundSoftScatter::SoundSoftScatter(const std::function<cplx(const Vec3&)>& ambient,
                                   double radius, int max_degree, const WaveContext& ctx)
    : radius_(radius), M_(max_degree), ctx_(ctx), table_(max_degree) {
  if (!(radius > 0.0)) throw std::domain_error("SoundSoftScatter: radius must be > 0");
  if (max_degree < 0) throw std::domain_error("SoundSoftScatter: max_degree must be >= 0");

  // Project the ambient field on the sphere: gamma_{n,m} = <u, Y_n^m>.
  const int n_theta = 2 * (M_ + 1);
  const int n_phi = 2 * (2 * M_ + 1);
  const SphereQuadrature sq = SphereQuadrature::build(radius_, n_theta, n_phi);
  std::vector<cplx> gamma(mode_count(M_), cplx(0.0));
  std::vector<cplx> ynm(mode_count(M_));
  const double inv_r2 = 1.0 / (radius_ * radius_);
  for (std::size_t q = 0; q < sq.nodes.size(); ++q) {
    const Vec3& y = sq.nodes[q];
    const cplx u = ambient(y);
    specfun::sph_harm_all(table_, specfun::UnitDirection::from_vector(y), ynm);
    const double w = sq.weights[q] * inv_r2;  // unit-sphere measure
    for (int idx = 0; idx < mode_count(M_); ++idx) gamma[idx] += w * u * std::conj(ynm[idx]);
  }

  double gmax = 0.0;
  for (const auto& g : gamma) gmax = std::max(gmax, std::abs(g));

  std::vector<double> jn(M_ + 1);
  std::vector<cplx> hn(M_ + 1);
  specfun::spherical_bessel_j_all(M_, ctx_.k * radius_, jn);
  specfun::spherical_hankel1_all(M_, ctx_.k * radius_, hn);

  c_.assign(mode_count(M_), cplx(0.0));
  d_.assign(mode_count(M_), cplx(0.0));
  for (int n = 0; n <= M_; ++n) {
    const bool j_tiny = std::abs(jn[n]) < 1e-12;
    for (int m = -n; m <= n; ++m) {
      const int idx = mode_index(n, m);
      const bool needed = std::abs(gamma[idx]) > 1e-8 * gmax;
      if (j_tiny && needed)
        throw numeric_error("SoundSoftScatter: j_n(k a_s) vanishes for a needed mode "
                            "(Dirichlet resonance or over-resolved ambient)");
      c_[idx] = j_tiny ? cplx(0.0) : gamma[idx] / jn[n];
      // Total field zero on the sphere: d = -gamma / h_n(k a_s).
      d_[idx] = -gamma[idx] / hn[n];
    }
  }
}

cplx SoundSoftScatter::value(const Vec3& x) const {
  const double r = x.norm();
  if (r < 1e-14) throw std::domain_error("SoundSoftScatter: evaluation at the origin");
  std::vector<cplx> hn(M_ + 1);
  specfun::spherical_hankel1_all(M_, ctx_.k * r, hn);
  std::vector<cplx> ynm(mode_count(M_));
  specfun::sph_harm_all(table_, specfun::UnitDirection::from_vector(x), ynm);
  cplx sum = 0.0;
  for (int n = 0; n <= M_; ++n)
    for (int m = -n; m <= n; ++m) {
      const int idx = mode_index(n, m);
      sum += d_[idx] * hn[n] * ynm[idx];
    }
  return sum;
}

std::function<cplx(const Vec3&)> soundsoft_sphere_scatter(
    const std::function<cplx(const Vec3&)>& ambient, double radius, int max_degree,
    const WaveContext& ctx) {
  auto sol = std::make_shared<SoundSoftScatter>(ambient, radius, max_degree, ctx);
  return [sol](const Vec3& x) { return sol->value(x); };
}

}  // namespace excloak::helmholtz3d
