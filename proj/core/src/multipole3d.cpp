#include "excloak/helmholtz3d/multipole.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "excloak/errors.hpp"
#include "excloak/parallel.hpp"
#include "excloak/specfun/bessel.hpp"
#include "excloak/specfun/sph_harm.hpp"

namespace excloak::helmholtz3d {

using specfun::legendre_index;
using specfun::LegendreBarTable;
using specfun::mode_count;
using specfun::mode_index;

DeviceArray multipole_coefficients(const TetraCloakGeometry& geom, const Field& u_i, int N,
                                   const FaceQuadratureSet& quads, const WaveContext& ctx) {
  if (N < 0) throw std::domain_error("multipole_coefficients: N must be >= 0");
  if (N > kMaxTruncationOrder)
    throw numeric_error("multipole_coefficients: N exceeds the supported cap of 256");
  DeviceArray da;
  da.N = N;
  da.points.assign(geom.devices.begin(), geom.devices.end());
  da.coeffs.assign(4, std::vector<cplx>(mode_count(N), cplx(0.0)));

  const double k = ctx.k;
  const cplx ik(0.0, k);
  const LegendreBarTable table(N);
  const int tsz = table.size();

  // Per-face assembly, parallel over quadrature nodes with per-thread
  // accumulators folded at the end.
  for (int l = 0; l < 4; ++l) {
    const FaceQuadrature& fq = quads[l];
    const Vec3 xl = geom.devices[l];
    const Vec3 nrm = fq.normal;
    const std::size_t nq = fq.nodes.size();

    const unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<cplx>> partial(nthreads, std::vector<cplx>(mode_count(N), cplx(0.0)));
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};

    auto worker = [&](unsigned tid) {
      std::vector<double> jn(N + 1), pbar(tsz), dpbar(tsz);
      std::vector<cplx> em(N + 1);
      auto& acc = partial[tid];
      for (;;) {
        const std::size_t q = next.fetch_add(1);
        if (q >= nq) return;
        const Vec3 y = fq.nodes[q];
        const double w = fq.weights[q];
        const Vec3 s = y - xl;
        const double r = s.norm();
        const double t = k * r;
        specfun::spherical_bessel_j_all(N, t, jn);

        const double ct = std::clamp(s.z() / r, -1.0, 1.0);
        double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        double phi = std::atan2(s.y(), s.x());
        // Quadrature nodes sit at generic directions; nudge exact poles.
        if (st < 1e-300) st = 1e-300;
        table.eval_with_dtheta(ct, st, pbar, dpbar);
        em[0] = 1.0;
        const cplx e1 = std::polar(1.0, phi);
        for (int m = 1; m <= N; ++m) em[m] = em[m - 1] * e1;

        const double cp = std::cos(phi), sp = std::sin(phi);
        const Vec3 rhat = s / r;
        const Vec3 theta_hat(ct * cp, ct * sp, -st);
        const Vec3 phi_hat(-sp, cp, 0.0);

        const cplx ui = u_i.value(y);
        const Vec3c grad_ui = u_i.gradient(y);
        const cplx dn_ui = nrm.x() * grad_ui.x() + nrm.y() * grad_ui.y() + nrm.z() * grad_ui.z();
        const double n_dot_r = nrm.dot(rhat);
        const double n_dot_th = nrm.dot(theta_hat);
        const double n_dot_ph = nrm.dot(phi_hat);

        for (int n = 0; n <= N; ++n) {
          const double jv = jn[n];
          const double jp = (n == 0) ? -jn[1] : jn[n - 1] - (n + 1.0) / t * jn[n];
          for (int m = 0; m <= n; ++m) {
            const int li = legendre_index(n, m);
            const cplx y_nm = pbar[li] * em[m];
            // n.grad U_n^m with the radial/tangential split; the phi part of
            // the surface gradient is (i m / sin th) Pbar e^{i m phi}.
            const cplx dth = dpbar[li] * em[m];
            const cplx dph = cplx(0.0, m) * pbar[li] / st * em[m];
            const cplx n_grad_u =
                k * jp * y_nm * n_dot_r + (jv / r) * (dth * n_dot_th + dph * n_dot_ph);
            // conj(U), conj(n.grad U) for +m; m -> -m conjugates the Y parts.
            acc[mode_index(n, m)] +=
                ik * w * (-dn_ui * jv * std::conj(y_nm) + ui * std::conj(n_grad_u));
            // U_n^{-m} = j_n conj(Y_n^m), so the -m integrand is the
            // unconjugated combination.
            if (m > 0)
              acc[mode_index(n, -m)] += ik * w * (-dn_ui * jv * y_nm + ui * n_grad_u);
          }
        }
      }
    };
    for (unsigned tid = 1; tid < nthreads; ++tid) pool.emplace_back(worker, tid);
    worker(0);
    for (auto& th : pool) th.join();
    for (unsigned tid = 0; tid < nthreads; ++tid)
      for (int idx = 0; idx < mode_count(N); ++idx) da.coeffs[l][idx] += partial[tid][idx];
  }
  return da;
}

namespace {

cplx eval_one_device(const std::vector<cplx>& b, const Vec3& x, const Vec3& xl, double k, int N,
                     const LegendreBarTable& table, std::vector<cplx>& hn,
                     std::vector<double>& pbar, std::vector<cplx>& em) {
  const Vec3 s = x - xl;
  const double r = s.norm();
  if (r < 1e-14) throw std::domain_error("device_field: evaluation at a device point");
  specfun::spherical_hankel1_all(N, k * r, hn);
  const double ct = std::clamp(s.z() / r, -1.0, 1.0);
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  const double phi = std::atan2(s.y(), s.x());
  table.eval(ct, st, pbar);
  em[0] = 1.0;
  const cplx e1 = std::polar(1.0, phi);
  for (int m = 1; m <= N; ++m) em[m] = em[m - 1] * e1;
  cplx sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    cplx inner = b[mode_index(n, 0)] * pbar[legendre_index(n, 0)];
    for (int m = 1; m <= n; ++m) {
      const double p = pbar[legendre_index(n, m)];
      inner += p * (b[mode_index(n, m)] * em[m] + b[mode_index(n, -m)] * std::conj(em[m]));
    }
    sum += hn[n] * inner;
  }
  return sum;
}

}  // namespace

cplx device_field(const DeviceArray& devices, const Vec3& x, const WaveContext& ctx) {
  const LegendreBarTable table(devices.N);
  std::vector<cplx> hn(devices.N + 1), em(devices.N + 1);
  std::vector<double> pbar(table.size());
  cplx sum = 0.0;
  for (std::size_t l = 0; l < devices.points.size(); ++l)
    sum += eval_one_device(devices.coeffs[l], x, devices.points[l], ctx.k, devices.N, table, hn,
                           pbar, em);
  return sum;
}

std::vector<double> device_field_degree_magnitudes(const DeviceArray& devices, const Vec3& x,
                                                   const WaveContext& ctx) {
  const int N = devices.N;
  const LegendreBarTable table(N);
  std::vector<cplx> hn(N + 1), em(N + 1);
  std::vector<double> pbar(table.size());
  std::vector<cplx> per_degree(N + 1, cplx(0.0));
  for (std::size_t l = 0; l < devices.points.size(); ++l) {
    const Vec3 s = x - devices.points[l];
    const double r = s.norm();
    if (r < 1e-14) throw std::domain_error("device_field: evaluation at a device point");
    specfun::spherical_hankel1_all(N, ctx.k * r, hn);
    const double ct = std::clamp(s.z() / r, -1.0, 1.0);
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const double phi = std::atan2(s.y(), s.x());
    table.eval(ct, st, pbar);
    em[0] = 1.0;
    const cplx e1 = std::polar(1.0, phi);
    for (int m = 1; m <= N; ++m) em[m] = em[m - 1] * e1;
    for (int n = 0; n <= N; ++n) {
      cplx inner = devices.coeffs[l][mode_index(n, 0)] * pbar[legendre_index(n, 0)];
      for (int m = 1; m <= n; ++m) {
        const double p = pbar[legendre_index(n, m)];
        inner += p * (devices.coeffs[l][mode_index(n, m)] * em[m] +
                      devices.coeffs[l][mode_index(n, -m)] * std::conj(em[m]));
      }
      per_degree[n] += hn[n] * inner;
    }
  }
  std::vector<double> mags(N + 1);
  for (int n = 0; n <= N; ++n) mags[n] = std::abs(per_degree[n]);
  return mags;
}

DeviceFieldEvaluator::DeviceFieldEvaluator(const DeviceArray& devices, const WaveContext& ctx)
    : devices_(devices), ctx_(ctx), table_(devices.N) {}

cplx DeviceFieldEvaluator::operator()(const Vec3& x) const {
  std::vector<cplx> hn(devices_.N + 1), em(devices_.N + 1);
  std::vector<double> pbar(table_.size());
  cplx sum = 0.0;
  for (std::size_t l = 0; l < devices_.points.size(); ++l)
    sum += eval_one_device(devices_.coeffs[l], x, devices_.points[l], ctx_.k, devices_.N, table_,
                           hn, pbar, em);
  return sum;
}

}  // namespace excloak::helmholtz3d
