#include "excloak/helmholtz3d/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "excloak/helmholtz3d/quadrature.hpp"
#include "excloak/parallel.hpp"

namespace excloak::helmholtz3d {

namespace {

struct SphereNorms {
  double total_sq = 0.0;     // int |u_i + u_d|^2
  double device_sq = 0.0;    // int |u_d|^2
  double incident_sq = 0.0;  // int |u_i|^2
};

SphereNorms sphere_norms(const DeviceArray& devices, const Field& u_i, double radius,
                         const WaveContext& ctx) {
  const int N = devices.N;
  const int n_theta = N + 1, n_phi = 2 * (N + 1);
  const SphereQuadrature sq = SphereQuadrature::build(radius, n_theta, n_phi);
  const DeviceFieldEvaluator eval(devices, ctx);
  std::vector<double> tot(sq.nodes.size()), dev(sq.nodes.size()), inc(sq.nodes.size());
  parallel_for(sq.nodes.size(), [&](std::size_t q) {
    const cplx ud = eval(sq.nodes[q]);
    const cplx ui = u_i.value(sq.nodes[q]);
    tot[q] = sq.weights[q] * std::norm(ui + ud);
    dev[q] = sq.weights[q] * std::norm(ud);
    inc[q] = sq.weights[q] * std::norm(ui);
  });
  SphereNorms out;
  for (std::size_t q = 0; q < sq.nodes.size(); ++q) {
    out.total_sq += tot[q];
    out.device_sq += dev[q];
    out.incident_sq += inc[q];
  }
  return out;
}

}  // namespace

CloakMetrics cloak_metrics(const DeviceArray& devices, const Field& u_i,
                           const TetraCloakGeometry& geom, const WaveContext& ctx) {
  CloakMetrics m;
  const double r_in = r_eff_star(geom.delta);
  const SphereNorms inner = sphere_norms(devices, u_i, r_in, ctx);
  const SphereNorms outer = sphere_norms(devices, u_i, 2.0 * geom.delta, ctx);
  if (inner.incident_sq <= 0.0 || outer.incident_sq <= 0.0) {
    m.zero_incident = true;
    return m;
  }
  m.interior_residual = std::sqrt(inner.total_sq / inner.incident_sq);
  m.exterior_leakage = std::sqrt(outer.device_sq / outer.incident_sq);
  return m;
}

ExtendedDeviceAnalysis extended_device_analysis(const DeviceArray& devices, double level,
                                                const TetraCloakGeometry& geom,
                                                const WaveContext& ctx, int grid_phi,
                                                int raster_width) {
  if (!(level > 0.0)) throw std::domain_error("extended_device_analysis: level must be > 0");
  if (grid_phi < 8 || raster_width < 16)
    throw std::domain_error("extended_device_analysis: grid too small");
  ExtendedDeviceAnalysis out;
  const DeviceFieldEvaluator eval(devices, ctx);
  const double sigma = geom.sigma;

  // Equal-area sampling: uniform in cos(theta) x phi, cell centers.
  const int n_t = grid_phi / 2;
  out.grid_theta = n_t;
  out.grid_phi = grid_phi;
  out.sphere_mask.assign(static_cast<std::size_t>(n_t) * grid_phi, 0);
  std::vector<std::uint8_t>& mask = out.sphere_mask;
  std::atomic<long> below{0};
  parallel_for(mask.size(), [&](std::size_t idx) {
    const int it = static_cast<int>(idx) / grid_phi;
    const int ip = static_cast<int>(idx) % grid_phi;
    const double w = -1.0 + 2.0 * (it + 0.5) / n_t;  // cos(theta)
    const double st = std::sqrt(std::max(0.0, 1.0 - w * w));
    const double phi = 2.0 * kPi * (ip + 0.5) / grid_phi;
    const Vec3 x(sigma * st * std::cos(phi), sigma * st * std::sin(phi), sigma * w);
    const double a = std::abs(eval(x));
    if (a >= level)
      mask[idx] = 255;
    else
      below.fetch_add(1, std::memory_order_relaxed);
  });
  out.open_area_percent = 100.0 * static_cast<double>(below.load()) / static_cast<double>(mask.size());

  // Mollweide projection raster (equal-area): invert per pixel and sample.
  const int W = raster_width, H = raster_width / 2;
  out.raster_width = W;
  out.raster_height = H;
  out.mollweide_mask.assign(static_cast<std::size_t>(W) * H, 0);
  out.mollweide_abs.assign(static_cast<std::size_t>(W) * H, 0.0);
  const double sqrt2 = std::sqrt(2.0);
  parallel_for(out.mollweide_mask.size(), [&](std::size_t idx) {
    const int row = static_cast<int>(idx) / W;
    const int col = static_cast<int>(idx) % W;
    const double X = (2.0 * (col + 0.5) / W - 1.0) * 2.0 * sqrt2;
    const double Y = (1.0 - 2.0 * (row + 0.5) / H) * sqrt2;
    const double s = Y / sqrt2;
    if (std::abs(s) > 1.0) return;
    const double aux = std::asin(s);
    const double lat = std::asin((2.0 * aux + std::sin(2.0 * aux)) / kPi);
    const double cos_aux = std::cos(aux);
    if (cos_aux < 1e-9) return;
    const double lon = kPi * X / (2.0 * sqrt2 * cos_aux);
    if (std::abs(lon) > kPi) return;
    const double theta = kPi / 2.0 - lat;
    const Vec3 x(sigma * std::sin(theta) * std::cos(lon), sigma * std::sin(theta) * std::sin(lon),
                 sigma * std::cos(theta));
    const double a = std::abs(eval(x));
    out.mollweide_abs[idx] = a;
    out.mollweide_mask[idx] = a >= level ? 255 : 64;  // 64 marks on-sphere open area
  });
  return out;
}

}  // namespace excloak::helmholtz3d
