#include <cmath>
#include <memory>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "excloak/laplace2d/cloak.hpp"
#include "excloak/laplace2d/disk.hpp"
#include "excloak/laplace2d/field_export.hpp"
#include "manifest.hpp"

namespace excloak::tools {

using namespace excloak::laplace2d;

namespace {

struct LaplaceDemoOpts {
  std::string set = "a";  // "a", "b", or "custom"
  double p = 0.0, r_disk = 0.0, eps = 0.0;
  int n = 0, s = 0;
  double beta = 1.0;
  double R = 0.0;  // 0 = per-set default
  double window = 2.5;
  int resolution = 256;
  int probe_degree = 28;
  int ambient_degree = 48;
  std::string out;
};

void apply_set(LaplaceDemoOpts& o) {
  if (o.set == "a") {
    if (o.p == 0.0) o.p = 1.1;
    if (o.r_disk == 0.0) o.r_disk = 0.2;
    if (o.eps == 0.0) o.eps = -0.99;
    if (o.n == 0) o.n = 15;
    if (o.s == 0) o.s = 15;
    if (o.R == 0.0) o.R = 6.0;
  } else if (o.set == "b") {
    if (o.p == 0.0) o.p = 1.7;
    if (o.r_disk == 0.0) o.r_disk = 0.9;
    if (o.eps == 0.0) o.eps = -0.998;
    if (o.n == 0) o.n = 5;
    if (o.s == 0) o.s = 25;
    // The asymmetric s = 5n family needs a far-field radius roughly five
    // times larger: the origin-side lobe of the convergence region only
    // reaches ~0.05 on the negative real axis for L = 5.
    if (o.R == 0.0) o.R = 30.0;
  } else if (o.set == "custom") {
    if (o.p == 0.0 || o.r_disk == 0.0 || o.eps == 0.0 || o.n == 0 || o.s == 0)
      throw std::domain_error("laplace-demo: custom set needs --p --r --eps --n --s");
    if (o.R == 0.0) o.R = 6.0;
  } else {
    throw std::domain_error("laplace-demo: set must be a, b, or custom");
  }
}

// Largest physical radius around the disk center whose Kelvin image stays in
// the c*-side lobe: the lobe's real-axis upper edge w_hi maps to the nearest
// admissible physical point 1/w_hi.
double safe_ambient_contour(double p, double r_disk, double beta, double L) {
  double w = beta;
  const double step = beta / 512.0;
  while (in_convergence_region(cplx(w + step), beta, L).inside && w < 64.0 * beta) w += step;
  const double z_min = 1.0 / (w + step);
  const double room = p - z_min;
  if (room <= r_disk)
    throw std::domain_error(
        "laplace-demo: the scatterer reaches the edge of the device series' convergence "
        "region; shrink the disk or change (n, s)");
  return std::min(1.3 * r_disk, r_disk + 0.5 * (room - r_disk));
}

void run_laplace_demo(const LaplaceDemoOpts& opts) {
  LaplaceDemoOpts o = opts;
  apply_set(o);
  if (o.resolution < 2) throw std::domain_error("laplace-demo: resolution must be >= 2");

  // beta = p/(p^2 - a^2) fixes the cloaked radius a.
  const double a2 = o.p * o.p - o.p / o.beta;
  if (!(a2 > 0.0)) throw std::domain_error("laplace-demo: p and beta give no real cloak radius");
  const double a = std::sqrt(a2);
  const double alpha = a * o.beta / o.p;
  const double delta = 0.5 * std::min(o.p - a, 1.0 / (o.beta + alpha));
  const CloakGeometry2D geom(a, o.p, o.R, delta);  // validates the inequalities
  if (o.r_disk >= a)
    throw std::domain_error("laplace-demo: scatterer radius must fit in the cloaked disk");

  Manifest manifest("laplace-demo", o.out);
  manifest.param("set", o.set);
  manifest.param("p", o.p);
  manifest.param("r_disk", o.r_disk);
  manifest.param("eps", o.eps);
  manifest.param("n", o.n);
  manifest.param("s", o.s);
  manifest.param("beta", o.beta);
  manifest.param("R", o.R);
  manifest.param("a", a);
  manifest.param("alpha", alpha);
  manifest.param("delta", delta);
  manifest.param("window_half_width", o.window);
  manifest.param("resolution", o.resolution);

  const ComplexPolynomial P = cloak_polynomial(o.n, o.s, o.beta);
  // Probe u0(x,y) = x inverts to 1/w, analytic away from w = 0.
  auto u0_kelvin = [](cplx w) { return 1.0 / w; };
  const ProbeApproximant q0 = probe_approximant(u0_kelvin, cplx(o.beta), alpha, o.probe_degree,
                                                0.5 * (alpha + o.beta));
  const ComplexPolynomial& Q0 = q0.poly;

  auto device_cplx = [&](cplx z) {
    const cplx w = 1.0 / z;
    return Q0.eval(w) * (P.eval(w) - 1.0);
  };
  auto device_re = [&](double x, double y) {
    const cplx z(x, y);
    if (std::abs(z) < 1e-9) return 0.0;
    return device_cplx(z).real();
  };

  const DielectricDisk disk(cplx(o.p, 0.0), o.r_disk, o.eps);
  auto ambient_active = [&](cplx z) { return z + device_cplx(z); };
  const double contour =
      safe_ambient_contour(o.p, o.r_disk, o.beta, static_cast<double>(o.s) / o.n);
  const ProbeApproximant amb_active =
      probe_approximant(ambient_active, disk.center, disk.radius, o.ambient_degree, contour);
  const DiskScatterSolution sol_active(disk, amb_active.centered);
  // Devices off: the ambient is the bare probe z = p + (z - p).
  const DiskScatterSolution sol_off(disk, {cplx(o.p, 0.0), cplx(1.0)});

  FieldGrid2D grid;
  grid.half_width = o.window;
  grid.resolution = o.resolution;

  auto outside_disk = [&](double x, double y) {
    return std::abs(cplx(x, y) - disk.center) >= disk.radius;
  };
  const auto total_active = sample_field(grid, [&](double x, double y) {
    if (!outside_disk(x, y)) return sol_active.interior_total(cplx(x, y));
    return x + device_re(x, y) + sol_active.exterior_scattered(cplx(x, y));
  });
  const auto total_inactive = sample_field(grid, [&](double x, double y) {
    if (!outside_disk(x, y)) return sol_off.interior_total(cplx(x, y));
    return x + sol_off.exterior_scattered(cplx(x, y));
  });
  const auto device_map = sample_field(grid, device_re);

  write_field_csv(manifest.path_for("total_active.csv", "csv"), grid, total_active);
  write_field_csv(manifest.path_for("total_inactive.csv", "csv"), grid, total_inactive);
  write_field_csv(manifest.path_for("device.csv", "csv"), grid, device_map);

  // Far-field deviation from the probe at 1.25 R, with and without devices.
  double dev_active = 0.0, dev_inactive = 0.0, probe_max = 0.0;
  for (int q = 0; q < 128; ++q) {
    const cplx z = std::polar(1.25 * o.R, 2.0 * kPi * q / 128);
    probe_max = std::max(probe_max, std::abs(z.real()));
    dev_active = std::max(dev_active, std::abs(device_cplx(z).real() +
                                               sol_active.exterior_scattered(z)));
    dev_inactive = std::max(dev_inactive, std::abs(sol_off.exterior_scattered(z)));
  }

  nlohmann::json report;
  report["reflection_factor"] = disk.reflection_factor();
  report["probe_truncation_residual"] = q0.residual;
  report["ambient_truncation_residual"] = amb_active.residual;
  report["far_field_rel_deviation_active"] = dev_active / probe_max;
  report["far_field_rel_deviation_inactive"] = dev_inactive / probe_max;
  std::ofstream rep(manifest.path_for("demo_report.json", "json"), std::ios::binary);
  rep << report.dump(2) << "\n";
  rep.close();
  manifest.write();
}

}  // namespace

void register_laplace_demo(CLI::App& app) {
  auto opt = std::make_shared<LaplaceDemoOpts>();
  CLI::App* cmd = app.add_subcommand(
      "laplace-demo",
      "Total-field maps of the quasistatic cloak with a near-resonant dielectric disk");
  cmd->add_option("--set", opt->set, "Parameter set: a, b, or custom");
  cmd->add_option("--p", opt->p, "Cloaked-disk center abscissa");
  cmd->add_option("--r", opt->r_disk, "Scatterer disk radius");
  cmd->add_option("--eps", opt->eps, "Scatterer dielectric constant");
  cmd->add_option("--n", opt->n, "Polynomial index n");
  cmd->add_option("--s", opt->s, "Polynomial index s");
  cmd->add_option("--beta", opt->beta, "Kelvin-image cloak center (default 1)");
  cmd->add_option("--R", opt->R, "Far-field radius");
  cmd->add_option("--window", opt->window, "Map half-width");
  cmd->add_option("--resolution", opt->resolution, "Grid resolution per axis");
  cmd->add_option("--out", opt->out, "Output directory")->required();
  cmd->callback([opt] { run_laplace_demo(*opt); });
}

}  // namespace excloak::tools
