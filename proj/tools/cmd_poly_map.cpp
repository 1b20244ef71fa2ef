#include <cmath>
#include <memory>

#include "commands.hpp"
#include "excloak/laplace2d/cloak.hpp"
#include "excloak/laplace2d/field_export.hpp"
#include "manifest.hpp"

namespace excloak::tools {

using namespace excloak::laplace2d;

namespace {

struct PolyMapOpts {
  int n = 15;
  int s = 15;
  double beta = 1.0;
  double L = 0.0;  // 0 = use s/n
  double window = 0.0;  // half-width; 0 = 1.1 * beta
  int resolution = 256;
  double level = 1e-2;
  std::string out;
};

// Boundary of D_{beta,L} as two closed polylines, one per lobe, found by
// radial bisection from the lobe anchors 0 and beta.
void write_region_boundary(const std::filesystem::path& path, double beta, double L) {
  std::ofstream out(path, std::ios::binary);
  out << "lobe,x,y\n";
  char buf[96];
  const int n_angles = 720;
  for (int lobe = 0; lobe < 2; ++lobe) {
    const cplx anchor = lobe == 0 ? cplx(0.0) : cplx(beta);
    for (int q = 0; q <= n_angles; ++q) {
      const double th = 2.0 * kPi * q / n_angles;
      const cplx dir = std::polar(1.0, th);
      auto inside = [&](double r) {
        return in_convergence_region(anchor + r * dir, beta, L).inside;
      };
      // March to the first exit (a ray can re-enter the other lobe), then
      // bisect inside that bracket.
      const double step = beta / 512.0;
      double lo = 0.0, hi = step;
      while (inside(hi) && hi < 4.0 * beta) {
        lo = hi;
        hi += step;
      }
      for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (inside(mid))
          lo = mid;
        else
          hi = mid;
      }
      const cplx z = anchor + 0.5 * (lo + hi) * dir;
      std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", lobe, z.real(), z.imag());
      out << buf;
    }
  }
}

void run_poly_map(const PolyMapOpts& opt) {
  if (opt.n < 1 || opt.s < 1) throw std::domain_error("poly-map: need n >= 1 and s >= 1");
  if (!(opt.beta > 0.0)) throw std::domain_error("poly-map: need beta > 0");
  if (opt.resolution < 2) throw std::domain_error("poly-map: resolution must be >= 2");
  if (!(opt.level > 0.0)) throw std::domain_error("poly-map: level must be > 0");
  const double L = opt.L > 0.0 ? opt.L : static_cast<double>(opt.s) / opt.n;
  const double hw = opt.window > 0.0 ? opt.window : 1.1 * opt.beta;

  Manifest manifest("poly-map", opt.out);
  manifest.param("n", opt.n);
  manifest.param("s", opt.s);
  manifest.param("beta", opt.beta);
  manifest.param("L", L);
  manifest.param("window_half_width", hw);
  manifest.param("resolution", opt.resolution);
  manifest.param("level", opt.level);

  FieldGrid2D grid;
  grid.cx = 0.5 * opt.beta;
  grid.cy = 0.0;
  grid.half_width = hw;
  grid.resolution = opt.resolution;

  const auto p_abs = sample_field(grid, [&](double x, double y) {
    return std::abs(cloak_polynomial_value(opt.n, opt.s, opt.beta, cplx(x, y)));
  });
  const auto pm1_abs = sample_field(grid, [&](double x, double y) {
    return std::abs(cloak_polynomial_value(opt.n, opt.s, opt.beta, cplx(x, y)) - 1.0);
  });

  write_field_csv(manifest.path_for("p_abs.csv", "csv"), grid, p_abs);
  write_field_csv(manifest.path_for("p_minus_one_abs.csv", "csv"), grid, pm1_abs);
  write_pgm_mask(manifest.path_for("p_mask.pgm", "pgm"), opt.resolution, opt.resolution, p_abs,
                 opt.level);
  write_pgm_mask(manifest.path_for("p_minus_one_mask.pgm", "pgm"), opt.resolution,
                 opt.resolution, pm1_abs, opt.level);
  write_region_boundary(manifest.path_for("convergence_region_boundary.csv", "csv"), opt.beta,
                        L);
  manifest.write();
}

}  // namespace

void register_poly_map(CLI::App& app) {
  auto opt = std::make_shared<PolyMapOpts>();
  CLI::App* cmd = app.add_subcommand(
      "poly-map", "Magnitude maps and level masks of the cloaking polynomial family");
  cmd->add_option("--n", opt->n, "Origin-side root multiplicity n");
  cmd->add_option("--s", opt->s, "Cloak-side root multiplicity s");
  cmd->add_option("--beta", opt->beta, "Kelvin-image cloak center abscissa");
  cmd->add_option("--L", opt->L, "Region exponent (default s/n)");
  cmd->add_option("--window", opt->window, "Map half-width (default 1.1 beta)");
  cmd->add_option("--resolution", opt->resolution, "Grid resolution per axis");
  cmd->add_option("--level", opt->level, "Mask level (default 1e-2)");
  cmd->add_option("--out", opt->out, "Output directory")->required();
  cmd->callback([opt] { run_poly_map(*opt); });
}

}  // namespace excloak::tools
