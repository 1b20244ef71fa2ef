#include <cmath>
#include <memory>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "excloak/helmholtz3d/geometry.hpp"
#include "excloak/helmholtz3d/layer.hpp"
#include "excloak/helmholtz3d/metrics.hpp"
#include "excloak/helmholtz3d/multipole.hpp"
#include "excloak/helmholtz3d/slices.hpp"
#include "excloak/helmholtz3d/soundsoft.hpp"
#include "excloak/laplace2d/field_export.hpp"  // PGM byte writer
#include "manifest.hpp"

namespace excloak::tools {

using namespace excloak::helmholtz3d;
using nlohmann::json;

namespace {

struct HelmOpts {
  double lambda = 1.0;
  double delta = 0.0;   // default 6 lambda
  double sigma = 0.0;   // default delta / 3
  std::vector<double> incident_dir = {1.0, 1.0, 1.0};
  double level = 100.0;
  double slice_z = std::numeric_limits<double>::quiet_NaN();  // override the 5-slice set
  int resolution = 128;
  double points_per_wavelength = 8.0;
  double max_work = 5e10;
  std::string out;
};

struct HelmSetup {
  WaveContext ctx{};
  TetraCloakGeometry geom{};
  Field u_i;
  FaceQuadratureSet quads{};
  int N = 0;
  std::size_t face_nodes = 0;
};

HelmSetup prepare(HelmOpts& o, double field_points, const char* cmd) {
  if (!(o.lambda > 0.0)) throw std::domain_error(std::string(cmd) + ": lambda must be > 0");
  if (o.delta == 0.0) o.delta = 6.0 * o.lambda;
  if (o.sigma == 0.0) o.sigma = o.delta / 3.0;
  if (!(o.delta > o.sigma))
    throw std::domain_error(std::string(cmd) + ": need delta > sigma");
  if (o.points_per_wavelength < 2.0)
    throw std::domain_error(std::string(cmd) + ": points-per-wavelength must be >= 2");

  HelmSetup s;
  s.ctx = WaveContext::from_wavelength(o.lambda);
  s.geom = make_tetra_cloak(o.sigma, o.delta, s.ctx);
  Vec3 khat(o.incident_dir.at(0), o.incident_dir.at(1), o.incident_dir.at(2));
  if (!(khat.norm() > 0.0))
    throw std::domain_error(std::string(cmd) + ": incident direction must be nonzero");
  s.u_i = incident_plane_wave(khat.normalized(), s.ctx);
  s.N = truncation_order(o.delta, s.ctx);
  s.quads = make_face_quadratures(s.geom, o.lambda / o.points_per_wavelength);
  for (const auto& fq : s.quads) s.face_nodes += fq.nodes.size();

  // Runtime budget guard: assembly + field evaluation both scale with the
  // mode count (N+1)^2.
  const double modes = static_cast<double>(s.N + 1) * (s.N + 1);
  const double work = (static_cast<double>(s.face_nodes) + field_points * 4.0) * modes;
  if (work > o.max_work) {
    std::ostringstream os;
    os << cmd << ": estimated work " << work << " exceeds --max-work " << o.max_work
       << " (face nodes " << s.face_nodes << ", field points " << field_points << ", N " << s.N
       << "); lower the resolution or delta, or raise --max-work";
    throw std::domain_error(os.str());
  }
  return s;
}

void add_quadrature_params(json& j, const HelmOpts& o, const HelmSetup& s) {
  j["points_per_wavelength"] = o.points_per_wavelength;
  j["face_nodes_total"] = s.face_nodes;
  j["node_spacing"] = s.quads[0].node_spacing;
  j["sphere_nodes"] = 2 * (s.N + 1) * (s.N + 1);
}

// Auto-converged sound-soft projection degree: grow M until the boundary
// residual of the total field stops improving or dips below tol.
int converged_scatter_degree(const std::function<cplx(const Vec3&)>& ambient, double a_s,
                             const WaveContext& ctx, double tol = 1e-8) {
  const int m0 = static_cast<int>(std::ceil(ctx.k * a_s));
  double best = std::numeric_limits<double>::infinity();
  int best_m = m0;
  for (int M = m0 + 4; M <= m0 + 24; M += 4) {
    const SoundSoftScatter sc(ambient, a_s, M, ctx);
    double resid = 0.0;
    for (int q = 0; q < 64; ++q) {
      const double th = std::acos(-1.0 + 2.0 * (q % 8 + 0.5) / 8.0);
      const double ph = 2.0 * kPi * (q / 8) / 8.0;
      const Vec3 x(a_s * std::sin(th) * std::cos(ph), a_s * std::sin(th) * std::sin(ph),
                   a_s * std::cos(th));
      resid = std::max(resid, std::abs(ambient(x) + sc.value(x)));
    }
    if (resid < best) {
      best = resid;
      best_m = M;
    }
    if (resid < tol) break;
  }
  return best_m;
}

void run_helm_slices(HelmOpts& o) {
  if (o.resolution < 2) throw std::domain_error("helm-slices: resolution must be >= 2");
  std::vector<double> zs;
  if (std::isnan(o.slice_z)) {
    const double sg = o.sigma > 0.0 ? o.sigma : (o.delta > 0.0 ? o.delta / 3.0 : 2.0 * o.lambda);
    zs = {-2.0 * sg, -sg, 0.0, sg, 2.0 * sg};
  } else {
    zs = {o.slice_z};
  }
  const double field_points = 3.0 * static_cast<double>(zs.size()) * o.resolution * o.resolution;
  HelmSetup s = prepare(o, field_points, "helm-slices");

  Manifest manifest("helm-slices", o.out);
  manifest.param("lambda", o.lambda);
  manifest.param("delta", o.delta);
  manifest.param("sigma", o.sigma);
  manifest.param("incident_dir", o.incident_dir);
  manifest.param("resolution", o.resolution);
  manifest.param("N", s.N);
  manifest.param("points_per_wavelength", o.points_per_wavelength);

  const DeviceArray devices = multipole_coefficients(s.geom, s.u_i, s.N, s.quads, s.ctx);
  const DeviceFieldEvaluator u_d(devices, s.ctx);

  // Sound-soft ball, larger than the guaranteed cloaked sphere.
  const double a_s = 3.0 * r_eff_star(o.delta);
  auto amb_active = [&](const Vec3& x) { return s.u_i.value(x) + u_d(x); };
  auto amb_inactive = [&](const Vec3& x) { return s.u_i.value(x); };
  const int M_act = converged_scatter_degree(amb_active, a_s, s.ctx);
  const int M_inact = converged_scatter_degree(amb_inactive, a_s, s.ctx);
  const SoundSoftScatter sc_active(amb_active, a_s, M_act, s.ctx);
  const SoundSoftScatter sc_inactive(amb_inactive, a_s, M_inact, s.ctx);
  manifest.param("scatterer_radius", a_s);
  manifest.param("scatter_degree_active", M_act);
  manifest.param("scatter_degree_inactive", M_inact);

  struct Row {
    const char* name;
    std::function<cplx(const Vec3&)> field;
  };
  const double half_width = 5.0 * o.lambda;
  const Row rows[] = {
      {"ud", [&](const Vec3& x) { return u_d(x); }},
      {"total_active",
       [&](const Vec3& x) {
         if (x.norm() <= a_s) return cplx(0.0);  // sound-soft interior
         return s.u_i.value(x) + u_d(x) + sc_active.value(x);
       }},
      {"total_inactive",
       [&](const Vec3& x) {
         if (x.norm() <= a_s) return cplx(0.0);
         return s.u_i.value(x) + sc_inactive.value(x);
       }},
  };

  for (const Row& row : rows) {
    for (double z : zs) {
      const FieldSlice slice = slice_field(row.field, z, half_width, o.resolution);
      char name[96];
      std::snprintf(name, sizeof(name), "%s_z%+.3f", row.name, z / o.lambda);
      write_slice_csv(manifest.path_for(std::string(name) + ".csv", "csv"), slice);
      write_slice_pgm(manifest.path_for(std::string(name) + ".pgm", "pgm"), slice, -1.0, 1.0);
      json sidecar;
      sidecar["min"] = -1.0;
      sidecar["max"] = 1.0;
      sidecar["z"] = z;
      sidecar["lambda"] = o.lambda;
      sidecar["delta"] = o.delta;
      sidecar["sigma"] = o.sigma;
      sidecar["N"] = s.N;
      std::ofstream sj(manifest.path_for(std::string(name) + ".json", "json"),
                       std::ios::binary);
      sj << sidecar.dump(2) << "\n";
    }
  }
  manifest.write();
}

void run_helm_perf(HelmOpts& o, std::vector<double> dols) {
  if (dols.empty()) dols = {2.0, 4.0, 6.0};
  Manifest manifest("helm-perf", o.out);
  manifest.param("lambda", o.lambda);
  manifest.param("delta_over_lambda", dols);
  manifest.param("level", o.level);
  manifest.param("points_per_wavelength", o.points_per_wavelength);

  json entries = json::array();
  for (double dol : dols) {
    HelmOpts local = o;
    local.delta = dol * o.lambda;
    local.sigma = local.delta / 3.0;
    const int grid_phi = 256;
    HelmSetup s = prepare(local, 2.0 * (grid_phi * grid_phi / 2), "helm-perf");
    const DeviceArray devices = multipole_coefficients(s.geom, s.u_i, s.N, s.quads, s.ctx);
    const CloakMetrics metrics = cloak_metrics(devices, s.u_i, s.geom, s.ctx);
    const ExtendedDeviceAnalysis ext =
        extended_device_analysis(devices, o.level, s.geom, s.ctx, grid_phi, 720);

    json entry;
    entry["delta_over_lambda"] = dol;
    entry["interior_residual"] = metrics.interior_residual;
    entry["exterior_leakage"] = metrics.exterior_leakage;
    entry["open_area_percent"] = ext.open_area_percent;
    entry["N"] = s.N;
    json quad;
    add_quadrature_params(quad, local, s);
    entry["quadrature"] = quad;
    entries.push_back(entry);

    char name[64];
    std::snprintf(name, sizeof(name), "extended_mask_dol%g.pgm", dol);
    excloak::laplace2d::write_pgm_bytes(manifest.path_for(name, "pgm"), ext.raster_width,
                                        ext.raster_height, ext.mollweide_mask);
  }
  std::ofstream out(manifest.path_for("perf.json", "json"), std::ios::binary);
  out << entries.dump(2) << "\n";
  out.close();
  manifest.write();
}

void run_tetra_geom(HelmOpts& o) {
  if (!(o.lambda > 0.0)) throw std::domain_error("tetra-geom: lambda must be > 0");
  if (o.delta == 0.0) o.delta = 6.0 * o.lambda;
  if (o.sigma == 0.0) o.sigma = o.delta / 3.0;
  const WaveContext ctx = WaveContext::from_wavelength(o.lambda);
  const TetraCloakGeometry g = make_tetra_cloak(o.sigma, o.delta, ctx);

  Manifest manifest("tetra-geom", o.out);
  manifest.param("lambda", o.lambda);
  manifest.param("delta", o.delta);
  manifest.param("sigma", o.sigma);

  json doc;
  doc["sigma"] = g.sigma;
  doc["delta"] = g.delta;
  doc["ball_radius"] = g.ball_radius;
  doc["r_eff"] = g.r_eff;
  doc["r_eff_star"] = r_eff_star(g.delta);
  doc["optimal"] = g.optimal;
  doc["N"] = truncation_order(g.delta, ctx);
  json verts = json::array(), devs = json::array();
  for (int l = 0; l < 4; ++l) {
    verts.push_back({g.vertices[l].x(), g.vertices[l].y(), g.vertices[l].z()});
    devs.push_back({g.devices[l].x(), g.devices[l].y(), g.devices[l].z()});
  }
  doc["vertices"] = verts;
  doc["devices"] = devs;
  // Tangency: distance from each vertex to its three facing devices vs r.
  json tangency = json::array();
  for (int j = 0; j < 4; ++j) {
    json row = json::array();
    for (int l = 0; l < 4; ++l)
      if (l != j) row.push_back((g.vertices[j] - g.devices[l]).norm() - g.ball_radius);
    tangency.push_back(row);
  }
  doc["vertex_tangency_gap"] = tangency;

  std::ofstream out(manifest.path_for("geometry.json", "json"), std::ios::binary);
  out << doc.dump(2) << "\n";
  out.close();
  manifest.write();
}

void add_common(CLI::App* cmd, const std::shared_ptr<HelmOpts>& opt) {
  cmd->add_option("--lambda", opt->lambda, "Wavelength");
  cmd->add_option("--delta", opt->delta, "Device sphere radius (default 6 lambda)");
  cmd->add_option("--sigma", opt->sigma, "Tetrahedron circumsphere radius (default delta/3)");
  cmd->add_option("--out", opt->out, "Output directory")->required();
}

}  // namespace

void register_helm_slices(CLI::App& app) {
  auto opt = std::make_shared<HelmOpts>();
  CLI::App* cmd = app.add_subcommand(
      "helm-slices", "Constant-z slices of the device and total fields with a sound-soft ball");
  add_common(cmd, opt);
  cmd->add_option("--incident-dir", opt->incident_dir, "Incident plane-wave direction")
      ->expected(3);
  cmd->add_option("--slice-z", opt->slice_z, "Single slice height (default: 5-slice set)");
  cmd->add_option("--resolution", opt->resolution, "Samples per slice axis");
  cmd->add_option("--points-per-wavelength", opt->points_per_wavelength,
                  "Face quadrature density");
  cmd->add_option("--max-work", opt->max_work, "Runtime budget guard");
  cmd->callback([opt] { run_helm_slices(*opt); });
}

void register_helm_perf(CLI::App& app) {
  auto opt = std::make_shared<HelmOpts>();
  auto dols = std::make_shared<std::vector<double>>();
  CLI::App* cmd =
      app.add_subcommand("helm-perf", "Cloak metrics and extended-device open area per delta");
  add_common(cmd, opt);
  cmd->add_option("--incident-dir", opt->incident_dir, "Incident plane-wave direction")
      ->expected(3);
  cmd->add_option("--delta-over-lambda", *dols, "Sweep values (default 2 4 6)");
  cmd->add_option("--level", opt->level, "Extended-device amplitude level");
  cmd->add_option("--points-per-wavelength", opt->points_per_wavelength,
                  "Face quadrature density");
  cmd->add_option("--max-work", opt->max_work, "Runtime budget guard");
  cmd->callback([opt, dols] { run_helm_perf(*opt, *dols); });
}

void register_tetra_geom(CLI::App& app) {
  auto opt = std::make_shared<HelmOpts>();
  CLI::App* cmd = app.add_subcommand("tetra-geom", "Tetrahedral cloak geometry report");
  add_common(cmd, opt);
  cmd->callback([opt] { run_tetra_geom(*opt); });
}

}  // namespace excloak::tools
