#include <cmath>
#include <memory>
#include <nlohmann/json.hpp>
#include <random>

#include "commands.hpp"
#include "excloak/elastica/condense.hpp"
#include "excloak/elastica/network.hpp"
#include "excloak/elastica/willis.hpp"
#include "excloak/errors.hpp"
#include "manifest.hpp"

namespace excloak::tools {

using namespace excloak::elastica;
using nlohmann::json;

namespace {

struct ElasticOpts {
  double x2x = 1.0, x2y = 0.0;
  double vx = 0.0, vy = 1.0;
  double rho_offset = 0.3;
  double wx = 0.3, wy = 0.4;
  double k = 1.0;
  double m = 1.0;
  std::vector<double> omegas;  // default sweep
  std::string network_file;    // optional: condense an external network
  double network_omega = 1.0;
  std::string out;
};

Tensor4 random_full_symmetric(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Tensor4 c(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k2 = 0; k2 < dim; ++k2)
        for (int l = 0; l < dim; ++l) {
          if (c(i, j, k2, l) != 0.0) continue;
          const double v = u(rng);
          c(i, j, k2, l) = c(j, i, k2, l) = c(i, j, l, k2) = c(j, i, l, k2) = v;
          c(k2, l, i, j) = c(l, k2, i, j) = c(k2, l, j, i) = c(l, k2, j, i) = v;
        }
  return c;
}

json tensor_checks() {
  const int dim = 3;
  const Tensor4 C = random_full_symmetric(dim, 1234);
  const double rho = 1.3, omega = 1.9;
  json out;

  const WillisMaterial ident = transform_material(C, rho, TransformJet::identity(dim), omega);
  double dev = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      dev = std::max(dev, std::abs(ident.rho(i, j) - (i == j ? rho : 0.0)));
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l)
          dev = std::max(dev, std::abs(ident.C(i, j, k, l) - C(i, j, k, l)));
    }
  out["identity_jet_max_dev"] = dev;

  Eigen::Matrix3d A;
  A << 1.4, 0.3, -0.2, 0.1, 0.9, 0.25, -0.15, 0.2, 1.1;
  const WillisMaterial bi =
      transform_material(C, rho, TransformJet::from(dim, A, Eigen::Matrix3d::Identity(), Tensor3(dim)), omega);
  double dev7 = 0.0;
  const double inv_a = 1.0 / A.determinant();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          double want = 0.0;
          for (int p = 0; p < dim; ++p)
            for (int r = 0; r < dim; ++r) want += A(i, p) * A(k, r) * C(p, j, r, l);
          dev7 = std::max(dev7, std::abs(bi.C(i, j, k, l) - inv_a * want));
        }
  out["b_identity_reduction_max_dev"] = dev7;

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  Tensor3 G(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int p = 0; p < dim; ++p) G(i, j, p) = u(rng);
  const WillisMaterial ba = transform_material(C, rho, TransformJet::from(dim, A, A, G), omega);
  double sym = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          sym = std::max(sym, std::abs(ba.C(i, j, k, l) - ba.C(j, i, k, l)));
          sym = std::max(sym, std::abs(ba.C(i, j, k, l) - ba.C(k, l, i, j)));
        }
  out["b_equals_a_symmetry_dev"] = sym / std::max(ba.C.max_abs(), 1e-30);

  Eigen::Matrix3d B = Eigen::Matrix3d::Identity();
  B(0, 1) = 0.15;
  B(1, 0) = -0.1;
  B(2, 2) = 1.2;
  const WillisMaterial wm = transform_material(C, rho, TransformJet::from(dim, A, B, G), omega);
  double wresid = 0.0;
  for (unsigned seed = 0; seed < 3; ++seed) {
    const DisplacementField f = random_polynomial_field(dim, 500 + seed);
    wresid = std::max(wresid, willis_form_residual(wm, omega, f, Vec3(0.1, -0.2, 0.3)));
  }
  out["willis_form_residual"] = wresid;
  return out;
}

void run_elastic_verify(const ElasticOpts& o) {
  TorqueSpringSpec spec;
  spec.dim = 2;
  spec.x1 = Vec3::Zero();
  spec.x2 = Vec3(o.x2x, o.x2y, 0.0);
  spec.v = Vec3(o.vx, o.vy, 0.0);
  spec.rho_offset = o.rho_offset;
  spec.w = Vec3(o.wx, o.wy, 0.0);
  spec.k = o.k;
  spec.m = o.m;

  Manifest manifest("elastic-verify", o.out);
  manifest.param("x2", std::vector<double>{o.x2x, o.x2y});
  manifest.param("v", std::vector<double>{o.vx, o.vy});
  manifest.param("rho_offset", o.rho_offset);
  manifest.param("w", std::vector<double>{o.wx, o.wy});
  manifest.param("k", o.k);
  manifest.param("m", o.m);

  const double K = measure_K(spec);
  const double w_res = std::sqrt(2.0 * K / spec.m);
  std::vector<double> omegas = o.omegas;
  if (omegas.empty())
    for (double w = 0.3; w <= 3.0; w += 0.3) omegas.push_back(w);

  const SpringNetwork net = build_torque_spring(spec);
  const Vec3 v = spec.v.normalized();
  json sweep = json::array();
  for (double omega : omegas) {
    json entry;
    entry["omega"] = omega;
    entry["resonance_proximity"] = resonance_proximity(K, spec.m, omega);
    try {
      const double kp = torque_spring_constant(K, spec.m, omega);
      const Eigen::MatrixXd S = dynamic_condensation(net, omega, net.terminals);
      entry["k_prime"] = kp;
      entry["condensation_residual"] =
          torque_block_residual(S, v, spec.dim, kp) / std::max(1.0, std::abs(kp));
      entry["resonant"] = false;
    } catch (const excloak::numeric_error& e) {
      entry["resonant"] = true;
      entry["note"] = e.what();
    }
    sweep.push_back(entry);
  }

  TorqueSpringSpec pinned = spec;
  pinned.m = kPinnedMass;
  const SpringNetwork pnet = build_torque_spring(pinned);
  const Eigen::MatrixXd Sp = dynamic_condensation(pnet, 1.0, pnet.terminals);

  json report;
  report["K_measured"] = K;
  report["omega_resonance"] = w_res;
  report["sweep"] = sweep;
  report["pinned_k_prime"] = torque_block_coefficient(Sp, v, spec.dim);
  report["pinned_residual"] = torque_block_residual(Sp, v, spec.dim, K) / std::max(1.0, K);
  report["tensor_checks"] = tensor_checks();
  json warn = json::array();
  for (const auto& w : geometry_warnings(net)) warn.push_back(w);
  report["geometry_warnings"] = warn;

  if (!o.network_file.empty()) {
    const SpringNetwork external = load_network_file(o.network_file);
    const Eigen::MatrixXd S = dynamic_condensation(external, o.network_omega, external.terminals);
    std::ofstream rj(manifest.path_for("network_response.json", "json"), std::ios::binary);
    rj << response_to_json(S, external.terminals, o.network_omega) << "\n";
  }

  std::ofstream out(manifest.path_for("elastic_report.json", "json"), std::ios::binary);
  out << report.dump(2) << "\n";
  out.close();
  manifest.write();
}

}  // namespace

void register_elastic_verify(CLI::App& app) {
  auto opt = std::make_shared<ElasticOpts>();
  CLI::App* cmd = app.add_subcommand(
      "elastic-verify",
      "Torque-spring condensation against the closed form, plus material-transform checks");
  cmd->add_option("--x2x", opt->x2x, "Second terminal x");
  cmd->add_option("--x2y", opt->x2y, "Second terminal y");
  cmd->add_option("--vx", opt->vx, "Force direction x");
  cmd->add_option("--vy", opt->vy, "Force direction y");
  cmd->add_option("--rho-offset", opt->rho_offset, "Offset of the y-nodes along v");
  cmd->add_option("--wx", opt->wx, "Auxiliary offset x");
  cmd->add_option("--wy", opt->wy, "Auxiliary offset y");
  cmd->add_option("--k", opt->k, "Spring constant");
  cmd->add_option("--m", opt->m, "Internal mass");
  cmd->add_option("--omega", opt->omegas, "Frequency sweep values");
  cmd->add_option("--network", opt->network_file, "Condense an external network JSON");
  cmd->add_option("--network-omega", opt->network_omega, "Frequency for the external network");
  cmd->add_option("--out", opt->out, "Output directory")->required();
  cmd->callback([opt] { run_elastic_verify(*opt); });
}

}  // namespace excloak::tools
