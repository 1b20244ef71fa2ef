// Acceptance suite: one checked criterion per function, each printing a
// single [PASS]/[FAIL] line with the measured values. Run with no argument
// for all criteria or with an index (1..11) for one of them.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "excloak/elastica/condense.hpp"
#include "excloak/elastica/willis.hpp"
#include "excloak/helmholtz3d/geometry.hpp"
#include "excloak/helmholtz3d/layer.hpp"
#include "excloak/helmholtz3d/metrics.hpp"
#include "excloak/helmholtz3d/multipole.hpp"
#include "excloak/helmholtz3d/soundsoft.hpp"
#include "excloak/laplace2d/cloak.hpp"
#include "excloak/specfun/greens.hpp"

using namespace excloak;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

char buf[512];

// ---------------------------------------------------------------- 1
Outcome geometry_closed_forms() {
  Outcome out;
  const double want_ratio = 1.0 - 2.0 * std::sqrt(2.0) / 3.0;
  double worst = 0.0;
  for (double delta : {0.5, 1.0, 3.0, 6.0, 24.0}) {
    const auto ctx = WaveContext::from_wavelength(1.0);
    const auto g = helmholtz3d::make_tetra_cloak(delta / 3.0, delta, ctx);
    worst = std::max(worst, std::abs(helmholtz3d::r_eff_star(delta) / delta - want_ratio));
    worst = std::max(worst,
                     std::abs(g.ball_radius - 2.0 * std::sqrt(2.0) * delta / 3.0) / delta);
  }
  out.pass = worst < 1e-12;
  std::snprintf(buf, sizeof(buf),
                "r_eff*/delta = %.15f (target %.15f), worst closed-form gap %.2e (tol 1e-12)",
                helmholtz3d::r_eff_star(1.0), want_ratio, worst);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 2
Outcome addition_theorem() {
  Outcome out;
  const auto ctx = WaveContext::from_wavenumber(2.0 * kPi);
  const Vec3 center = Vec3::Zero();
  const Vec3 x(1.0, 0.0, 0.0);
  const Vec3 y(0.3, 0.0, 0.0);
  const cplx exact = specfun::greens_function(x, y, ctx);
  const cplx partial = specfun::greens_addition_partial(x, y, center, 40, ctx);
  const double err = std::abs(partial - exact);

  double ratio_acc = 1.0;
  int count = 0;
  for (int n = 28; n < 40; ++n) {
    const double t1 = specfun::greens_addition_term_magnitude(x, y, center, n, ctx);
    const double t2 = specfun::greens_addition_term_magnitude(x, y, center, n + 1, ctx);
    if (t1 > 0.0 && t2 > 0.0) {
      ratio_acc *= t2 / t1;
      ++count;
    }
  }
  const double mean_ratio = std::pow(ratio_acc, 1.0 / count);
  out.pass = err < 1e-10 && std::abs(mean_ratio - 0.3) < 0.1 * 0.3;
  std::snprintf(buf, sizeof(buf),
                "|partial(N=40) - G| = %.2e (tol 1e-10), mean decay ratio %.4f (target 0.3 "
                "+/- 10%%)",
                err, mean_ratio);
  out.detail = buf;
  return out;
}

// shared desk-scale configuration for criteria 3 and 4
struct DeskCloak {
  WaveContext ctx = WaveContext::from_wavelength(1.0);
  helmholtz3d::TetraCloakGeometry geom;
  helmholtz3d::Field u_i;
  helmholtz3d::FaceQuadratureSet quads;
  DeskCloak()
      : geom(helmholtz3d::make_tetra_cloak(0.5, 1.5, ctx)),
        u_i(helmholtz3d::incident_plane_wave(Vec3(1, 1, 1).normalized(), ctx)),
        quads(helmholtz3d::make_face_quadratures(geom, ctx.lambda / 32.0)) {}

  bool inside_tetra(const Vec3& x) const {
    for (int l = 0; l < 4; ++l) {
      const auto f = geom.face(l);
      if (geom.face_outward_normal(l).dot(x - geom.vertices[f[0]]) > 0.0) return false;
    }
    return true;
  }
};

// ---------------------------------------------------------------- 3
Outcome green_dichotomy() {
  Outcome out;
  DeskCloak d;
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  double worst_in = 0.0;
  int found = 0;
  while (found < 20) {
    double b0 = 0.1 + 0.8 * (0.5 + 0.5 * u(rng)), b1 = 0.1 + 0.8 * (0.5 + 0.5 * u(rng)),
           b2 = 0.1 + 0.8 * (0.5 + 0.5 * u(rng)), b3 = 0.1 + 0.8 * (0.5 + 0.5 * u(rng));
    const double s = b0 + b1 + b2 + b3;
    b0 /= s;
    b1 /= s;
    b2 /= s;
    b3 /= s;
    if (std::min({b0, b1, b2, b3}) < 0.1) continue;
    const Vec3 x = b0 * d.geom.vertices[0] + b1 * d.geom.vertices[1] +
                   b2 * d.geom.vertices[2] + b3 * d.geom.vertices[3];
    ++found;
    const cplx ud = helmholtz3d::green_device_field(d.geom, d.u_i, x, d.quads, d.ctx);
    worst_in = std::max(worst_in, std::abs(ud + d.u_i.value(x)));
  }

  double worst_out = 0.0;
  found = 0;
  while (found < 20) {
    const Vec3 x(6.0 * u(rng), 6.0 * u(rng), 6.0 * u(rng));
    if (x.norm() > 4.0 * d.geom.delta) continue;
    if (d.inside_tetra(x) || helmholtz3d::region_A_contains(d.geom, x)) continue;
    bool near = false;
    const cplx ud = helmholtz3d::green_device_field(d.geom, d.u_i, x, d.quads, d.ctx, &near);
    if (near) continue;
    ++found;
    worst_out = std::max(worst_out, std::abs(ud));
  }
  out.pass = worst_in < 1e-2 && worst_out < 1e-2;
  std::snprintf(buf, sizeof(buf),
                "interior max |u_d + u_i|/|u_i| = %.2e, exterior max |u_d| = %.2e (tol 1e-2)",
                worst_in, worst_out);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 4
Outcome theorem2_equivalence() {
  Outcome out;
  DeskCloak d;
  const int N = helmholtz3d::truncation_order(d.geom.delta, d.ctx);
  const auto da = helmholtz3d::multipole_coefficients(d.geom, d.u_i, N, d.quads, d.ctx);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  int found = 0;
  while (found < 50) {
    const Vec3 x(6.0 * u(rng), 6.0 * u(rng), 6.0 * u(rng));
    if (x.norm() > 4.0 * d.geom.delta || helmholtz3d::region_A_contains(d.geom, x)) continue;
    ++found;
    const cplx direct = helmholtz3d::green_device_field(d.geom, d.u_i, x, d.quads, d.ctx);
    const cplx mp = helmholtz3d::device_field(da, x, d.ctx);
    worst = std::max(worst, std::abs(mp - direct) / std::max(1.0, std::abs(direct)));
  }
  out.pass = worst < 1e-6;
  std::snprintf(buf, sizeof(buf),
                "worst relative mismatch %.2e at N = %d (tol 1e-6); the truncation tail near "
                "region A dominates at the heuristic order",
                worst, N);
  out.detail = buf;
  if (!out.pass) {
    // Equivalence diagnostic: the same comparison converges geometrically
    // once N clears k*r by a margin.
    for (int Nhi : {25, 35}) {
      const auto dahi = helmholtz3d::multipole_coefficients(d.geom, d.u_i, Nhi, d.quads, d.ctx);
      std::mt19937 rng2(12345);
      double w2 = 0.0;
      int got = 0;
      while (got < 50) {
        const Vec3 x(6.0 * u(rng2), 6.0 * u(rng2), 6.0 * u(rng2));
        if (x.norm() > 4.0 * d.geom.delta || helmholtz3d::region_A_contains(d.geom, x)) continue;
        ++got;
        const cplx direct = helmholtz3d::green_device_field(d.geom, d.u_i, x, d.quads, d.ctx);
        const cplx mp = helmholtz3d::device_field(dahi, x, d.ctx);
        w2 = std::max(w2, std::abs(mp - direct) / std::max(1.0, std::abs(direct)));
      }
      std::snprintf(buf, sizeof(buf), "; N=%d gives %.2e", Nhi, w2);
      out.detail += buf;
    }
  }
  return out;
}

// shared paper-scale configuration for criteria 5 and 6
struct PaperCloak {
  WaveContext ctx = WaveContext::from_wavelength(1.0);
  helmholtz3d::TetraCloakGeometry geom;
  helmholtz3d::Field u_i;
  helmholtz3d::FaceQuadratureSet quads;
  int N;
  helmholtz3d::DeviceArray devices;
  PaperCloak()
      : geom(helmholtz3d::make_tetra_cloak(2.0, 6.0, ctx)),
        u_i(helmholtz3d::incident_plane_wave(Vec3(1, 1, 1).normalized(), ctx)),
        quads(helmholtz3d::make_face_quadratures(geom, ctx.lambda / 8.0)),
        N(helmholtz3d::truncation_order(geom.delta, ctx)),
        devices(helmholtz3d::multipole_coefficients(geom, u_i, N, quads, ctx)) {}
};

// ---------------------------------------------------------------- 5
Outcome paper_scale_metrics() {
  Outcome out;
  PaperCloak p;
  const auto metrics = helmholtz3d::cloak_metrics(p.devices, p.u_i, p.geom, p.ctx);
  out.pass = p.N == 57 && metrics.interior_residual < 0.05 && metrics.exterior_leakage < 0.05;
  std::snprintf(buf, sizeof(buf),
                "N = %d, interior residual %.2e, exterior leakage %.2e (tol 0.05)",
                p.N, metrics.interior_residual, metrics.exterior_leakage);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 6
Outcome scatterer_suppression() {
  Outcome out;
  PaperCloak p;
  const double a_s = 3.0 * helmholtz3d::r_eff_star(p.geom.delta);
  const helmholtz3d::DeviceFieldEvaluator u_d(p.devices, p.ctx);
  auto amb_active = [&](const Vec3& x) { return p.u_i.value(x) + u_d(x); };
  auto amb_inactive = [&](const Vec3& x) { return p.u_i.value(x); };
  const int M = static_cast<int>(std::ceil(p.ctx.k * a_s)) + 14;
  const helmholtz3d::SoundSoftScatter sc_active(amb_active, a_s, M, p.ctx);
  const helmholtz3d::SoundSoftScatter sc_inactive(amb_inactive, a_s, M, p.ctx);

  const auto far = helmholtz3d::SphereQuadrature::build(2.0 * p.geom.delta, 16, 32);
  double max_active = 0.0, max_inactive = 0.0, pow_active = 0.0, pow_inactive = 0.0;
  for (std::size_t q = 0; q < far.nodes.size(); ++q) {
    const double va = std::abs(sc_active.value(far.nodes[q]));
    const double vi = std::abs(sc_inactive.value(far.nodes[q]));
    max_active = std::max(max_active, va);
    max_inactive = std::max(max_inactive, vi);
    pow_active += far.weights[q] * va * va;
    pow_inactive += far.weights[q] * vi * vi;
  }
  out.pass = max_active <= 0.1 * max_inactive;
  std::snprintf(buf, sizeof(buf),
                "far scattered magnitude: active %.3e vs inactive %.3e (max ratio %.3f, L2 "
                "ratio %.3f, tol 0.1); the ball reaches 3x deeper than the guaranteed cloaked "
                "sphere, and on its region-A caps the truncated device series departs from "
                "the layer potential (residual ~0.8 rms), capping suppression near 5-7x",
                max_active, max_inactive, max_active / max_inactive,
                std::sqrt(pow_active / pow_inactive));
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 7
Outcome polynomial_identities() {
  Outcome out;
  double worst_zero = 0.0, worst_div = 0.0, worst_oracle = 0.0;
  bool const_ok = true;
  for (int n = 1; n < 40; ++n) {
    for (int s = 1; n + s <= 40; ++s) {
      const auto p = laplace2d::cloak_polynomial(n, s, 1.0);
      const double norm = p.coeff_max_norm();
      if (p.coeff(0) != cplx(1.0)) const_ok = false;
      for (int t = 1; t < n; ++t)
        worst_zero = std::max(worst_zero, std::abs(p.coeff(t)) / (1e-12 * norm));
      for (double rem : laplace2d::root_deflation_residuals(p, cplx(1.0), s))
        worst_div = std::max(worst_div, rem / (1e-10 * norm));
      const auto oracle = laplace2d::cloak_polynomial_hermite_oracle(n, s, 1.0);
      for (int t = 0; t <= p.degree(); ++t)
        worst_oracle =
            std::max(worst_oracle, std::abs(p.coeff(t) - oracle.coeff(t)) / (1e-8 * norm));
    }
  }
  out.pass = const_ok && worst_zero < 1.0 && worst_div < 1.0 && worst_oracle < 1.0;
  std::snprintf(buf, sizeof(buf),
                "all (n,s) with n+s <= 40: constant coeff exact %s, zero-block at %.2e of "
                "tolerance, division residual at %.2e, oracle gap at %.2e",
                const_ok ? "yes" : "NO", worst_zero, worst_div, worst_oracle);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 8
Outcome convergence_region_empirics() {
  Outcome out;
  auto max_p = [](int n) {
    double mx = 0.0;
    for (int q = 0; q < 360; ++q)
      mx = std::max(mx, std::abs(laplace2d::cloak_polynomial_value(
                            n, n, 1.0, cplx(0.65) + std::polar(0.1, 2.0 * kPi * q / 360))));
    return mx;
  };
  auto max_pm1 = [](int n) {
    double mx = 0.0;
    for (int q = 0; q < 360; ++q)
      mx = std::max(mx, std::abs(laplace2d::cloak_polynomial_minus_one_value(
                            n, n, 1.0, std::polar(0.15, 2.0 * kPi * q / 360))));
    return mx;
  };
  bool mono_p = true, mono_pm1 = true;
  double prev_p = 1e300, prev_pm1 = 1e300, last_p = 0.0, last_pm1 = 0.0;
  for (int n = 10; n <= 60; ++n) {
    last_p = max_p(n);
    last_pm1 = max_pm1(n);
    if (last_p >= prev_p) mono_p = false;
    if (last_pm1 >= prev_pm1) mono_pm1 = false;
    prev_p = last_p;
    prev_pm1 = last_pm1;
  }
  const bool below_pm1 = last_pm1 < 1e-3;
  const bool below_p = last_p < 1e-3;
  out.pass = mono_p && mono_pm1 && below_pm1 && below_p;
  std::snprintf(buf, sizeof(buf),
                "monotone |P-1| %s, monotone |P| %s; at n=60: max|P-1| = %.2e (tol 1e-3), "
                "max|P| = %.4f (tol 1e-3; convergence factor at z=0.55 is 4*0.55*0.45 = 0.99, "
                "so this level needs degree ~700)",
                mono_pm1 ? "yes" : "NO", mono_p ? "yes" : "NO", last_pm1, last_p);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 9
Outcome torque_spring_oracle() {
  Outcome out;
  elastica::TorqueSpringSpec spec;  // planar defaults
  const double K = elastica::measure_K(spec);
  const double w_res = std::sqrt(2.0 * K / spec.m);
  const auto net = elastica::build_torque_spring(spec);
  const Vec3 v = spec.v.normalized();

  double worst = 0.0;
  int used = 0;
  for (double omega = 0.25; used < 10 && omega < 5.0; omega += 0.28) {
    if (std::abs(omega - w_res) < 0.15) continue;
    ++used;
    const double kp = elastica::torque_spring_constant(K, spec.m, omega);
    const auto S = elastica::dynamic_condensation(net, omega, net.terminals);
    worst = std::max(worst,
                     elastica::torque_block_residual(S, v, spec.dim, kp) / std::abs(kp));
  }

  elastica::TorqueSpringSpec pinned = spec;
  pinned.m = elastica::kPinnedMass;
  const auto pnet = elastica::build_torque_spring(pinned);
  double worst_pinned = 0.0;
  for (double omega : {0.5, 1.3, 2.6}) {
    const auto S = elastica::dynamic_condensation(pnet, omega, pnet.terminals);
    worst_pinned = std::max(worst_pinned,
                            elastica::torque_block_residual(S, v, spec.dim, K) / K);
  }
  out.pass = used == 10 && worst < 1e-10 && worst_pinned < 1e-10;
  std::snprintf(buf, sizeof(buf),
                "K = %.6f; worst relative residual over %d frequencies %.2e, pinned variant "
                "%.2e (tol 1e-10)",
                K, used, worst, worst_pinned);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 10
Outcome tensor_transformation_checks() {
  Outcome out;
  const int dim = 3;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  elastica::Tensor4 C(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          if (C(i, j, k, l) != 0.0) continue;
          const double v = u(rng);
          C(i, j, k, l) = C(j, i, k, l) = C(i, j, l, k) = C(j, i, l, k) = v;
          C(k, l, i, j) = C(l, k, i, j) = C(k, l, j, i) = C(l, k, j, i) = v;
        }
  const double rho = 1.3, omega = 2.1;

  const auto ident = elastica::transform_material(C, rho, elastica::TransformJet::identity(dim),
                                                  omega);
  double dev_ident = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      dev_ident = std::max(dev_ident, std::abs(ident.rho(i, j) - (i == j ? rho : 0.0)));
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l)
          dev_ident = std::max(dev_ident, std::abs(ident.C(i, j, k, l) - C(i, j, k, l)));
    }

  Eigen::Matrix3d A;
  A << 1.4, 0.3, -0.2, 0.1, 0.9, 0.25, -0.15, 0.2, 1.1;
  const auto bi = elastica::transform_material(
      C, rho, elastica::TransformJet::from(dim, A, Eigen::Matrix3d::Identity(), elastica::Tensor3(dim)),
      omega);
  double dev_a7 = 0.0;
  const double inv_a = 1.0 / A.determinant();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          double want = 0.0;
          for (int p = 0; p < dim; ++p)
            for (int r = 0; r < dim; ++r) want += A(i, p) * A(k, r) * C(p, j, r, l);
          dev_a7 = std::max(dev_a7, std::abs(bi.C(i, j, k, l) - inv_a * want));
          dev_a7 = std::max(dev_a7, std::abs(bi.S(i, j, k)));
        }

  elastica::Tensor3 G(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int p = 0; p < dim; ++p) G(i, j, p) = 0.2 * u(rng);
  const auto ba =
      elastica::transform_material(C, rho, elastica::TransformJet::from(dim, A, A, G), omega);
  double dev_sym = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          dev_sym = std::max(dev_sym, std::abs(ba.C(i, j, k, l) - ba.C(j, i, k, l)));
          dev_sym = std::max(dev_sym, std::abs(ba.C(i, j, k, l) - ba.C(k, l, i, j)));
        }
  dev_sym /= std::max(ba.C.max_abs(), 1e-30);

  Eigen::Matrix3d B = Eigen::Matrix3d::Identity();
  B(0, 1) = 0.15;
  B(1, 0) = -0.1;
  B(2, 2) = 1.2;
  const auto wm =
      elastica::transform_material(C, rho, elastica::TransformJet::from(dim, A, B, G), omega);
  double wresid = 0.0;
  for (unsigned seed = 0; seed < 5; ++seed) {
    const auto f = elastica::random_polynomial_field(dim, 3000 + seed);
    wresid = std::max(wresid,
                      elastica::willis_form_residual(wm, omega, f, Vec3(0.15, -0.25, 0.3)));
  }

  out.pass = dev_ident < 1e-12 && dev_a7 < 1e-12 && dev_sym < 1e-12 && wresid < 1e-6;
  std::snprintf(buf, sizeof(buf),
                "identity dev %.2e, reduced-form dev %.2e (tol 1e-12), symmetry dev %.2e (tol "
                "1e-12), two-form residual %.2e (tol 1e-6)",
                dev_ident, dev_a7, dev_sym, wresid);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------- 11
Outcome soundsoft_self_test() {
  Outcome out;
  const auto ctx = WaveContext::from_wavelength(1.0);
  const double a_s = 4.0 / ctx.k;
  const auto inc = helmholtz3d::incident_plane_wave(Vec3(1, 1, 1).normalized(), ctx);
  auto ambient = [&](const Vec3& x) { return inc.value(x); };

  double best = 1e300;
  int best_m = 0;
  for (int M = 6; M <= 26; M += 2) {
    const helmholtz3d::SoundSoftScatter sc(ambient, a_s, M, ctx);
    double resid = 0.0;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 400; ++rep) {
      Vec3 x(u(rng), u(rng), u(rng));
      if (x.norm() < 1e-9) continue;
      x = a_s * x.normalized();
      resid = std::max(resid, std::abs(ambient(x) + sc.value(x)));
    }
    if (resid < best) {
      best = resid;
      best_m = M;
    }
    if (resid < 1e-8) break;
  }
  out.pass = best < 1e-6;
  std::snprintf(buf, sizeof(buf),
                "boundary residual max|u_tot| = %.2e after convergence at M = %d (tol 1e-6)",
                best, best_m);
  out.detail = buf;
  return out;
}

struct Criterion {
  int id;
  const char* label;
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {1, "tetrahedral geometry closed forms", geometry_closed_forms},
    {2, "addition-theorem oracle and tail decay", addition_theorem},
    {3, "Green's-identity interior/exterior dichotomy", green_dichotomy},
    {4, "multipole equivalence at the heuristic truncation", theorem2_equivalence},
    {5, "paper-scale cloak metrics (delta = 6 lambda)", paper_scale_metrics},
    {6, "sound-soft scatterer suppression", scatterer_suppression},
    {7, "cloaking polynomial identities (n+s <= 40)", polynomial_identities},
    {8, "convergence-region empirics (n = 10..60)", convergence_region_empirics},
    {9, "torque-spring condensation vs closed form", torque_spring_oracle},
    {10, "material tensor transformation checks", tensor_transformation_checks},
    {11, "sound-soft sphere boundary self-test", soundsoft_self_test},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %2d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.label,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
