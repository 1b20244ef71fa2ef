#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "excloak/errors.hpp"
#include "excloak/helmholtz3d/fields.hpp"
#include "excloak/helmholtz3d/geometry.hpp"
#include "excloak/helmholtz3d/layer.hpp"
#include "excloak/helmholtz3d/metrics.hpp"
#include "excloak/helmholtz3d/multipole.hpp"
#include "excloak/helmholtz3d/quadrature.hpp"
#include "excloak/helmholtz3d/slices.hpp"
#include "excloak/helmholtz3d/soundsoft.hpp"
#include "excloak/specfun/greens.hpp"

using namespace excloak;
using namespace excloak::helmholtz3d;

namespace {

const WaveContext kCtx = WaveContext::from_wavelength(1.0);
const Vec3 kIncDir = Vec3(1.0, 1.0, 1.0).normalized();

struct SmallCloak {
  TetraCloakGeometry geom;
  Field u_i;
  FaceQuadratureSet quads;
  int N;
};

SmallCloak make_small_cloak(double spacing_wavelengths = 1.0 / 8.0) {
  SmallCloak s{make_tetra_cloak(0.5 * kCtx.lambda, 1.5 * kCtx.lambda, kCtx),
               incident_plane_wave(kIncDir, kCtx),
               {},
               0};
  s.quads = make_face_quadratures(s.geom, spacing_wavelengths * kCtx.lambda);
  s.N = truncation_order(s.geom.delta, kCtx);
  return s;
}

}  // namespace

TEST_CASE("tetra geometry closed forms") {
  const WaveContext ctx = WaveContext::from_wavelength(1.0);
  const TetraCloakGeometry g = make_tetra_cloak(1.0, 3.0, ctx);
  CHECK(g.ball_radius == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(g.r_eff == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(g.optimal);
  CHECK(r_eff_star(3.0) / 3.0 == doctest::Approx(1.0 - 2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-15));

  for (int l = 0; l < 4; ++l) {
    CHECK(g.vertices[l].norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(g.devices[l].norm() == doctest::Approx(3.0).epsilon(1e-14));
    for (int j = 0; j < 4; ++j)
      if (j != l)
        CHECK((g.devices[l] - g.vertices[j]).norm() ==
              doctest::Approx(g.ball_radius).epsilon(1e-13));
  }
  // Devices sit opposite their face, along -a_l.
  for (int l = 0; l < 4; ++l)
    CHECK((g.devices[l] + 3.0 * g.vertices[l]).norm() < 1e-13);

  CHECK_THROWS_AS(make_tetra_cloak(2.0, 1.0, ctx), std::domain_error);

  // Non-optimal case keeps delta > r guarantees only when r < delta.
  const TetraCloakGeometry sub = make_tetra_cloak(3.0 / 5.0, 3.0, ctx);
  CHECK_FALSE(sub.optimal);
  CHECK(sub.r_eff < g.r_eff);
}

TEST_CASE("region A membership and vertex tangency") {
  const TetraCloakGeometry g = make_tetra_cloak(1.0, 3.0, kCtx);
  for (int l = 0; l < 4; ++l) CHECK(region_A_contains(g, g.devices[l]));
  CHECK_FALSE(region_A_contains(g, Vec3::Zero()));  // r_eff > 0 at the optimum
  // Every vertex lies on the boundary of the three balls facing it.
  for (int j = 0; j < 4; ++j) {
    CHECK(region_A_contains(g, g.vertices[j]));
    int touching = 0;
    for (int l = 0; l < 4; ++l)
      if (l != j &&
          std::abs((g.vertices[j] - g.devices[l]).norm() - g.ball_radius) < 1e-12 * g.ball_radius)
        ++touching;
    CHECK(touching == 3);
  }
}

TEST_CASE("truncation order heuristic") {
  const WaveContext ctx = WaveContext::from_wavelength(1.0);
  CHECK(truncation_order(6.0, ctx) == 57);  // ceil(1.5 * 2 pi * 6)
  CHECK(truncation_order(1.0 / (3.0 * kPi), ctx) == 1);
  int prev = 0;
  for (double d = 0.2; d < 8.0; d += 0.13) {
    const int n = truncation_order(d, ctx);
    CHECK(n >= prev);
    prev = n;
  }
  CHECK_THROWS_AS(truncation_order(40.0, ctx), numeric_error);
}

TEST_CASE("plane wave: value, modulus, helmholtz residual, rejection") {
  const Field f = incident_plane_wave(kIncDir, kCtx);
  CHECK(std::abs(f.value(Vec3::Zero()) - cplx(1.0)) < 1e-15);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double k2 = kCtx.k * kCtx.k;
  for (int rep = 0; rep < 20; ++rep) {
    const Vec3 x(u(rng), u(rng), u(rng));
    CHECK(std::abs(f.value(x)) == doctest::Approx(1.0).epsilon(1e-14));
    // FD Laplacian + k^2 u ~ 0.
    const double h = 1e-4;
    cplx lap = -6.0 * f.value(x);
    for (int c = 0; c < 3; ++c) {
      Vec3 xp = x, xm = x;
      xp(c) += h;
      xm(c) -= h;
      lap += f.value(xp) + f.value(xm);
    }
    lap /= h * h;
    CHECK(std::abs(lap + k2 * f.value(x)) < 1e-6 * k2);
    // Gradient is i k khat u.
    const Vec3c g = f.gradient(x);
    CHECK((g - cplx(0, kCtx.k) * f.value(x) * kIncDir.cast<cplx>()).norm() < 1e-13 * kCtx.k);
  }
  CHECK_THROWS_AS(incident_plane_wave(Vec3(1.0, 1.0, 0.0), kCtx), std::domain_error);
}

TEST_CASE("face quadrature: weights, affine exactness, spacing") {
  const std::array<Vec3, 3> tri = {Vec3(0, 0, 0), Vec3(2, 0, 0), Vec3(0, 3, 1)};
  const FaceQuadrature fq = FaceQuadrature::build(tri, Vec3(0, 0, -5), 0.21);
  double wsum = 0.0;
  for (double w : fq.weights) wsum += w;
  CHECK(wsum == doctest::Approx(fq.area).epsilon(1e-13));
  CHECK(fq.node_spacing <= 0.21);
  CHECK(fq.normal.dot(Vec3(0, 0, -5) - tri[0]) < 0.0);

  // Affine integrand: exact value area * f(centroid).
  const Vec3 centroid = (tri[0] + tri[1] + tri[2]) / 3.0;
  auto f = [](const Vec3& y) { return 0.7 * y(0) - 1.3 * y(1) + 0.4 * y(2) + 2.0; };
  double got = 0.0;
  for (std::size_t q = 0; q < fq.nodes.size(); ++q) got += fq.weights[q] * f(fq.nodes[q]);
  CHECK(got == doctest::Approx(fq.area * f(centroid)).epsilon(1e-13));
}

TEST_CASE("sphere quadrature: measure and harmonic orthogonality") {
  const SphereQuadrature sq = SphereQuadrature::build(2.0, 12, 24);
  double wsum = 0.0;
  for (double w : sq.weights) wsum += w;
  CHECK(wsum == doctest::Approx(4.0 * kPi * 4.0).epsilon(1e-12));
  // int |Y_3^2|^2 over the unit sphere = 1 (scaled by r^2 on radius 2).
  cplx acc = 0.0;
  for (std::size_t q = 0; q < sq.nodes.size(); ++q) {
    const auto dir = specfun::UnitDirection::from_vector(sq.nodes[q]);
    const cplx y = specfun::sph_harm(specfun::ModeIndex(3, 2), dir);
    acc += sq.weights[q] / 4.0 * (y * std::conj(y));
  }
  CHECK(acc.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(acc.imag()) < 1e-14);
}

TEST_CASE("green device field: interior reproduction, exterior annihilation, order") {
  const SmallCloak s = make_small_cloak(1.0 / 16.0);
  bool warn = false;

  // Deep interior probes reproduce -u_i.
  for (const Vec3& x : {Vec3(0.05, 0.02, -0.04), Vec3(-0.1, 0.06, 0.03)}) {
    const cplx ud = green_device_field(s.geom, s.u_i, x, s.quads, kCtx, &warn);
    CHECK_FALSE(warn);
    CHECK(std::abs(ud + s.u_i.value(x)) < 1e-2);
  }
  // Exterior probes nearly vanish.
  for (const Vec3& x : {Vec3(3.0, 1.0, 0.5), Vec3(-2.5, 2.0, -1.5), Vec3(0.0, 0.0, 4.0)}) {
    CHECK(std::abs(green_device_field(s.geom, s.u_i, x, s.quads, kCtx)) < 1e-2);
  }

  // Richardson: refinement order >= 2 on an interior probe.
  const Vec3 probe(0.04, -0.03, 0.05);
  const cplx want = -s.u_i.value(probe);
  std::array<double, 3> err{};
  int idx = 0;
  for (double frac : {1.0 / 4.0, 1.0 / 8.0, 1.0 / 16.0}) {
    const auto quads = make_face_quadratures(s.geom, frac * kCtx.lambda);
    err[idx++] = std::abs(green_device_field(s.geom, s.u_i, probe, quads, kCtx) - want);
  }
  const double order = std::log2(err[0] / err[2]) / 2.0;
  CHECK(order >= 2.0);

  // Near-surface warning fires close to a face.
  const Vec3 near_face = 0.999 * (s.geom.vertices[0] + s.geom.vertices[1] + s.geom.vertices[2]) / 3.0;
  green_device_field(s.geom, s.u_i, near_face, s.quads, kCtx, &warn);
  CHECK(warn);
}

TEST_CASE("multipole coefficients: zero field, oracle match outside region A") {
  const SmallCloak s = make_small_cloak(1.0 / 32.0);

  Field zero;
  zero.value = [](const Vec3&) { return cplx(0.0); };
  zero.gradient = [](const Vec3&) { return Vec3c::Zero(); };
  const DeviceArray da0 = multipole_coefficients(s.geom, zero, 4, s.quads, kCtx);
  for (const auto& dev : da0.coeffs)
    for (const auto& b : dev) CHECK(std::abs(b) == 0.0);

  // At moderate truncation the match is limited by the series tail near
  // region A; once N clears k*r by a margin the two routes agree to 1e-6
  // and better everywhere outside A.
  const DeviceArray da = multipole_coefficients(s.geom, s.u_i, s.N, s.quads, kCtx);
  const DeviceArray da_hi = multipole_coefficients(s.geom, s.u_i, 35, s.quads, kCtx);
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int tested = 0;
  while (tested < 12) {
    Vec3 x(u(rng), u(rng), u(rng));
    x *= 6.0;
    if (x.norm() < 2.0 || region_A_contains(s.geom, x)) continue;
    ++tested;
    const cplx direct = green_device_field(s.geom, s.u_i, x, s.quads, kCtx);
    const double scale = std::max(1.0, std::abs(direct));
    CHECK(std::abs(device_field(da, x, kCtx) - direct) < 1e-3 * scale);
    CHECK(std::abs(device_field(da_hi, x, kCtx) - direct) < 1e-6 * scale);
  }

  // Per-degree tail decays geometrically with mean ratio ~ face radius /
  // device distance (individual degrees fluctuate with the m-sum phases).
  const Vec3 far_probe(5.5, 1.0, -0.7);
  const auto mags = device_field_degree_magnitudes(da_hi, far_probe, kCtx);
  const int n_hi = 34, n_lo = 26;
  const double mean_ratio = std::pow(mags[n_hi] / mags[n_lo], 1.0 / (n_hi - n_lo));
  double bound = 0.0;
  for (int l = 0; l < 4; ++l)
    bound = std::max(bound, s.geom.ball_radius / (far_probe - s.geom.devices[l]).norm());
  CHECK(mean_ratio <= bound + 0.05);
}

TEST_CASE("device field: empty coefficients and blow up near devices") {
  const SmallCloak s = make_small_cloak();
  DeviceArray empty;
  empty.N = 3;
  empty.points = {s.geom.devices[0], s.geom.devices[1]};
  empty.coeffs.assign(2, std::vector<cplx>(specfun::mode_count(3), cplx(0.0)));
  CHECK(std::abs(device_field(empty, Vec3(1.0, 2.0, 3.0), kCtx)) == 0.0);

  const DeviceArray da = multipole_coefficients(s.geom, s.u_i, s.N, s.quads, kCtx);
  const Vec3 toward = (Vec3(0.3, 0.2, 0.1) - s.geom.devices[0]).normalized();
  double prev = 0.0;
  bool growing = true;
  for (double dist : {1.0, 0.5, 0.25, 0.125}) {
    const double mag = std::abs(device_field(da, s.geom.devices[0] + dist * toward, kCtx));
    if (mag <= prev) growing = false;
    prev = mag;
  }
  CHECK(growing);
  CHECK(prev > 1e3);  // deep blow-up near the device point
  CHECK_THROWS_AS(device_field(da, s.geom.devices[0], kCtx), std::domain_error);
}

TEST_CASE("sound-soft sphere: trivial, plane-wave boundary residual, decay") {
  auto zero_amb = [](const Vec3&) { return cplx(0.0); };
  const SoundSoftScatter triv(zero_amb, 1.0, 6, kCtx);
  CHECK(std::abs(triv.value(Vec3(2.0, 0.0, 0.0))) == 0.0);

  // Plane wave at k a_s = 4.
  const double a_s = 4.0 / kCtx.k;
  const Field inc = incident_plane_wave(kIncDir, kCtx);
  auto amb = [&](const Vec3& x) { return inc.value(x); };
  const SoundSoftScatter sc(amb, a_s, 16, kCtx);
  double resid = 0.0;
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 200; ++rep) {
    Vec3 x(u(rng), u(rng), u(rng));
    x = a_s * x.normalized();
    resid = std::max(resid, std::abs(amb(x) + sc.value(x)));
  }
  CHECK(resid < 1e-6);

  // Outgoing 1/r decay along a ray.
  const Vec3 ray = Vec3(0.3, -0.5, 0.81).normalized();
  const double m1 = std::abs(sc.value(10.0 * a_s * ray));
  const double m2 = std::abs(sc.value(20.0 * a_s * ray));
  CHECK(m2 / m1 == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("green exterior field: point source oracle") {
  const SmallCloak s = make_small_cloak(1.0 / 16.0);
  const Vec3 y0(0.08, -0.05, 0.04);  // inside D
  Field src;
  src.value = [&](const Vec3& y) { return specfun::greens_function(y, y0, kCtx); };
  src.gradient = [&](const Vec3& y) { return specfun::greens_function_grad_y(y0, y, kCtx); };

  Field zero;
  zero.value = [](const Vec3&) { return cplx(0.0); };
  zero.gradient = [](const Vec3&) { return Vec3c::Zero(); };

  for (const Vec3& x : {Vec3(2.5, 0.7, -0.9), Vec3(-1.8, 2.2, 1.0)}) {
    const cplx got = green_exterior_field(s.geom, src, x, s.quads, kCtx);
    const cplx want = -specfun::greens_function(x, y0, kCtx);
    CHECK(std::abs(got - want) < 1e-3 * std::max(std::abs(want), 1e-3));
    CHECK(std::abs(green_exterior_field(s.geom, zero, x, s.quads, kCtx)) == 0.0);
  }
  for (const Vec3& x : {Vec3(0.12, 0.03, -0.02), Vec3(-0.06, 0.09, 0.05)}) {
    if ((x - y0).norm() < 0.05) continue;
    CHECK(std::abs(green_exterior_field(s.geom, src, x, s.quads, kCtx)) < 1e-3);
  }
}

TEST_CASE("cloak metrics: zero incident flag and improvement with N") {
  const SmallCloak s = make_small_cloak(1.0 / 16.0);
  Field zero;
  zero.value = [](const Vec3&) { return cplx(0.0); };
  zero.gradient = [](const Vec3&) { return Vec3c::Zero(); };
  const DeviceArray da0 = multipole_coefficients(s.geom, zero, 2, s.quads, kCtx);
  const CloakMetrics m0 = cloak_metrics(da0, zero, s.geom, kCtx);
  CHECK(m0.zero_incident);
  CHECK(m0.interior_residual == 0.0);
  CHECK(m0.exterior_leakage == 0.0);

  const DeviceArray low = multipole_coefficients(s.geom, s.u_i, s.N / 3, s.quads, kCtx);
  const DeviceArray full = multipole_coefficients(s.geom, s.u_i, s.N, s.quads, kCtx);
  const CloakMetrics ml = cloak_metrics(low, s.u_i, s.geom, kCtx);
  const CloakMetrics mf = cloak_metrics(full, s.u_i, s.geom, kCtx);
  CHECK(mf.interior_residual < ml.interior_residual);
  CHECK(mf.interior_residual < 0.05);
  CHECK(mf.exterior_leakage < 0.05);
}

TEST_CASE("extended device analysis: level to infinity opens everything") {
  const SmallCloak s = make_small_cloak();
  const DeviceArray da = multipole_coefficients(s.geom, s.u_i, s.N, s.quads, kCtx);
  const ExtendedDeviceAnalysis open =
      extended_device_analysis(da, 1e12, s.geom, kCtx, 64, 64);
  CHECK(open.open_area_percent == doctest::Approx(100.0));
  const ExtendedDeviceAnalysis some = extended_device_analysis(da, 5.0, s.geom, kCtx, 64, 64);
  CHECK(some.open_area_percent <= 100.0);
  CHECK(some.sphere_mask.size() == 64u * 32u);
  CHECK(some.mollweide_mask.size() == 64u * 32u);
}

TEST_CASE("slice field: constants, plane wave, exports") {
  auto constant = [](const Vec3&) { return cplx(2.0, -1.0); };
  const FieldSlice cs = slice_field(constant, 0.3, 1.0, 8);
  for (const auto& v : cs.values) CHECK(std::abs(v - cplx(2.0, -1.0)) == 0.0);

  const Field pw = incident_plane_wave(kIncDir, kCtx);
  const FieldSlice ps = slice_field([&](const Vec3& x) { return pw.value(x); }, -0.4, 2.0, 9);
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 9; ++i) {
      const Vec3 x(ps.x_at(i), ps.y_at(j), -0.4);
      CHECK(std::abs(ps.values[j * 9 + i] - pw.value(x)) < 1e-15);
    }
  CHECK_THROWS_AS(slice_field(constant, 0.0, 1.0, 1), std::domain_error);

  const std::string csv = "slice_test.csv", pgm = "slice_test.pgm";
  write_slice_csv(csv, ps);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,y,z,re_u,im_u");
  write_slice_pgm(pgm, ps, -1.0, 1.0);
  std::ifstream pin(pgm, std::ios::binary);
  std::string magic;
  pin >> magic;
  CHECK(magic == "P5");
  std::remove(csv.c_str());
  std::remove(pgm.c_str());
}
