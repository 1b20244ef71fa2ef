#include <benchmark/benchmark.h>

#include <vector>

#include "excloak/helmholtz3d/layer.hpp"
#include "excloak/helmholtz3d/multipole.hpp"
#include "excloak/laplace2d/cloak.hpp"
#include "excloak/specfun/bessel.hpp"
#include "excloak/specfun/legendre.hpp"

using namespace excloak;

static void BM_BesselArray(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  std::vector<double> out(nmax + 1);
  for (auto _ : state) {
    specfun::spherical_bessel_j_all(nmax, 37.7, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_BesselArray)->Arg(57)->Arg(128)->Arg(256);

static void BM_LegendreTable(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  specfun::LegendreBarTable table(nmax);
  std::vector<double> pbar(table.size());
  for (auto _ : state) {
    table.eval(0.37, std::sqrt(1.0 - 0.37 * 0.37), pbar);
    benchmark::DoNotOptimize(pbar.data());
  }
}
BENCHMARK(BM_LegendreTable)->Arg(57)->Arg(128)->Arg(256);

static void BM_CloakPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto p = laplace2d::cloak_polynomial(n, n, 1.0);
    benchmark::DoNotOptimize(p.coeffs().data());
  }
}
BENCHMARK(BM_CloakPolynomial)->Arg(15)->Arg(30)->Arg(60);

struct DeviceBench {
  WaveContext ctx = WaveContext::from_wavelength(1.0);
  helmholtz3d::TetraCloakGeometry geom = helmholtz3d::make_tetra_cloak(2.0, 6.0, ctx);
  helmholtz3d::Field u_i = helmholtz3d::incident_plane_wave(Vec3(1, 1, 1).normalized(), ctx);
  helmholtz3d::FaceQuadratureSet quads = helmholtz3d::make_face_quadratures(geom, 0.25);
  helmholtz3d::DeviceArray devices =
      helmholtz3d::multipole_coefficients(geom, u_i, 57, quads, ctx);
};

static void BM_DeviceFieldPoint(benchmark::State& state) {
  static DeviceBench bench;
  const helmholtz3d::DeviceFieldEvaluator eval(bench.devices, bench.ctx);
  const Vec3 x(3.1, -2.4, 5.0);
  for (auto _ : state) {
    auto v = eval(x);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DeviceFieldPoint);

static void BM_LayerPotentialPoint(benchmark::State& state) {
  static DeviceBench bench;
  const Vec3 x(3.1, -2.4, 5.0);
  for (auto _ : state) {
    auto v = helmholtz3d::green_device_field(bench.geom, bench.u_i, x, bench.quads, bench.ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_LayerPotentialPoint);

BENCHMARK_MAIN();
