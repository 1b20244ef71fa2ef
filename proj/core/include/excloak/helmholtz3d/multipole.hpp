#pragma once

#include <vector>

#include "excloak/helmholtz3d/layer.hpp"
#include "excloak/specfun/legendre.hpp"

namespace excloak::helmholtz3d {

/// Multipolar devices: point x_l emitting sum_{n<=N} sum_m b_{l,n,m} V_n^m(x-x_l),
/// with V_n^m = h_n^(1)(k|.|) Y_n^m. Coefficients are stored packed by
/// specfun::mode_index.
struct DeviceArray {
  std::vector<Vec3> points;
  int N = 0;
  std::vector<std::vector<cplx>> coeffs;  // [device][mode_index(n,m)]
};

/// Device coefficients from the Green's-formula layer densities:
///   b_{l,n,m} = ik int_{dD_l} [ (-n.grad u_i) conj(U_n^m(y-x_l))
///                              + u_i n.grad_y conj(U_n^m(y-x_l)) ] dS_y.
/// Face l is the one opposite vertex a_l, served by device x_l.
DeviceArray multipole_coefficients(const TetraCloakGeometry& geom, const Field& u_i, int N,
                                   const FaceQuadratureSet& quads, const WaveContext& ctx);

/// Sum of all device waves at x. Throws for x at a device point.
cplx device_field(const DeviceArray& devices, const Vec3& x, const WaveContext& ctx);

/// Partial sums by degree: out[n] = contribution of degree n (all devices).
/// Used to measure the geometric tail decay of the expansion.
std::vector<double> device_field_degree_magnitudes(const DeviceArray& devices, const Vec3& x,
                                                   const WaveContext& ctx);

/// Reusable evaluator holding the Legendre table; cheaper than device_field
/// in tight loops and safe to share across threads.
class DeviceFieldEvaluator {
 public:
  DeviceFieldEvaluator(const DeviceArray& devices, const WaveContext& ctx);
  cplx operator()(const Vec3& x) const;

 private:
  const DeviceArray& devices_;
  WaveContext ctx_;
  specfun::LegendreBarTable table_;
};

}  // namespace excloak::helmholtz3d
