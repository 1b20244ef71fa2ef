#pragma once

#include "excloak/specfun/sph_harm.hpp"
#include "excloak/types.hpp"
#include "excloak/wave.hpp"

namespace excloak::specfun {

/// Radiating Helmholtz Green's function exp(ik|x-y|)/(4 pi |x-y|).
cplx greens_function(const Vec3& x, const Vec3& y, const WaveContext& ctx);

/// Gradient of the Green's function with respect to y.
Vec3c greens_function_grad_y(const Vec3& x, const Vec3& y, const WaveContext& ctx);

/// Partial sum (degrees n <= N) of the multipole expansion
///   G(x,y) = ik sum_n sum_m V_n^m(x-c) conj(U_n^m(y-c)),
/// valid for |x-c| > |y-c| and converging to greens_function there.
cplx greens_addition_partial(const Vec3& x, const Vec3& y, const Vec3& center, int N,
                             const WaveContext& ctx);

/// Magnitude of the degree-n term of the expansion above; used to measure
/// the geometric decay rate of the series tail.
double greens_addition_term_magnitude(const Vec3& x, const Vec3& y, const Vec3& center,
                                      int n, const WaveContext& ctx);

}  // namespace excloak::specfun
