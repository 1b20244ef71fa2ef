#pragma once

#include <functional>
#include <string>

#include "excloak/laplace2d/polynomial.hpp"
#include "excloak/types.hpp"

namespace excloak::laplace2d {

/// Geometry of the 2-D exterior cloak: cloaked disk B((p,0), a), device
/// inside B(0, delta), far-field radius R. The Kelvin transform maps the
/// cloaked disk to B((beta,0), alpha).
struct CloakGeometry2D {
  double a;      // cloaked-disk radius
  double p;      // cloaked-disk center abscissa
  double R;      // far-field radius
  double delta;  // device radius
  double alpha;  // derived: a / |p^2 - a^2|
  double beta;   // derived: p / (p^2 - a^2)

  CloakGeometry2D(double a, double p, double R, double delta);
};

/// Inversion w = 1/z. Involutive; singular at z = 0.
cplx kelvin_map(cplx z);

/// Derived (alpha, beta) of the Kelvin-transformed cloaked disk, with full
/// validation of the geometric requirements.
std::pair<double, double> kelvin_geometry(const CloakGeometry2D& g);

/// The cloaking polynomial
///   P_{n,s}(z) = (1 - z/beta)^s sum_{j=0}^{n-1} (z/beta)^j C(s+j-1, j),
/// of degree n+s-1, expanded with exact integer arithmetic so that the
/// constant coefficient is exactly 1 and coefficients 1..n-1 are exactly 0.
/// Throws numeric_error if a coefficient exceeds double range.
ComplexPolynomial cloak_polynomial(int n, int s, double beta);

/// Same polynomial from its Hermite interpolation conditions
///   P(0)=1, P^(k)(0)=0 (k=1..n-1), P^(k)(beta)=0 (k=0..s-1),
/// solved as a linear system. Oracle-grade: restricted to n+s <= 60.
ComplexPolynomial cloak_polynomial_hermite_oracle(int n, int s, double beta);

/// Numerically stable point evaluation of P_{n,s} in factored form; use
/// this instead of coefficient Horner when n+s is large (the monomial
/// coefficients reach 1e30+ and cancel catastrophically near z = beta).
cplx cloak_polynomial_value(int n, int s, double beta, cplx z);
/// Stable evaluation of P_{n,s}(z) - 1 (exact zero coefficients up to n-1).
cplx cloak_polynomial_minus_one_value(int n, int s, double beta, cplx z);

enum class RegionLabel { origin_side, cstar_side, outside };

struct RegionQuery {
  bool inside;
  RegionLabel label;
};

/// Membership test for D_{beta,L} = { |z-beta|^L |z| < beta^{L+1} L^L/(L+1)^{L+1} }
/// with connected-component labeling. The two lobes meet the real axis in
/// disjoint intervals separated by the pinch point z = beta/(L+1).
RegionQuery in_convergence_region(cplx z, double beta, double L);

/// Device potential u(z) = Re[(Q0 P - Q0)(1/z)] at a physical point z != 0.
double device_field(const ComplexPolynomial& Q0, const ComplexPolynomial& P, cplx z_physical);

/// Illusion variant u(z) = Re[(Q1 P + Q0 (P - 1))(1/z)]: matches the
/// illusion response outside B(0,R) while still nulling the probe in the
/// cloaked region.
double illusion_field(const ComplexPolynomial& Q0, const ComplexPolynomial& Q1,
                      const ComplexPolynomial& P, cplx z_physical);

struct ProbeApproximant {
  ComplexPolynomial poly;      // in the plain variable, composes with P_{n,s}
  std::vector<cplx> centered;  // raw Taylor coefficients about the center
  double residual;             // sup |f - poly| on the circle of radius `radius`
};

/// Degree-d Taylor approximation of an analytic function about `center`,
/// computed by trapezoid contour quadrature on |w - center| = contour_radius
/// (default radius * 1.5) and returned as a polynomial in the plain
/// variable (not in w - center), ready to combine with the cloaking
/// polynomial. Throws numeric_error when the coefficient tail does not
/// decay (function not analytic on the contour disk).
ProbeApproximant probe_approximant(const std::function<cplx(cplx)>& f, cplx center,
                                   double radius, int degree, double contour_radius = 0.0);

}  // namespace excloak::laplace2d
