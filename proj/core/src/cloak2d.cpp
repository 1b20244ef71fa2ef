#include "excloak/laplace2d/cloak.hpp"

#include <gmpxx.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "excloak/errors.hpp"

namespace excloak::laplace2d {

CloakGeometry2D::CloakGeometry2D(double a_, double p_, double R_, double delta_)
    : a(a_), p(p_), R(R_), delta(delta_) {
  std::ostringstream bad;
  if (!(a > 0.0)) bad << "a > 0; ";
  if (!(delta > 0.0)) bad << "delta > 0; ";
  if (!(p > a + delta)) bad << "p > a + delta; ";
  if (!(R > a + p)) bad << "R > a + p; ";
  if (!bad.str().empty())
    throw std::domain_error("CloakGeometry2D: violated: " + bad.str());
  const double denom = p * p - a * a;  // > 0 given p > a
  alpha = a / std::abs(denom);
  beta = p / denom;
  if (!(1.0 / R < beta - alpha)) bad << "1/R < beta - alpha; ";
  if (!(beta + alpha < 1.0 / delta)) bad << "beta + alpha < 1/delta; ";
  if (!bad.str().empty())
    throw std::domain_error("CloakGeometry2D: violated: " + bad.str());
}

cplx kelvin_map(cplx z) {
  if (z == cplx(0.0)) throw std::domain_error("kelvin_map: singular at z = 0");
  return 1.0 / z;
}

std::pair<double, double> kelvin_geometry(const CloakGeometry2D& g) {
  return {g.alpha, g.beta};
}

ComplexPolynomial cloak_polynomial(int n, int s, double beta) {
  if (n < 1 || s < 1) throw std::domain_error("cloak_polynomial: need n >= 1, s >= 1");
  if (!(beta > 0.0)) throw std::domain_error("cloak_polynomial: need beta > 0");
  if (n + s - 1 > ComplexPolynomial::kMaxDegree)
    throw std::domain_error("cloak_polynomial: degree above configured maximum");

  // Exact integer expansion in u = z/beta.
  std::vector<mpz_class> acc(n + s, 0);
  std::vector<mpz_class> pow1mu(s + 1);  // signed coefficients of (1-u)^s
  mpz_class bin = 1;
  for (int t = 0; t <= s; ++t) {
    pow1mu[t] = (t % 2 == 0) ? bin : -bin;
    if (t < s) {
      bin *= (s - t);
      bin /= (t + 1);
    }
  }
  mpz_class cj = 1;  // C(s+j-1, j)
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t <= s; ++t) acc[j + t] += cj * pow1mu[t];
    cj *= (s + j);
    cj /= (j + 1);
  }

  std::vector<cplx> coeffs(n + s);
  double beta_pow = 1.0;
  for (int t = 0; t < n + s; ++t) {
    const double v = acc[t].get_d();
    if (std::isinf(v))
      throw numeric_error("cloak_polynomial: coefficient exceeds double range");
    coeffs[t] = v / beta_pow;
    beta_pow *= beta;
    if (std::isinf(beta_pow) || beta_pow == 0.0)
      throw numeric_error("cloak_polynomial: beta power exceeds double range");
  }
  return ComplexPolynomial(std::move(coeffs));
}

ComplexPolynomial cloak_polynomial_hermite_oracle(int n, int s, double beta) {
  if (n < 1 || s < 1) throw std::domain_error("hermite oracle: need n >= 1, s >= 1");
  if (!(beta > 0.0)) throw std::domain_error("hermite oracle: need beta > 0");
  if (n + s > 60) throw numeric_error("hermite oracle: n + s > 60 is too ill-conditioned");

  // Hermite interpolation by confluent divided differences: node 0 with
  // multiplicity n (value 1, derivatives 0) and node beta with multiplicity
  // s (value and derivatives 0). Newton coefficients a_j = f[x_0..x_j].
  const int d = n + s - 1;
  std::vector<double> node(d + 1);
  for (int i = 0; i < n; ++i) node[i] = 0.0;
  for (int i = n; i <= d; ++i) node[i] = beta;

  // dd starts as f[x_i..x_i+len]; confluent entries use the scaled
  // derivative data f^(k)/k!, which is delta_{k0} at 0 and 0 at beta.
  std::vector<std::vector<double>> dd(d + 1, std::vector<double>(d + 1, 0.0));
  for (int i = 0; i <= d; ++i) dd[i][i] = (node[i] == 0.0) ? 1.0 : 0.0;
  for (int len = 1; len <= d; ++len) {
    for (int i = 0; i + len <= d; ++i) {
      const int j = i + len;
      if (node[i] == node[j]) {
        dd[i][j] = 0.0;  // f^(len)/len! vanishes at both nodes for len >= 1
      } else {
        dd[i][j] = (dd[i + 1][j] - dd[i][j - 1]) / (node[j] - node[i]);
      }
    }
  }

  // Expand the Newton form sum_j a_j prod_{q<j} (z - x_q) to monomials.
  std::vector<cplx> coeffs(1, cplx(dd[0][d]));
  for (int q = d - 1; q >= 0; --q) {
    std::vector<cplx> next(coeffs.size() + 1, cplx(0.0));
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      next[t + 1] += coeffs[t];
      next[t] -= node[q] * coeffs[t];
    }
    next[0] += dd[0][q];
    coeffs = std::move(next);
  }
  return ComplexPolynomial(std::move(coeffs));
}

cplx cloak_polynomial_value(int n, int s, double beta, cplx z) {
  if (n < 1 || s < 1) throw std::domain_error("cloak_polynomial_value: need n, s >= 1");
  if (!(beta > 0.0)) throw std::domain_error("cloak_polynomial_value: need beta > 0");
  const cplx u = z / beta;
  // The truncated binomial series has positive coefficients, so Horner here
  // is well-conditioned; the (1-u)^s factor carries the cancellation exactly.
  cplx sum = 0.0;
  std::vector<double> c(n);
  c[0] = 1.0;
  for (int j = 1; j < n; ++j) c[j] = c[j - 1] * (s + j - 1.0) / j;
  for (int j = n - 1; j >= 0; --j) sum = sum * u + c[j];
  return std::pow(1.0 - u, static_cast<double>(s)) * sum;
}

cplx cloak_polynomial_minus_one_value(int n, int s, double beta, cplx z) {
  // Exact tail coefficients (degrees n..n+s-1) of P - 1; near the origin the
  // terms decay geometrically so Horner is stable where this is needed.
  const ComplexPolynomial p = cloak_polynomial(n, s, beta);
  cplx v = 0.0;
  for (int t = n + s - 1; t >= n; --t) v = v * z + p.coeff(t);
  for (int t = 0; t < n; ++t) v = v * z;  // the zero block, keeps degrees aligned
  return v;
}

RegionQuery in_convergence_region(cplx z, double beta, double L) {
  if (!(beta > 0.0) || !(L > 0.0))
    throw std::domain_error("in_convergence_region: need beta > 0, L > 0");
  const double bound = std::pow(beta, L + 1.0) * std::pow(L, L) / std::pow(L + 1.0, L + 1.0);
  auto value = [&](cplx w) { return std::pow(std::abs(w - beta), L) * std::abs(w); };
  if (!(value(z) < bound)) return {false, RegionLabel::outside};

  // Label by path connectivity: walk a straight segment toward 0 and toward
  // beta; the lobes are starlike about those two points in practice, and the
  // pinch at beta/(L+1) breaks ties.
  auto segment_inside = [&](cplx target) {
    const int steps = 256;
    for (int i = 1; i <= steps; ++i) {
      const cplx w = z + (target - z) * (static_cast<double>(i) / steps);
      if (!(value(w) < bound) && std::abs(w - target) > 1e-15) return false;
    }
    return true;
  };
  if (segment_inside(cplx(0.0))) return {true, RegionLabel::origin_side};
  if (segment_inside(cplx(beta))) return {true, RegionLabel::cstar_side};
  return {true, z.real() < beta / (L + 1.0) ? RegionLabel::origin_side
                                            : RegionLabel::cstar_side};
}

double device_field(const ComplexPolynomial& Q0, const ComplexPolynomial& P, cplx z_physical) {
  const cplx w = kelvin_map(z_physical);
  const cplx pm1 = P.eval(w) - 1.0;
  return (Q0.eval(w) * pm1).real();
}

double illusion_field(const ComplexPolynomial& Q0, const ComplexPolynomial& Q1,
                      const ComplexPolynomial& P, cplx z_physical) {
  const cplx w = kelvin_map(z_physical);
  const cplx pw = P.eval(w);
  return (Q1.eval(w) * pw + Q0.eval(w) * (pw - 1.0)).real();
}

ProbeApproximant probe_approximant(const std::function<cplx(cplx)>& f, cplx center,
                                   double radius, int degree, double contour_radius) {
  if (!(radius > 0.0)) throw std::domain_error("probe_approximant: need radius > 0");
  if (degree < 0) throw std::domain_error("probe_approximant: need degree >= 0");
  const double rho = contour_radius > 0.0 ? contour_radius : 1.5 * radius;
  if (!(rho > radius))
    throw std::domain_error("probe_approximant: contour radius must exceed radius");

  const int M = std::max(256, 8 * (degree + 1));
  std::vector<cplx> samples(M);
  for (int q = 0; q < M; ++q)
    samples[q] = f(center + std::polar(rho, 2.0 * kPi * q / M));

  std::vector<cplx> coeffs(degree + 1);
  for (int j = 0; j <= degree; ++j) {
    cplx sum = 0.0;
    for (int q = 0; q < M; ++q)
      sum += samples[q] * std::polar(1.0, -2.0 * kPi * j * q / M);
    coeffs[j] = sum / (static_cast<double>(M) * std::pow(rho, j));
  }

  // Analyticity check: the scaled coefficients |a_j| rho^j of an analytic
  // input decay along the tail; a singularity inside the contour keeps them
  // flat or growing. Compare the last quarter against the middle half (the
  // head can legitimately be near zero when the target field is nulled).
  if (degree >= 8) {
    double gmax = 0.0, mid = 0.0, tail = 0.0;
    for (int j = 0; j <= degree; ++j) {
      const double s = std::abs(coeffs[j]) * std::pow(rho, j);
      gmax = std::max(gmax, s);
      if (j >= degree / 4 && j < (3 * degree) / 4) mid = std::max(mid, s);
      if (j >= (3 * degree) / 4) tail = std::max(tail, s);
    }
    if (tail > 1e-12 * gmax && tail > 0.8 * mid)
      throw numeric_error("probe_approximant: coefficients do not decay (non-analytic input)");
  }

  // Rebase sum_j a_j (w - c)^j onto plain powers of w, so the result
  // composes directly with the cloaking polynomial.
  std::vector<cplx> abs_coeffs(degree + 1, cplx(0.0));
  std::vector<cplx> pw{cplx(1.0)};
  for (int j = 0; j <= degree; ++j) {
    for (int t = 0; t <= j; ++t) abs_coeffs[t] += coeffs[j] * pw[t];
    std::vector<cplx> next(pw.size() + 1, cplx(0.0));
    for (std::size_t t = 0; t < pw.size(); ++t) {
      next[t + 1] += pw[t];
      next[t] -= center * pw[t];
    }
    pw = std::move(next);
  }

  ComplexPolynomial poly{std::move(abs_coeffs)};
  // Residual from the centered form, which stays well-conditioned at high
  // degree (the rebased coefficients grow like 2^degree).
  double resid = 0.0;
  const int S = 256;
  for (int q = 0; q < S; ++q) {
    const cplx d = std::polar(radius, 2.0 * kPi * q / S);
    cplx val = 0.0;
    for (int j = degree; j >= 0; --j) val = val * d + coeffs[j];
    resid = std::max(resid, std::abs(f(center + d) - val));
  }
  return {std::move(poly), std::move(coeffs), resid};
}

}  // namespace excloak::laplace2d
