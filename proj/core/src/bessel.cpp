#include "excloak/specfun/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "excloak/errors.hpp"

namespace excloak::specfun {

namespace {

void check_args(int n, double t) {
  if (n < 0) throw std::domain_error("spherical bessel: order must be >= 0");
  if (!(t > 0.0)) throw std::domain_error("spherical bessel: argument must be > 0");
}

double j0(double t) { return std::sin(t) / t; }

double j1(double t) {
  // The closed form cancels catastrophically below ~1e-4; switch to the
  // series t/3 - t^3/30 + t^5/840.
  if (t < 1e-4) return t / 3.0 * (1.0 - t * t / 10.0 * (1.0 - t * t / 28.0));
  return (std::sin(t) / t - std::cos(t)) / t;
}

// Continued fraction for the ratio j_n(t)/j_{n-1}(t) by modified Lentz.
// From the three-term recurrence: 1/r_n = (2n+1)/t - r_{n+1}.
double ratio_cf(int n, double t) {
  const double tiny = 1e-300;
  double f = tiny, C = f, D = 0.0;
  for (int i = 0; i < 20000; ++i) {
    double b = (2.0 * (n + i) + 1.0) / t;
    double a = (i == 0) ? 1.0 : -1.0;
    D = b + a * D;
    if (D == 0.0) D = tiny;
    C = b + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-15) return f;
  }
  throw numeric_error("spherical_bessel_j: continued fraction did not converge");
}

// Downward recurrence from order nmax with the CF ratio as exact seed,
// storing all orders, then normalizing against j_0 or j_1 (whichever is
// larger in magnitude, so the normalization never divides by a zero of sin).
void j_downward(int nmax, double t, std::span<double> out) {
  const double r = ratio_cf(nmax, t);  // j_nmax / j_{nmax-1}
  double fn = 1.0, fnm1 = 1.0 / r;
  out[nmax] = fn;
  if (nmax >= 1) out[nmax - 1] = fnm1;
  for (int m = nmax - 1; m >= 1; --m) {
    double fm1 = (2.0 * m + 1.0) / t * fnm1 - fn;
    fn = fnm1;
    fnm1 = fm1;
    out[m - 1] = fm1;
    if (std::abs(fm1) > 1e250) {
      for (int q = m - 1; q <= nmax; ++q) out[q] *= 1e-250;
      fn *= 1e-250;
      fnm1 *= 1e-250;
    }
  }
  const double a0 = j0(t), a1 = j1(t);
  double scale;
  if (std::abs(a0) >= std::abs(a1) || nmax == 0)
    scale = a0 / out[0];
  else
    scale = a1 / out[1];
  for (int q = 0; q <= nmax; ++q) out[q] *= scale;
}

}  // namespace

void spherical_bessel_j_all(int nmax, double t, std::span<double> out) {
  check_args(nmax, t);
  if (out.size() < static_cast<std::size_t>(nmax) + 1)
    throw std::domain_error("spherical_bessel_j_all: output span too small");
  if (nmax == 0) {
    out[0] = j0(t);
    return;
  }
  if (static_cast<double>(nmax) + 2.0 < t) {
    // Entire range is oscillatory: upward recurrence is stable here.
    out[0] = j0(t);
    out[1] = j1(t);
    for (int m = 1; m < nmax; ++m) out[m + 1] = (2.0 * m + 1.0) / t * out[m] - out[m - 1];
    return;
  }
  j_downward(nmax, t, out);
}

double spherical_bessel_j(int n, double t) {
  check_args(n, t);
  if (n == 0) return j0(t);
  if (n == 1) return j1(t);
  if (static_cast<double>(n) + 2.0 < t) {
    double jm = j0(t), jn = j1(t);
    for (int m = 1; m < n; ++m) {
      double jp = (2.0 * m + 1.0) / t * jn - jm;
      jm = jn;
      jn = jp;
    }
    return jn;
  }
  std::vector<double> buf(n + 1);
  j_downward(n, t, buf);
  return buf[n];
}

void spherical_bessel_y_all(int nmax, double t, std::span<double> out) {
  check_args(nmax, t);
  if (out.size() < static_cast<std::size_t>(nmax) + 1)
    throw std::domain_error("spherical_bessel_y_all: output span too small");
  out[0] = -std::cos(t) / t;
  if (nmax == 0) return;
  out[1] = (-std::cos(t) / t - std::sin(t)) / t;
  for (int m = 1; m < nmax; ++m) out[m + 1] = (2.0 * m + 1.0) / t * out[m] - out[m - 1];
}

double spherical_bessel_y(int n, double t) {
  check_args(n, t);
  std::vector<double> buf(n + 1);
  spherical_bessel_y_all(n, t, buf);
  return buf[n];
}

std::complex<double> spherical_hankel1(int n, double t) {
  return {spherical_bessel_j(n, t), spherical_bessel_y(n, t)};
}

void spherical_hankel1_all(int nmax, double t, std::span<std::complex<double>> out) {
  check_args(nmax, t);
  if (out.size() < static_cast<std::size_t>(nmax) + 1)
    throw std::domain_error("spherical_hankel1_all: output span too small");
  std::vector<double> jr(nmax + 1), yr(nmax + 1);
  spherical_bessel_j_all(nmax, t, jr);
  spherical_bessel_y_all(nmax, t, yr);
  for (int m = 0; m <= nmax; ++m) out[m] = {jr[m], yr[m]};
}

double spherical_bessel_j_prime(int n, double t) {
  check_args(n, t);
  if (n == 0) return -spherical_bessel_j(1, t);
  std::vector<double> buf(n + 1);
  spherical_bessel_j_all(n, t, buf);
  return buf[n - 1] - (n + 1.0) / t * buf[n];
}

double spherical_bessel_y_prime(int n, double t) {
  check_args(n, t);
  if (n == 0) return -spherical_bessel_y(1, t);
  std::vector<double> buf(n + 1);
  spherical_bessel_y_all(n, t, buf);
  return buf[n - 1] - (n + 1.0) / t * buf[n];
}

std::complex<double> spherical_hankel1_prime(int n, double t) {
  return {spherical_bessel_j_prime(n, t), spherical_bessel_y_prime(n, t)};
}

}  // namespace excloak::specfun
