#pragma once

#include <complex>
#include <span>

namespace excloak::specfun {

// Spherical Bessel/Hankel functions for t > 0, n >= 0.
//
// j_n uses downward recurrence seeded by a continued-fraction ratio
// (Miller's algorithm) when n is at or above the oscillatory range,
// upward recurrence otherwise; y_n always recurses upward. Both give
// relative accuracy ~1e-13 or better for n <= 200, t <= 500.

double spherical_bessel_j(int n, double t);
double spherical_bessel_y(int n, double t);
std::complex<double> spherical_hankel1(int n, double t);

/// Fills out[0..nmax] with j_0(t)..j_nmax(t). out.size() must be >= nmax+1.
void spherical_bessel_j_all(int nmax, double t, std::span<double> out);
void spherical_bessel_y_all(int nmax, double t, std::span<double> out);
void spherical_hankel1_all(int nmax, double t, std::span<std::complex<double>> out);

// Derivatives via f_n' = f_{n-1} - ((n+1)/t) f_n.
double spherical_bessel_j_prime(int n, double t);
double spherical_bessel_y_prime(int n, double t);
std::complex<double> spherical_hankel1_prime(int n, double t);

}  // namespace excloak::specfun
