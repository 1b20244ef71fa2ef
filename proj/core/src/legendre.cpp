#include "excloak/specfun/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace excloak::specfun {

double assoc_legendre(int n, int m, double t) {
  if (n < 0 || m < 0 || m > n) throw std::domain_error("assoc_legendre: need 0 <= m <= n");
  if (!(t >= -1.0 && t <= 1.0)) throw std::domain_error("assoc_legendre: need |t| <= 1");
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  // P_m^m = (2m-1)!! s^m, then upward in n at fixed m.
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * s;
  if (n == m) return pmm;
  double pm1 = pmm;                          // P_m^m
  double p = t * (2.0 * m + 1.0) * pmm;      // P_{m+1}^m
  for (int q = m + 2; q <= n; ++q) {
    double pn = ((2.0 * q - 1.0) * t * p - (q + m - 1.0) * pm1) / (q - m);
    pm1 = p;
    p = pn;
  }
  return p;
}

LegendreBarTable::LegendreBarTable(int nmax) : nmax_(nmax) {
  if (nmax < 0) throw std::domain_error("LegendreBarTable: nmax must be >= 0");
  const int sz = size();
  a_.assign(sz, 0.0);
  b_.assign(sz, 0.0);
  e_.assign(sz, 0.0);
  c_.assign(nmax + 1, 0.0);
  d_.assign(nmax + 1, 0.0);
  for (int m = 1; m <= nmax; ++m) c_[m] = std::sqrt(1.0 + 0.5 / m);
  for (int m = 0; m <= nmax; ++m) d_[m] = std::sqrt(2.0 * m + 3.0);
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= n; ++m) {
      const int idx = legendre_index(n, m);
      const double n2 = static_cast<double>(n) * n;
      const double m2 = static_cast<double>(m) * m;
      if (n >= m + 2) {
        a_[idx] = std::sqrt((4.0 * n2 - 1.0) / (n2 - m2));
        const double nm1 = n - 1.0;
        b_[idx] = std::sqrt((nm1 * nm1 - m2) / (4.0 * nm1 * nm1 - 1.0));
      }
      if (n >= 1 && n > m)
        e_[idx] = std::sqrt((2.0 * n + 1.0) * (n2 - m2) / (2.0 * n - 1.0));
    }
  }
}

void LegendreBarTable::eval(double ct, double st, std::span<double> pbar) const {
  if (pbar.size() < static_cast<std::size_t>(size()))
    throw std::domain_error("LegendreBarTable::eval: output span too small");
  const double inv_sqrt4pi = 0.28209479177387814347;
  pbar[0] = inv_sqrt4pi;
  if (nmax_ == 0) return;
  // Diagonal Pbar_m^m, then first off-diagonal, then upward in n.
  for (int m = 1; m <= nmax_; ++m)
    pbar[legendre_index(m, m)] = c_[m] * st * pbar[legendre_index(m - 1, m - 1)];
  for (int m = 0; m < nmax_; ++m)
    pbar[legendre_index(m + 1, m)] = d_[m] * ct * pbar[legendre_index(m, m)];
  for (int m = 0; m <= nmax_; ++m) {
    for (int n = m + 2; n <= nmax_; ++n) {
      const int idx = legendre_index(n, m);
      pbar[idx] = a_[idx] * (ct * pbar[legendre_index(n - 1, m)] -
                             b_[idx] * pbar[legendre_index(n - 2, m)]);
    }
  }
}

void LegendreBarTable::eval_with_dtheta(double ct, double st, std::span<double> pbar,
                                        std::span<double> dpbar) const {
  eval(ct, st, pbar);
  if (dpbar.size() < static_cast<std::size_t>(size()))
    throw std::domain_error("LegendreBarTable::eval_with_dtheta: output span too small");
  if (!(st > 0.0))
    throw std::domain_error("LegendreBarTable::eval_with_dtheta: needs sin(theta) > 0");
  // d/dtheta Pbar_n^m(cos th) = (n ct Pbar_n^m - e_nm Pbar_{n-1}^m) / st
  const double inv_st = 1.0 / st;
  for (int n = 0; n <= nmax_; ++n) {
    for (int m = 0; m <= n; ++m) {
      const int idx = legendre_index(n, m);
      double low = (n > m) ? pbar[legendre_index(n - 1, m)] : 0.0;
      dpbar[idx] = (n * ct * pbar[idx] - e_[idx] * low) * inv_st;
    }
  }
}

}  // namespace excloak::specfun
