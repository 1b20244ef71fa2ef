#pragma once

#include <span>
#include <vector>

namespace excloak::specfun {

/// Associated Legendre function P_n^m(t) = (1-t^2)^{m/2} d^m P_n/dt^m,
/// normalization P_n(1) = 1, no Condon-Shortley phase. Plain (unnormalized)
/// values overflow around n ~ 150 for m near n; use LegendreBarTable for
/// high degrees.
double assoc_legendre(int n, int m, double t);

/// Packed index for triangular (n,m) storage with 0 <= m <= n <= nmax.
inline int legendre_index(int n, int m) { return n * (n + 1) / 2 + m; }

/// Fully normalized associated Legendre functions
///   Pbar_n^m = sqrt((2n+1)/(4 pi) * (n-m)!/(n+m)!) * P_n^m,
/// evaluated for all 0 <= m <= n <= nmax by overflow-free recurrences.
/// The recurrence coefficients are precomputed once per table; evaluation
/// is pure and reentrant.
class LegendreBarTable {
 public:
  explicit LegendreBarTable(int nmax);

  int nmax() const { return nmax_; }
  int size() const { return (nmax_ + 1) * (nmax_ + 2) / 2; }

  /// Fills pbar[legendre_index(n,m)] for all modes. ct = cos(theta),
  /// st = sin(theta) >= 0.
  void eval(double ct, double st, std::span<double> pbar) const;

  /// Also fills the theta-derivatives d/dtheta Pbar_n^m(cos theta).
  /// Requires st > 0 (the derivative formula divides by sin theta);
  /// callers handle poles separately.
  void eval_with_dtheta(double ct, double st, std::span<double> pbar,
                        std::span<double> dpbar) const;

 private:
  int nmax_;
  std::vector<double> a_;  // sqrt((4n^2-1)/(n^2-m^2))
  std::vector<double> b_;  // sqrt(((n-1)^2-m^2)/(4(n-1)^2-1))
  std::vector<double> e_;  // sqrt((2n+1)(n^2-m^2)/(2n-1)), for d/dtheta
  std::vector<double> c_;  // diagonal step sqrt(1+1/(2m))
  std::vector<double> d_;  // off-diagonal step sqrt(2m+3)
};

}  // namespace excloak::specfun
