#pragma once

// Test-only reference implementations, deliberately independent of the
// library's recurrence-based evaluation paths.

#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

// Power series j_n(t) = t^n sum_k (-t^2/2)^k / (k! (2n+2k+1)!!), accumulated
// in long double. Accurate to ~1e-15 for t <= 10; cancellation grows like
// e^t beyond that.
inline long double series_bessel_j(int n, long double t) {
  long double term = 1.0L;
  for (int i = 1; i <= 2 * n + 1; i += 2) term /= i;
  long double sum = term;
  const long double z = -t * t / 2.0L;
  for (int k = 1; k < 400; ++k) {
    term *= z / (static_cast<long double>(k) * (2.0L * n + 2.0L * k + 1.0L));
    sum += term;
    if (std::abs(term) < 1e-25L * std::abs(sum)) break;
  }
  return std::pow(t, static_cast<long double>(n)) * sum;
}

// Power series y_n(t) = -(2n-1)!!/t^{n+1} sum_k (-t^2/2)^k / (k! prod (2i-2n-1)).
inline long double series_bessel_y(int n, long double t) {
  long double dfac = 1.0L;
  for (int i = 1; i <= 2 * n - 1; i += 2) dfac *= i;
  long double term = 1.0L, sum = 1.0L;
  const long double z = -t * t / 2.0L;
  for (int k = 1; k < 400; ++k) {
    term *= z / (static_cast<long double>(k) * (2.0L * k - 2.0L * n - 1.0L));
    sum += term;
    if (std::abs(term) < 1e-25L * std::abs(sum)) break;
  }
  return -dfac / std::pow(t, static_cast<long double>(n + 1)) * sum;
}

// Legendre polynomial coefficients by the three-term recurrence, then m-fold
// differentiation: an expansion-based route to P_n^m with the P_n(1) = 1
// normalization and no Condon-Shortley phase.
inline long double rodrigues_assoc_legendre(int n, int m, long double t) {
  std::vector<std::vector<long double>> P(n + 1);
  P[0] = {1.0L};
  if (n >= 1) P[1] = {0.0L, 1.0L};
  for (int q = 2; q <= n; ++q) {
    P[q].assign(q + 1, 0.0L);
    for (std::size_t c = 0; c < P[q - 1].size(); ++c)
      P[q][c + 1] += (2.0L * q - 1.0L) * P[q - 1][c] / q;
    for (std::size_t c = 0; c < P[q - 2].size(); ++c) P[q][c] -= (q - 1.0L) * P[q - 2][c] / q;
  }
  std::vector<long double> d = P[n];
  for (int rep = 0; rep < m; ++rep) {
    std::vector<long double> next(d.size() > 1 ? d.size() - 1 : 1, 0.0L);
    for (std::size_t c = 1; c < d.size(); ++c) next[c - 1] = static_cast<long double>(c) * d[c];
    d = next;
  }
  long double v = 0.0L;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * t + *it;
  return v * std::pow((1.0L - t) * (1.0L + t), m / 2.0L);
}

}  // namespace oracles
