#pragma once

#include <complex>
#include <vector>

#include "excloak/types.hpp"

namespace excloak::laplace2d {

/// Dense polynomial over the complex scalars, coefficients in increasing
/// degree. The zero polynomial has a single zero coefficient.
class ComplexPolynomial {
 public:
  static constexpr int kMaxDegree = 4096;

  ComplexPolynomial() : coeffs_{cplx(0.0)} {}
  explicit ComplexPolynomial(std::vector<cplx> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : cplx(0.0);
  }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0); }

  cplx eval(cplx z) const;  // Horner
  ComplexPolynomial derivative() const;
  double coeff_max_norm() const;

  /// Synthetic division by (z - root): returns quotient, stores |remainder|.
  ComplexPolynomial divide_by_linear(cplx root, double* remainder_abs = nullptr) const;

  ComplexPolynomial operator*(const ComplexPolynomial& other) const;
  ComplexPolynomial operator+(const ComplexPolynomial& other) const;
  ComplexPolynomial operator-(const ComplexPolynomial& other) const;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

/// Residuals of `count` successive synthetic divisions by (z - root), the
/// whole deflation chain carried in extended precision. Repeating
/// divide_by_linear instead re-quantizes each stored quotient, and that
/// noise compounds exponentially in the multiplicity.
std::vector<double> root_deflation_residuals(const ComplexPolynomial& p, cplx root, int count);

}  // namespace excloak::laplace2d
