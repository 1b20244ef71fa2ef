#include "excloak/laplace2d/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace excloak::laplace2d {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
  if (coeffs_.size() > kMaxDegree + 1)
    throw std::domain_error("ComplexPolynomial: degree above configured maximum");
  trim();
}

void ComplexPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
}

cplx ComplexPolynomial::eval(cplx z) const {
  cplx v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * z + *it;
  return v;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() == 1) return ComplexPolynomial();
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return ComplexPolynomial(std::move(d));
}

double ComplexPolynomial::coeff_max_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ComplexPolynomial ComplexPolynomial::divide_by_linear(cplx root, double* remainder_abs) const {
  if (coeffs_.size() == 1) {
    if (remainder_abs) *remainder_abs = std::abs(coeffs_[0]);
    return ComplexPolynomial();
  }
  // Extended-precision carries: the cloaking polynomials reach integer
  // coefficients above 2^53, where double partial sums would break the
  // exact root deflation.
  using lcplx = std::complex<long double>;
  std::vector<cplx> q(coeffs_.size() - 1);
  const lcplx r(root.real(), root.imag());
  lcplx carry(coeffs_.back().real(), coeffs_.back().imag());
  for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i) {
    q[i] = cplx(static_cast<double>(carry.real()), static_cast<double>(carry.imag()));
    carry = lcplx(coeffs_[i].real(), coeffs_[i].imag()) + carry * r;
  }
  if (remainder_abs) *remainder_abs = static_cast<double>(std::abs(carry));
  return ComplexPolynomial(std::move(q));
}

ComplexPolynomial ComplexPolynomial::operator*(const ComplexPolynomial& other) const {
  if (is_zero() || other.is_zero()) return ComplexPolynomial();
  std::vector<cplx> p(coeffs_.size() + other.coeffs_.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * other.coeffs_[j];
  return ComplexPolynomial(std::move(p));
}

ComplexPolynomial ComplexPolynomial::operator+(const ComplexPolynomial& other) const {
  std::vector<cplx> s(std::max(coeffs_.size(), other.coeffs_.size()), cplx(0.0));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
  return ComplexPolynomial(std::move(s));
}

ComplexPolynomial ComplexPolynomial::operator-(const ComplexPolynomial& other) const {
  std::vector<cplx> s(std::max(coeffs_.size(), other.coeffs_.size()), cplx(0.0));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
  return ComplexPolynomial(std::move(s));
}

std::vector<double> root_deflation_residuals(const ComplexPolynomial& p, cplx root, int count) {
  if (count < 0) throw std::domain_error("root_deflation_residuals: count must be >= 0");
  using lcplx = std::complex<long double>;
  std::vector<lcplx> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lcplx(p.coeffs()[i].real(), p.coeffs()[i].imag());
  const lcplx r(root.real(), root.imag());
  std::vector<double> residuals;
  residuals.reserve(count);
  for (int rep = 0; rep < count; ++rep) {
    if (c.size() == 1) {
      residuals.push_back(static_cast<double>(std::abs(c[0])));
      c[0] = 0.0L;
      continue;
    }
    std::vector<lcplx> q(c.size() - 1);
    lcplx carry = c.back();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
      q[i] = carry;
      carry = c[i] + carry * r;
    }
    residuals.push_back(static_cast<double>(std::abs(carry)));
    c = std::move(q);
  }
  return residuals;
}

}  // namespace excloak::laplace2d
