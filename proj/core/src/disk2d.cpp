#include "excloak/laplace2d/disk.hpp"

#include <cmath>
#include <stdexcept>

#include "excloak/errors.hpp"

namespace excloak::laplace2d {

DielectricDisk::DielectricDisk(cplx center_, double radius_, double eps_)
    : center(center_), radius(radius_), eps(eps_) {
  if (!(radius > 0.0)) throw std::domain_error("DielectricDisk: radius must be > 0");
  if (std::abs(1.0 + eps) < 1e-12)
    throw numeric_error("DielectricDisk: eps = -1 is resonant");
}

double DielectricDisk::reflection_factor() const { return (1.0 - eps) / (1.0 + eps); }

DiskScatterSolution::DiskScatterSolution(DielectricDisk disk, std::vector<cplx> ambient_coeffs)
    : disk_(disk), a_(std::move(ambient_coeffs)), lambda_(disk.reflection_factor()) {
  if (a_.empty()) a_.push_back(cplx(0.0));
}

double DiskScatterSolution::exterior_scattered(cplx z) const {
  const cplx invd = 1.0 / (z - disk_.center);
  const double r2 = disk_.radius * disk_.radius;
  cplx sum = 0.0;
  double r2k = 1.0;
  cplx invk = 1.0;
  for (std::size_t k = 1; k < a_.size(); ++k) {
    r2k *= r2;
    invk *= invd;
    sum += lambda_ * r2k * std::conj(a_[k]) * invk;
  }
  return sum.real();
}

double DiskScatterSolution::interior_total(cplx z) const {
  const cplx d = z - disk_.center;
  cplx sum = a_[0];
  cplx dk = 1.0;
  for (std::size_t k = 1; k < a_.size(); ++k) {
    dk *= d;
    sum += (1.0 + lambda_) * a_[k] * dk;
  }
  return sum.real();
}

double DiskScatterSolution::ambient(cplx z) const {
  const cplx d = z - disk_.center;
  cplx sum = 0.0;
  for (auto it = a_.rbegin(); it != a_.rend(); ++it) sum = sum * d + *it;
  return sum.real();
}

double DiskScatterSolution::radial_flux_exterior(double rho, double theta) const {
  // d/drho Re[A_k rho^k e^{ik th}] = k rho^{k-1} Re[A_k e^{ik th}], and the
  // scattered part contributes -k lambda r^{2k} rho^{-k-1} Re[conj(A_k) e^{-ik th}].
  double flux = 0.0;
  for (std::size_t k = 1; k < a_.size(); ++k) {
    const double kk = static_cast<double>(k);
    const cplx eik = std::polar(1.0, kk * theta);
    flux += kk * std::pow(rho, kk - 1.0) * (a_[k] * eik).real();
    flux -= kk * lambda_ * std::pow(disk_.radius, 2.0 * kk) * std::pow(rho, -kk - 1.0) *
            (std::conj(a_[k]) * std::conj(eik)).real();
  }
  return flux;
}

double DiskScatterSolution::radial_flux_interior(double rho, double theta) const {
  double flux = 0.0;
  for (std::size_t k = 1; k < a_.size(); ++k) {
    const double kk = static_cast<double>(k);
    const cplx eik = std::polar(1.0, kk * theta);
    flux += kk * (1.0 + lambda_) * std::pow(rho, kk - 1.0) * (a_[k] * eik).real();
  }
  return disk_.eps * flux;
}

double disk_scatter(const DielectricDisk& disk, const std::vector<cplx>& ambient_coeffs,
                    cplx z) {
  return DiskScatterSolution(disk, ambient_coeffs).exterior_scattered(z);
}

}  // namespace excloak::laplace2d
