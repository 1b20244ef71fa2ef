#pragma once

#include <array>
#include <stdexcept>

#include "excloak/types.hpp"

namespace excloak::elastica {

/// Dense rank-3 tensor in dimension 2 or 3 (stored 3x3x3, unused slots zero).
class Tensor3 {
 public:
  explicit Tensor3(int dim = 3) : dim_(dim) {
    if (dim != 2 && dim != 3) throw std::domain_error("Tensor3: dim must be 2 or 3");
    a_.fill(0.0);
  }
  int dim() const { return dim_; }
  double& operator()(int i, int j, int k) { return a_[(i * 3 + j) * 3 + k]; }
  double operator()(int i, int j, int k) const { return a_[(i * 3 + j) * 3 + k]; }
  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  int dim_;
  std::array<double, 27> a_;
};

/// Dense rank-4 tensor in dimension 2 or 3 (stored 3^4).
class Tensor4 {
 public:
  explicit Tensor4(int dim = 3) : dim_(dim) {
    if (dim != 2 && dim != 3) throw std::domain_error("Tensor4: dim must be 2 or 3");
    a_.fill(0.0);
  }
  int dim() const { return dim_; }
  double& operator()(int i, int j, int k, int l) { return a_[((i * 3 + j) * 3 + k) * 3 + l]; }
  double operator()(int i, int j, int k, int l) const {
    return a_[((i * 3 + j) * 3 + k) * 3 + l];
  }
  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Isotropic elasticity tensor C_ijkl = lam d_ij d_kl + mu (d_ik d_jl + d_il d_jk).
  static Tensor4 isotropic(int dim, double lam, double mu);

 private:
  int dim_;
  std::array<double, 81> a_;
};

}  // namespace excloak::elastica
