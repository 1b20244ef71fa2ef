#pragma once

#include <Eigen/Dense>
#include <functional>

#include "excloak/elastica/tensors.hpp"

namespace excloak::elastica {

/// First-order data of the transformation x' = x'(x), u' = B^{-T} u:
/// A = dx'/dx, B invertible, G_ijp = dB_pj/dx_i, a = det A > 0.
struct TransformJet {
  int dim = 3;
  Eigen::Matrix3d A = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d B = Eigen::Matrix3d::Identity();
  Tensor3 G{3};
  double a = 1.0;

  static TransformJet identity(int dim);
  /// Builds the jet from A and B at a point, with G from the B-field by the
  /// caller (analytic or finite-difference).
  static TransformJet from(int dim, const Eigen::Matrix3d& A, const Eigen::Matrix3d& B,
                           const Tensor3& G);
};

/// Transformed Willis-type material: sigma' = C' grad u' + S' u',
/// p' = rho'(-iw u') + (i/w) D' grad u', with D'_kij = S'_ijk.
struct WillisMaterial {
  int dim = 3;
  Tensor4 C{3};
  Tensor3 S{3};
  Tensor3 D{3};
  Eigen::Matrix3d rho = Eigen::Matrix3d::Zero();
};

/// Pushes (C, rho) through the transformation jet:
///   C'_ijkl = a^-1 A_ip B_jq A_kr B_ls C_pqrs
///   S'_ijk  = a^-1 A_ip B_jq G_rsk C_pqrs       (= D'_kij)
///   rho'_ij = a^-1 B_ik B_jk rho - a^-1 w^-2 G_pqi G_rsj C_pqrs.
WillisMaterial transform_material(const Tensor4& C, double rho, const TransformJet& jet,
                                  double omega);

/// Displacement field with analytic first and second derivatives, used by
/// the two-form equivalence check.
struct DisplacementField {
  std::function<Eigen::Vector3cd(const Vec3&)> value;
  std::function<Eigen::Matrix3cd(const Vec3&)> gradient;  // (i,j) = d_i u_j
  /// hessian(i, j, p) = d_i d_j u_p
  std::function<cplx(int, int, int, const Vec3&)> hessian;
};

/// Random vector polynomial of total degree <= 2 with analytic derivatives.
DisplacementField random_polynomial_field(int dim, unsigned seed);

/// Stress and momentum of the Willis form at a point.
void willis_stress_momentum(const WillisMaterial& mat, double omega,
                            const Eigen::Vector3cd& u, const Eigen::Matrix3cd& grad_u,
                            Eigen::Matrix3cd& sigma, Eigen::Vector3cd& momentum);

/// Max-norm difference between the direct equation residual and the
/// stress/momentum form residual, evaluated at `x` with central differences
/// of step h for the divergence of sigma'. Both residuals describe the same
/// equation, so the difference is an O(h^2) consistency check.
double willis_form_residual(const WillisMaterial& mat, double omega,
                            const DisplacementField& u, const Vec3& x, double h = 1e-4);

}  // namespace excloak::elastica
