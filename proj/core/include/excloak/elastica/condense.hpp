#pragma once

#include "excloak/elastica/network.hpp"

namespace excloak::elastica {

/// Two-terminal torque-spring truss: terminals x1, x2, force direction v,
/// internal nodes y_i = x_i + rho_offset v, z_i = y_i + w, t_i = z_i + v,
/// eight normal springs of constant k, masses m at the t-nodes
/// (m = kPinnedMass pins them).
struct TorqueSpringSpec {
  int dim = 2;
  Vec3 x1 = Vec3::Zero();
  Vec3 x2 = Vec3::UnitX();
  Vec3 v = Vec3::UnitY();
  double rho_offset = 0.3;
  Vec3 w = Vec3(0.3, 0.4, 0.0);
  double k = 1.0;
  double m = 1.0;
  double omega = 1.0;
};

/// Builds the eight-spring truss; throws std::domain_error for degenerate
/// geometry (v parallel to x2-x1, w parallel to v or x2-x1, coincident
/// construction nodes).
SpringNetwork build_torque_spring(const TorqueSpringSpec& spec);

/// Schur condensation of the dynamic stiffness K - w^2 M onto the given
/// terminal nodes: returns S with f_T = S u_T for the external terminal
/// forces. Interior zero-energy modes that do not couple to the terminals
/// are projected out; a singular coupled interior block (an interior
/// resonance) raises numeric_error.
Eigen::MatrixXd dynamic_condensation(const SpringNetwork& net, double omega,
                                     const std::vector<int>& terminals);

/// Closed-form torque-spring constant k' = K m w^2 / (m w^2 - 2K);
/// m = kPinnedMass gives k' = K. Throws numeric_error at m w^2 = 2K.
double torque_spring_constant(double K, double m, double omega);
/// Inverse relation K = k' m w^2 / (2 k' + m w^2).
double torque_spring_K_from(double k_prime, double m, double omega);
/// Resonance proximity |m w^2 - 2K| / (m w^2); small means close to resonance.
double resonance_proximity(double K, double m, double omega);

/// Reads K off the v v^T coefficient of the statically condensed truss with
/// pinned t-nodes, and asserts the K proportional-to-k linearity by doubling k.
double measure_K(const TorqueSpringSpec& spec);

/// Max-abs deviation of a condensed two-terminal response from the ideal
/// kp * [[v v^T, -v v^T], [-v v^T, v v^T]] block form.
double torque_block_residual(const Eigen::MatrixXd& response, const Vec3& v, int dim,
                             double k_prime);
/// v^T S_00 v, the v v^T coefficient of the leading block.
double torque_block_coefficient(const Eigen::MatrixXd& response, const Vec3& v, int dim);

}  // namespace excloak::elastica
