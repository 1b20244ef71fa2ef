#include "excloak/elastica/condense.hpp"

#include <cmath>
#include <stdexcept>

#include "excloak/errors.hpp"

namespace excloak::elastica {

namespace {

bool parallel(const Vec3& a, const Vec3& b, double tol = 1e-10) {
  return a.cross(b).norm() <= tol * a.norm() * b.norm();
}

}  // namespace

SpringNetwork build_torque_spring(const TorqueSpringSpec& spec) {
  if (spec.dim != 2 && spec.dim != 3)
    throw std::domain_error("build_torque_spring: dim must be 2 or 3");
  const double vlen = spec.v.norm();
  if (!(vlen > 0.0)) throw std::domain_error("build_torque_spring: v must be nonzero");
  const Vec3 v = spec.v / vlen;
  const Vec3 axis = spec.x2 - spec.x1;
  if (axis.norm() < 1e-14)
    throw std::domain_error("build_torque_spring: terminals coincide");
  if (parallel(v, axis))
    throw std::domain_error(
        "build_torque_spring: v parallel to x2-x1 (a normal spring suffices)");
  if (spec.w.norm() < 1e-14) throw std::domain_error("build_torque_spring: w must be nonzero");
  if (parallel(spec.w, v) || parallel(spec.w, axis))
    throw std::domain_error("build_torque_spring: w must be independent of v and x2-x1");
  if (!(spec.rho_offset > 0.0))
    throw std::domain_error("build_torque_spring: rho_offset must be > 0");
  if (!(spec.k > 0.0)) throw std::domain_error("build_torque_spring: k must be > 0");
  if (!(spec.m > 0.0)) throw std::domain_error("build_torque_spring: m must be > 0");

  SpringNetwork net;
  net.dim = spec.dim;
  const Vec3 y1 = spec.x1 + spec.rho_offset * v;
  const Vec3 y2 = spec.x2 + spec.rho_offset * v;
  const Vec3 z1 = y1 + spec.w;
  const Vec3 z2 = y2 + spec.w;
  const Vec3 t1 = z1 + v;
  const Vec3 t2 = z2 + v;
  net.positions = {spec.x1, spec.x2, y1, y2, z1, z2, t1, t2};
  if (spec.dim == 2)
    for (const auto& p : net.positions)
      if (p.z() != 0.0)
        throw std::domain_error("build_torque_spring: 2-D spec with out-of-plane data");
  for (std::size_t a = 0; a < net.positions.size(); ++a)
    for (std::size_t b = a + 1; b < net.positions.size(); ++b)
      if ((net.positions[a] - net.positions[b]).norm() < 1e-12)
        throw std::domain_error("build_torque_spring: construction nodes coincide");
  net.masses = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, spec.m, spec.m};
  const int pairs[8][2] = {{0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}};
  for (const auto& pr : pairs) net.springs.push_back({pr[0], pr[1], spec.k, std::nullopt});
  net.terminals = {0, 1};
  net.validate();
  return net;
}

Eigen::MatrixXd dynamic_condensation(const SpringNetwork& net, double omega,
                                     const std::vector<int>& terminals) {
  net.validate();
  if (terminals.empty()) throw std::domain_error("dynamic_condensation: no terminals");
  const int d = net.dim;
  const int n = net.node_count();
  std::vector<int> order;  // node -> dof block, terminals first
  std::vector<int> block(n, -1);
  for (int t : terminals) {
    if (t < 0 || t >= n) throw std::domain_error("dynamic_condensation: bad terminal index");
    if (net.pinned(t)) throw std::domain_error("dynamic_condensation: terminal is pinned");
    if (block[t] >= 0) throw std::domain_error("dynamic_condensation: duplicate terminal");
    block[t] = static_cast<int>(order.size());
    order.push_back(t);
  }
  const int nt = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    if (block[i] < 0 && !net.pinned(i)) {
      block[i] = static_cast<int>(order.size());
      order.push_back(i);
    }
  const int nfree = static_cast<int>(order.size());

  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(d * nfree, d * nfree);
  for (const auto& s : net.springs) {
    const Vec3 v = net.spring_direction(s);
    const int bi = block[s.i], bj = block[s.j];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const double blk = s.k * v(a) * v(b);
        if (bi >= 0) K(d * bi + a, d * bi + b) += blk;
        if (bj >= 0) K(d * bj + a, d * bj + b) += blk;
        if (bi >= 0 && bj >= 0) {
          K(d * bi + a, d * bj + b) -= blk;
          K(d * bj + a, d * bi + b) -= blk;
        }
      }
  }
  for (int i = 0; i < n; ++i)
    if (block[i] >= 0 && net.masses[i] != 0.0)
      for (int a = 0; a < d; ++a)
        K(d * block[i] + a, d * block[i] + a) -= omega * omega * net.masses[i];

  const int tdof = d * nt;
  const int idof = d * nfree - tdof;
  if (idof == 0) return K;

  const Eigen::MatrixXd Ktt = K.topLeftCorner(tdof, tdof);
  const Eigen::MatrixXd Kti = K.topRightCorner(tdof, idof);
  const Eigen::MatrixXd Kii = K.bottomRightCorner(idof, idof);

  // Pseudo-inverse over the coupled spectrum: zero-energy interior modes
  // that do not load the terminals are dropped; a (near-)singular coupled
  // mode is an interior resonance.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Kii);
  const Eigen::VectorXd lam = es.eigenvalues();
  const Eigen::MatrixXd V = es.eigenvectors();
  const double lmax = lam.cwiseAbs().maxCoeff();
  const double kernel_tol = std::max(lmax, 1.0) * 1e-12;
  const double couple_scale = Kti.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv_lam = Eigen::VectorXd::Zero(idof);
  for (int q = 0; q < idof; ++q) {
    if (std::abs(lam(q)) <= kernel_tol) {
      const double coupling = (Kti * V.col(q)).cwiseAbs().maxCoeff();
      if (coupling > 1e-9 * std::max(couple_scale, 1.0))
        throw numeric_error("dynamic_condensation: interior resonance (singular interior block "
                            "coupled to the terminals)");
      inv_lam(q) = 0.0;
    } else {
      inv_lam(q) = 1.0 / lam(q);
    }
  }
  return Ktt - Kti * V * inv_lam.asDiagonal() * V.transpose() * Kti.transpose();
}

double torque_spring_constant(double K, double m, double omega) {
  if (std::isinf(m)) return K;
  const double denom = m * omega * omega - 2.0 * K;
  if (std::abs(denom) < 1e-14 * std::max(std::abs(m * omega * omega), 1.0))
    throw numeric_error("torque_spring_constant: resonance m w^2 = 2K");
  return K * m * omega * omega / denom;
}

double torque_spring_K_from(double k_prime, double m, double omega) {
  if (std::isinf(m)) return k_prime;
  return k_prime * m * omega * omega / (2.0 * k_prime + m * omega * omega);
}

double resonance_proximity(double K, double m, double omega) {
  if (std::isinf(m)) return 1.0;
  const double mw2 = m * omega * omega;
  if (!(mw2 > 0.0)) throw std::domain_error("resonance_proximity: need m w^2 > 0");
  return std::abs(mw2 - 2.0 * K) / mw2;
}

namespace {

double measured_K_once(TorqueSpringSpec spec) {
  spec.m = kPinnedMass;
  const SpringNetwork net = build_torque_spring(spec);
  const Eigen::MatrixXd S = dynamic_condensation(net, 0.0, net.terminals);
  return torque_block_coefficient(S, spec.v.normalized(), spec.dim);
}

}  // namespace

double measure_K(const TorqueSpringSpec& spec) {
  const double K1 = measured_K_once(spec);
  TorqueSpringSpec doubled = spec;
  doubled.k = 2.0 * spec.k;
  const double K2 = measured_K_once(doubled);
  if (std::abs(K2 - 2.0 * K1) > 1e-12 * std::max(std::abs(K2), 1.0) * 2.0)
    throw numeric_error("measure_K: K is not proportional to k");
  return K1;
}

double torque_block_coefficient(const Eigen::MatrixXd& response, const Vec3& v, int dim) {
  Eigen::VectorXd vv(dim);
  for (int a = 0; a < dim; ++a) vv(a) = v(a);
  return vv.transpose() * response.topLeftCorner(dim, dim) * vv;
}

double torque_block_residual(const Eigen::MatrixXd& response, const Vec3& v, int dim,
                             double k_prime) {
  Eigen::MatrixXd ideal(2 * dim, 2 * dim);
  Eigen::MatrixXd blockm(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) blockm(a, b) = k_prime * v(a) * v(b);
  ideal.topLeftCorner(dim, dim) = blockm;
  ideal.bottomRightCorner(dim, dim) = blockm;
  ideal.topRightCorner(dim, dim) = -blockm;
  ideal.bottomLeftCorner(dim, dim) = -blockm;
  return (response - ideal).cwiseAbs().maxCoeff();
}

}  // namespace excloak::elastica
