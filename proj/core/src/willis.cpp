#include "excloak/elastica/willis.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace excloak::elastica {

TransformJet TransformJet::identity(int dim) {
  TransformJet j;
  j.dim = dim;
  j.G = Tensor3(dim);
  return j;
}

TransformJet TransformJet::from(int dim, const Eigen::Matrix3d& A, const Eigen::Matrix3d& B,
                                const Tensor3& G) {
  if (dim != 2 && dim != 3) throw std::domain_error("TransformJet: dim must be 2 or 3");
  TransformJet j;
  j.dim = dim;
  j.A = Eigen::Matrix3d::Identity();
  j.B = Eigen::Matrix3d::Identity();
  j.A.topLeftCorner(dim, dim) = A.topLeftCorner(dim, dim);
  j.B.topLeftCorner(dim, dim) = B.topLeftCorner(dim, dim);
  j.G = G;
  j.a = j.A.determinant();
  if (!(j.a > 0.0)) throw std::domain_error("TransformJet: det A must be > 0");
  if (std::abs(j.B.determinant()) < 1e-14) throw std::domain_error("TransformJet: B is singular");
  return j;
}

WillisMaterial transform_material(const Tensor4& C, double rho, const TransformJet& jet,
                                  double omega) {
  const int d = jet.dim;
  if (C.dim() != d) throw std::domain_error("transform_material: tensor/jet dimension mismatch");
  if (!(omega > 0.0)) throw std::domain_error("transform_material: omega must be > 0");
  if (!(jet.a > 0.0)) throw std::domain_error("transform_material: det A must be > 0");
  if (std::abs(jet.B.determinant()) < 1e-14)
    throw std::domain_error("transform_material: B is singular");

  WillisMaterial out;
  out.dim = d;
  out.C = Tensor4(d);
  out.S = Tensor3(d);
  out.D = Tensor3(d);
  const double inv_a = 1.0 / jet.a;
  const auto& A = jet.A;
  const auto& B = jet.B;
  const auto& G = jet.G;

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double sum = 0.0;
          for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q)
              for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s)
                  sum += A(i, p) * B(j, q) * A(k, r) * B(l, s) * C(p, q, r, s);
          out.C(i, j, k, l) = inv_a * sum;
        }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double sum = 0.0;
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            for (int r = 0; r < d; ++r)
              for (int s = 0; s < d; ++s) sum += A(i, p) * B(j, q) * G(r, s, k) * C(p, q, r, s);
        out.S(i, j, k) = inv_a * sum;
        out.D(k, i, j) = inv_a * sum;  // D'_kij = S'_ijk
      }

  out.rho = Eigen::Matrix3d::Zero();
  const double w2 = omega * omega;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double mass = 0.0;
      for (int k = 0; k < d; ++k) mass += B(i, k) * B(j, k);
      double corr = 0.0;
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
          for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) corr += G(p, q, i) * G(r, s, j) * C(p, q, r, s);
      out.rho(i, j) = inv_a * mass * rho - inv_a * corr / w2;
    }
  return out;
}

DisplacementField random_polynomial_field(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  Eigen::Matrix3d L = Eigen::Matrix3d::Zero();
  std::array<std::array<std::array<double, 3>, 3>, 3> Q{};  // Q[p][q][r], symmetric in (q,r)
  for (int p = 0; p < dim; ++p) {
    c(p) = dist(rng);
    for (int q = 0; q < dim; ++q) L(p, q) = dist(rng);
    for (int q = 0; q < dim; ++q)
      for (int r = q; r < dim; ++r) {
        const double v = dist(rng);
        Q[p][q][r] = v;
        Q[p][r][q] = v;
      }
  }
  DisplacementField f;
  f.value = [=](const Vec3& x) {
    Eigen::Vector3cd u = Eigen::Vector3cd::Zero();
    for (int p = 0; p < dim; ++p) {
      double v = c(p);
      for (int q = 0; q < dim; ++q) v += L(p, q) * x(q);
      for (int q = 0; q < dim; ++q)
        for (int r = 0; r < dim; ++r) v += 0.5 * Q[p][q][r] * x(q) * x(r);
      u(p) = v;
    }
    return u;
  };
  f.gradient = [=](const Vec3& x) {
    Eigen::Matrix3cd g = Eigen::Matrix3cd::Zero();  // g(i,p) = d_i u_p
    for (int p = 0; p < dim; ++p)
      for (int i = 0; i < dim; ++i) {
        double v = L(p, i);
        for (int q = 0; q < dim; ++q) v += Q[p][i][q] * x(q);
        g(i, p) = v;
      }
    return g;
  };
  f.hessian = [=](int i, int j, int p, const Vec3&) { return cplx(Q[p][i][j], 0.0); };
  return f;
}

void willis_stress_momentum(const WillisMaterial& mat, double omega,
                            const Eigen::Vector3cd& u, const Eigen::Matrix3cd& grad_u,
                            Eigen::Matrix3cd& sigma, Eigen::Vector3cd& momentum) {
  const int d = mat.dim;
  sigma = Eigen::Matrix3cd::Zero();
  momentum = Eigen::Vector3cd::Zero();
  const cplx iw(0.0, omega);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) s += mat.C(i, j, k, l) * grad_u(k, l);
        s += mat.S(i, j, k) * u(k);
      }
      sigma(i, j) = s;
    }
  for (int k = 0; k < d; ++k) {
    cplx p = 0.0;
    for (int q = 0; q < d; ++q) p += mat.rho(k, q) * (-iw * u(q));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) p += (kImag / omega) * mat.D(k, i, j) * grad_u(i, j);
    momentum(k) = p;
  }
}

double willis_form_residual(const WillisMaterial& mat, double omega,
                            const DisplacementField& u, const Vec3& x, double h) {
  const int d = mat.dim;
  // Direct residual of the transformed equation with analytic derivatives
  // (constant material): r1_j = -C_ijkl d_i d_k u_l - S_ijk d_i u_k
  //                            + D_jpq d_p u_q - w^2 rho_jq u_q.
  const Eigen::Vector3cd uv = u.value(x);
  const Eigen::Matrix3cd gu = u.gradient(x);
  Eigen::Vector3cd r1 = Eigen::Vector3cd::Zero();
  for (int j = 0; j < d; ++j) {
    cplx r = 0.0;
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) r -= mat.C(i, j, k, l) * u.hessian(i, k, l, x);
        r -= mat.S(i, j, k) * gu(i, k);
      }
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) r += mat.D(j, p, q) * gu(p, q);
    for (int q = 0; q < d; ++q) r -= omega * omega * mat.rho(j, q) * uv(q);
    r1(j) = r;
  }

  // Stress/momentum form: r2_j = -d_i sigma_ij (central differences) - i w p_j.
  Eigen::Matrix3cd sig_p, sig_m, sig0;
  Eigen::Vector3cd mom;
  willis_stress_momentum(mat, omega, uv, gu, sig0, mom);
  Eigen::Vector3cd r2 = Eigen::Vector3cd::Zero();
  for (int j = 0; j < d; ++j) r2(j) = -cplx(0.0, omega) * mom(j);
  for (int i = 0; i < d; ++i) {
    Vec3 xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    Eigen::Vector3cd dummy;
    willis_stress_momentum(mat, omega, u.value(xp), u.gradient(xp), sig_p, dummy);
    willis_stress_momentum(mat, omega, u.value(xm), u.gradient(xm), sig_m, dummy);
    for (int j = 0; j < d; ++j) r2(j) -= (sig_p(i, j) - sig_m(i, j)) / (2.0 * h);
  }

  double err = 0.0;
  for (int j = 0; j < d; ++j) err = std::max(err, std::abs(r1(j) - r2(j)));
  return err;
}

}  // namespace excloak::elastica
