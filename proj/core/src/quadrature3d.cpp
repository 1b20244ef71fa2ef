#include "excloak/helmholtz3d/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace excloak::helmholtz3d {

FaceQuadrature FaceQuadrature::build(const std::array<Vec3, 3>& verts, const Vec3& opposite,
                                     double max_spacing) {
  if (!(max_spacing > 0.0)) throw std::domain_error("FaceQuadrature: max_spacing must be > 0");
  FaceQuadrature fq;
  fq.verts = verts;
  const Vec3 e01 = verts[1] - verts[0];
  const Vec3 e02 = verts[2] - verts[0];
  const Vec3 cr = e01.cross(e02);
  fq.area = 0.5 * cr.norm();
  if (!(fq.area > 0.0)) throw std::domain_error("FaceQuadrature: degenerate triangle");
  Vec3 n = cr.normalized();
  if (n.dot(opposite - verts[0]) > 0.0) n = -n;
  fq.normal = n;

  const double max_edge = std::max({e01.norm(), e02.norm(), (verts[2] - verts[1]).norm()});
  const int q = std::max(1, static_cast<int>(std::ceil(max_edge / max_spacing)));
  fq.node_spacing = max_edge / q;

  // Barycentric lattice: sub-triangle (i,j) "up" cells and "down" cells,
  // three edge-midpoint nodes each, weight = sub-area / 3.
  const double sub_area = fq.area / (static_cast<double>(q) * q);
  const double w = sub_area / 3.0;
  auto lattice = [&](int i, int j) -> Vec3 {
    return verts[0] + (static_cast<double>(i) / q) * e01 + (static_cast<double>(j) / q) * e02;
  };
  fq.nodes.reserve(static_cast<std::size_t>(q) * q * 3);
  fq.weights.reserve(fq.nodes.capacity());
  auto emit_midpoints = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
    fq.nodes.push_back(0.5 * (a + b));
    fq.nodes.push_back(0.5 * (b + c));
    fq.nodes.push_back(0.5 * (c + a));
    fq.weights.push_back(w);
    fq.weights.push_back(w);
    fq.weights.push_back(w);
  };
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q - i; ++j) {
      emit_midpoints(lattice(i, j), lattice(i + 1, j), lattice(i, j + 1));
      if (i + j < q - 1)
        emit_midpoints(lattice(i + 1, j), lattice(i + 1, j + 1), lattice(i, j + 1));
    }
  }
  return fq;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Newton iteration from the Chebyshev estimate.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int q = 2; q <= n; ++q) {
        const double p2 = ((2.0 * q - 1.0) * x * p1 - (q - 1.0) * p0) / q;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double wgt = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = wgt;
    weights[n - 1 - i] = wgt;
  }
}

SphereQuadrature SphereQuadrature::build(double radius, int n_theta, int n_phi) {
  if (!(radius > 0.0)) throw std::domain_error("SphereQuadrature: radius must be > 0");
  if (n_theta < 1 || n_phi < 1)
    throw std::domain_error("SphereQuadrature: node counts must be >= 1");
  SphereQuadrature sq;
  sq.radius = radius;
  std::vector<double> ct, wt;
  gauss_legendre(n_theta, ct, wt);
  const double dphi = 2.0 * kPi / n_phi;
  sq.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  sq.weights.reserve(sq.nodes.capacity());
  for (int i = 0; i < n_theta; ++i) {
    const double c = ct[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = dphi * j;
      sq.nodes.emplace_back(radius * s * std::cos(phi), radius * s * std::sin(phi), radius * c);
      sq.weights.push_back(wt[i] * dphi * radius * radius);
    }
  }
  return sq;
}

}  // namespace excloak::helmholtz3d
