#include "excloak/elastica/network.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace excloak::elastica {

using json = nlohmann::json;

Vec3 SpringNetwork::spring_direction(const Spring& s) const {
  if (s.direction) return *s.direction;
  const Vec3 d = positions[s.j] - positions[s.i];
  const double len = d.norm();
  if (len < 1e-14) throw std::domain_error("SpringNetwork: coincident axial spring endpoints");
  return d / len;
}

void SpringNetwork::validate() const {
  if (dim != 2 && dim != 3) throw std::domain_error("SpringNetwork: dim must be 2 or 3");
  if (positions.size() != masses.size())
    throw std::domain_error("SpringNetwork: node/mass count mismatch");
  const int n = node_count();
  for (int i = 0; i < n; ++i) {
    if (dim == 2 && positions[i].z() != 0.0)
      throw std::domain_error("SpringNetwork: 2-D node with nonzero z");
    if (!(masses[i] >= 0.0)) throw std::domain_error("SpringNetwork: negative mass");
  }
  for (const auto& s : springs) {
    if (s.i < 0 || s.i >= n || s.j < 0 || s.j >= n || s.i == s.j)
      throw std::domain_error("SpringNetwork: bad spring node indices");
    if (!(s.k >= 0.0)) throw std::domain_error("SpringNetwork: spring constant must be >= 0");
    if (s.direction && std::abs(s.direction->norm() - 1.0) > 1e-10)
      throw std::domain_error("SpringNetwork: torque direction must be a unit vector");
    spring_direction(s);  // rejects coincident axial endpoints
  }
  for (int t : terminals)
    if (t < 0 || t >= n) throw std::domain_error("SpringNetwork: bad terminal index");
}

SpringNetwork transform_network(const SpringNetwork& net,
                                const std::function<Vec3(const Vec3&)>& forward,
                                const std::function<Vec3(const Vec3&)>& inverse) {
  net.validate();
  SpringNetwork out = net;
  for (int i = 0; i < net.node_count(); ++i) {
    const Vec3 xp = forward(net.positions[i]);
    if ((inverse(xp) - net.positions[i]).norm() > 1e-10)
      throw std::domain_error("transform_network: map/inverse round trip exceeds 1e-10");
    out.positions[i] = xp;
  }
  for (int i = 0; i < net.node_count(); ++i)
    for (int j = i + 1; j < net.node_count(); ++j)
      if ((out.positions[i] - out.positions[j]).norm() < 1e-14)
        throw std::domain_error("transform_network: transformed nodes coincide");
  for (std::size_t q = 0; q < net.springs.size(); ++q) {
    // Force direction from the pre-image geometry (the original axis for
    // normal springs); keep explicit directions as they are.
    const Vec3 v = net.spring_direction(net.springs[q]);
    const Vec3 new_axis_raw = out.positions[net.springs[q].j] - out.positions[net.springs[q].i];
    const Vec3 new_axis = new_axis_raw / new_axis_raw.norm();
    const bool still_axial = std::min((v - new_axis).norm(), (v + new_axis).norm()) <= 1e-10;
    out.springs[q].direction = still_axial ? std::nullopt : std::optional<Vec3>(v);
  }
  return out;
}

Eigen::VectorXd solve_network(const SpringNetwork& net, double omega,
                              const Eigen::VectorXd& forces) {
  net.validate();
  const int d = net.dim;
  const int n = net.node_count();
  if (forces.size() != static_cast<Eigen::Index>(d) * n)
    throw std::domain_error("solve_network: force vector size mismatch");
  std::vector<int> free_index(n, -1);
  int nf = 0;
  for (int i = 0; i < n; ++i)
    if (!net.pinned(i)) free_index[i] = nf++;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(d * nf, d * nf);
  for (const auto& s : net.springs) {
    const Vec3 v = net.spring_direction(s);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const double block = s.k * v(a) * v(b);
        const int fi = free_index[s.i], fj = free_index[s.j];
        if (fi >= 0) K(d * fi + a, d * fi + b) += block;
        if (fj >= 0) K(d * fj + a, d * fj + b) += block;
        if (fi >= 0 && fj >= 0) {
          K(d * fi + a, d * fj + b) -= block;
          K(d * fj + a, d * fi + b) -= block;
        }
      }
  }
  for (int i = 0; i < n; ++i)
    if (free_index[i] >= 0)
      for (int a = 0; a < d; ++a)
        K(d * free_index[i] + a, d * free_index[i] + a) -= omega * omega * net.masses[i];
  Eigen::VectorXd f(d * nf);
  for (int i = 0; i < n; ++i)
    if (free_index[i] >= 0)
      for (int a = 0; a < d; ++a) f(d * free_index[i] + a) = forces(d * i + a);
  const Eigen::VectorXd uf = K.fullPivLu().solve(f);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d) * n);
  for (int i = 0; i < n; ++i)
    if (free_index[i] >= 0)
      for (int a = 0; a < d; ++a) u(d * i + a) = uf(d * free_index[i] + a);
  return u;
}

namespace {

// Squared distance between segments [p1,p2] and [q1,q2].
double segment_segment_dist(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2) {
  const Vec3 d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
  const double a = d1.dot(d1), e = d2.dot(d2), f = d2.dot(r);
  double s, t;
  const double c = d1.dot(r), b = d1.dot(d2);
  const double denom = a * e - b * b;
  s = denom > 1e-30 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  t = e > 1e-30 ? std::clamp((b * s + f) / e, 0.0, 1.0) : 0.0;
  s = a > 1e-30 ? std::clamp((b * t - c) / a, 0.0, 1.0) : 0.0;
  return ((p1 + s * d1) - (q1 + t * d2)).norm();
}

}  // namespace

std::vector<std::string> geometry_warnings(const SpringNetwork& net) {
  std::vector<std::string> warnings;
  const double tol = 1e-9;
  for (std::size_t a = 0; a < net.springs.size(); ++a) {
    const auto& sa = net.springs[a];
    for (std::size_t b = a + 1; b < net.springs.size(); ++b) {
      const auto& sb = net.springs[b];
      if (sa.i == sb.i || sa.i == sb.j || sa.j == sb.i || sa.j == sb.j) continue;
      const double dist = segment_segment_dist(net.positions[sa.i], net.positions[sa.j],
                                               net.positions[sb.i], net.positions[sb.j]);
      if (dist < tol) {
        std::ostringstream os;
        os << "springs (" << sa.i << "," << sa.j << ") and (" << sb.i << "," << sb.j
           << ") intersect";
        warnings.push_back(os.str());
      }
    }
    for (int nidx = 0; nidx < net.node_count(); ++nidx) {
      if (nidx == sa.i || nidx == sa.j) continue;
      const double dist =
          segment_segment_dist(net.positions[sa.i], net.positions[sa.j], net.positions[nidx],
                               net.positions[nidx]);
      if (dist < tol) {
        std::ostringstream os;
        os << "node " << nidx << " lies on spring (" << sa.i << "," << sa.j << ")";
        warnings.push_back(os.str());
      }
    }
  }
  return warnings;
}

SpringNetwork load_network_json(const std::string& text) {
  const json doc = json::parse(text);
  SpringNetwork net;
  net.dim = doc.at("dimension").get<int>();
  const auto& nodes = doc.at("nodes");
  net.positions.resize(nodes.size(), Vec3::Zero());
  net.masses.resize(nodes.size(), 0.0);
  for (const auto& nd : nodes) {
    const int id = nd.at("id").get<int>();
    if (id < 0 || id >= static_cast<int>(nodes.size()))
      throw std::domain_error("network json: node ids must be 0..n-1");
    const auto& pos = nd.at("position");
    Vec3 p = Vec3::Zero();
    for (std::size_t c = 0; c < pos.size() && c < 3; ++c) p(static_cast<int>(c)) = pos[c].get<double>();
    net.positions[id] = p;
    const auto& mass = nd.at("mass");
    net.masses[id] = mass.is_string() ? kPinnedMass : mass.get<double>();
    if (mass.is_string() && mass.get<std::string>() != "pinned")
      throw std::domain_error("network json: mass must be a number or \"pinned\"");
  }
  for (const auto& sp : doc.at("springs")) {
    Spring s;
    s.i = sp.at("i").get<int>();
    s.j = sp.at("j").get<int>();
    s.k = sp.at("k").get<double>();
    if (sp.contains("direction")) {
      const auto& dir = sp.at("direction");
      Vec3 v = Vec3::Zero();
      for (std::size_t c = 0; c < dir.size() && c < 3; ++c) v(static_cast<int>(c)) = dir[c].get<double>();
      s.direction = v;
    }
    net.springs.push_back(s);
  }
  if (doc.contains("terminals"))
    for (const auto& t : doc.at("terminals")) net.terminals.push_back(t.get<int>());
  net.validate();
  return net;
}

std::string network_to_json(const SpringNetwork& net) {
  json doc;
  doc["dimension"] = net.dim;
  json nodes = json::array();
  for (int i = 0; i < net.node_count(); ++i) {
    json nd;
    nd["id"] = i;
    json pos = json::array();
    for (int c = 0; c < net.dim; ++c) pos.push_back(net.positions[i](c));
    nd["position"] = pos;
    if (net.pinned(i))
      nd["mass"] = "pinned";
    else
      nd["mass"] = net.masses[i];
    nodes.push_back(nd);
  }
  doc["nodes"] = nodes;
  json springs = json::array();
  for (const auto& s : net.springs) {
    json sp;
    sp["i"] = s.i;
    sp["j"] = s.j;
    sp["k"] = s.k;
    if (s.direction) {
      json dir = json::array();
      for (int c = 0; c < net.dim; ++c) dir.push_back((*s.direction)(c));
      sp["direction"] = dir;
    }
    springs.push_back(sp);
  }
  doc["springs"] = springs;
  doc["terminals"] = net.terminals;
  return doc.dump(2);
}

SpringNetwork load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_network_file: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_network_json(ss.str());
}

void save_network_file(const std::string& path, const SpringNetwork& net) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_network_file: cannot open " + path);
  out << network_to_json(net) << "\n";
}

std::string response_to_json(const Eigen::MatrixXd& response, const std::vector<int>& terminals,
                             double omega) {
  json doc;
  doc["omega"] = omega;
  doc["terminals"] = terminals;
  json rows = json::array();
  for (Eigen::Index r = 0; r < response.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < response.cols(); ++c) row.push_back(response(r, c));
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  return doc.dump(2);
}

}  // namespace excloak::elastica
