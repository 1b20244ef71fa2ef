#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "excloak/types.hpp"

namespace excloak::elastica {

inline constexpr double kPinnedMass = std::numeric_limits<double>::infinity();

/// Spring between nodes i and j. An empty direction means a normal (axial)
/// spring whose force direction follows the node geometry; a stored unit
/// direction makes it a torque spring with force law
/// F_i = k v [v . (u_j - u_i)].
struct Spring {
  int i = 0;
  int j = 0;
  double k = 0.0;
  std::optional<Vec3> direction;

  bool is_torque() const { return direction.has_value(); }
};

struct SpringNetwork {
  int dim = 2;  // 2 or 3
  std::vector<Vec3> positions;  // z = 0 in 2-D
  std::vector<double> masses;   // kPinnedMass marks a pinned node
  std::vector<Spring> springs;
  std::vector<int> terminals;

  int node_count() const { return static_cast<int>(positions.size()); }
  bool pinned(int node) const { return std::isinf(masses[node]); }
  /// Force direction of a spring (axial geometry unless overridden).
  Vec3 spring_direction(const Spring& s) const;
  /// Throws std::domain_error on inconsistent data (bad indices, negative
  /// constants, coincident axial endpoints, non-unit directions).
  void validate() const;
};

/// Transforms node positions by `forward` while keeping masses, constants,
/// forces and displacements; force directions keep pointing along the
/// pre-image geometry, so springs generally become torque springs. The
/// inverse map is used to verify invertibility on the node set (round trip
/// to 1e-10).
SpringNetwork transform_network(const SpringNetwork& net,
                                const std::function<Vec3(const Vec3&)>& forward,
                                const std::function<Vec3(const Vec3&)>& inverse);

/// Assembled frequency-domain solve (K - w^2 M) u = f over free nodes,
/// with pinned nodes eliminated. Used to compare a network against its
/// transformed image.
Eigen::VectorXd solve_network(const SpringNetwork& net, double omega,
                              const Eigen::VectorXd& forces);

/// Non-fatal geometric diagnostics: crossing springs, nodes lying on a
/// spring segment. Returns human-readable warnings.
std::vector<std::string> geometry_warnings(const SpringNetwork& net);

// JSON description: {"dimension", "nodes": [{"id","position","mass"|"pinned"}],
// "springs": [{"i","j","k","direction"?}], "terminals": [...]}.
SpringNetwork load_network_json(const std::string& text);
std::string network_to_json(const SpringNetwork& net);
SpringNetwork load_network_file(const std::string& path);
void save_network_file(const std::string& path, const SpringNetwork& net);

/// Condensed terminal response as JSON ({"omega", "terminals", "matrix"}).
std::string response_to_json(const Eigen::MatrixXd& response, const std::vector<int>& terminals,
                             double omega);

}  // namespace excloak::elastica
