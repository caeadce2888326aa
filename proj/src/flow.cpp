#include "texlab/flow.hpp"

#include <cmath>

#include "texlab/errors.hpp"

namespace texlab {

FlowState FlowState::make(double omega, double omega_v, double radius, double kappa) {
  if (radius <= 0.0 || kappa <= 0.0) throw ConfigError("flow: radius and kappa must be positive");
  if (omega_v < 0.0) throw ConfigError("flow: omega_v must be non-negative");
  if (omega < 0.0) throw ConfigError("flow: omega must be non-negative");
  if (omega_v > omega)
    throw ConfigError("flow: omega_v exceeds omega (more vortices than equilibrium)");
  return FlowState{omega, omega_v, radius, kappa};
}

long FlowState::vortex_count() const { return equilibrium_vortex_number(omega_v, radius, kappa); }

double FlowState::cluster_radius() const {
  if (omega <= 0.0) return 0.0;
  return radius * std::sqrt(omega_v / omega);
}

long equilibrium_vortex_number(double omega_v, double radius, double kappa) {
  if (omega_v < 0.0 || radius <= 0.0 || kappa <= 0.0)
    throw ConfigError("equilibrium_vortex_number: bad arguments");
  return std::lround(2.0 * pi * radius * radius * omega_v / kappa);
}

double counterflow(double r, const FlowState& flow) {
  if (r < 0.0 || r > flow.radius * (1.0 + 1e-12))
    throw NumericsError("counterflow: r outside [0, R]");
  const double rcl = flow.cluster_radius();
  if (r <= rcl || flow.omega == 0.0) return 0.0;
  const double ratio = flow.radius / r;
  return (flow.omega - flow.omega_v * ratio * ratio) * r;
}

std::vector<double> counterflow_profile(const FlowState& flow, const std::vector<double>& grid) {
  std::vector<double> v;
  v.reserve(grid.size());
  for (double r : grid) v.push_back(counterflow(r, flow));
  return v;
}

}  // namespace texlab
