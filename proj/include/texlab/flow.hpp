#pragma once

#include <vector>

#include "texlab/constants.hpp"

namespace texlab {

// Rotation state: solid-body normal component at Omega, central vortex
// cluster equivalent to equilibrium rotation at Omega_v.
struct FlowState {
  double omega = 0.0;    // rad/s
  double omega_v = 0.0;  // rad/s
  double radius = 3e-3;  // m
  double kappa = kappa_default;

  static FlowState make(double omega, double omega_v, double radius = 3e-3,
                        double kappa = kappa_default);

  long vortex_count() const;
  double cluster_radius() const;  // R sqrt(Omega_v/Omega); 0 when Omega == 0
};

long equilibrium_vortex_number(double omega_v, double radius, double kappa = kappa_default);

// Azimuthal counterflow velocity v_n - v_s at radius r: zero inside the
// cluster, [Omega - Omega_v (R/r)^2] r outside.
double counterflow(double r, const FlowState& flow);

std::vector<double> counterflow_profile(const FlowState& flow, const std::vector<double>& grid);

}  // namespace texlab
