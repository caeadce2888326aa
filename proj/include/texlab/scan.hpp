#pragma once

#include <optional>
#include <string>
#include <vector>

#include "texlab/fitting.hpp"

namespace texlab {

enum class SweepDirection { up, down };

struct ScanPoint {
  double control = 0.0;  // Omega [rad/s] or T/Tc
  Branch branch = Branch::simple;
  double energy = 0.0;
  double warm_start_energy = 0.0;
  std::optional<double> cf_height;
};

struct ScanOptions {
  double step = 0.05;        // rad/s for velocity scans
  double t_step = 0.005;     // Tc units for temperature scans
  double threshold = 1.5;    // cf-peak detection level for omega_c1
  double dhoverh = 8.8e-4;   // broadening used when extracting cf heights
  int bisection_iterations = 0;  // optional refinement of the bracket
};

struct TransitionPoint {
  double value = 0.0;        // control value of the transition (bracket midpoint)
  double uncertainty = 0.0;  // half the bracket width
};

struct TransitionReport {
  std::optional<TransitionPoint> omega_c1;
  std::optional<TransitionPoint> omega_c2_up;
  std::optional<TransitionPoint> omega_c2_down;
  double hysteresis_width = 0.0;
  // control value where the two branch energies cross (the thermodynamic
  // transition inside the hysteresis window), when both paths overlap
  std::optional<double> energy_crossing;
  std::vector<ScanPoint> path;
};

// Smallest Omega on an increasing grid whose converged texture shows a
// cf-peak above the threshold; throws NotFoundError when the grid ends first.
TransitionPoint scan_omega_c1(double t, double omega_v, double omega_lo, double omega_hi,
                              const ForwardContext& ctx, const ScanOptions& opts,
                              std::vector<ScanPoint>* path = nullptr);

// Warm-started continuation over Omega; the transition is bracketed where
// the continued branch first converges to the other branch's signature.
TransitionPoint scan_omega_c2(double t, double omega_v, double omega_lo, double omega_hi,
                              SweepDirection direction, const ForwardContext& ctx,
                              const ScanOptions& opts, std::vector<ScanPoint>* path = nullptr);

// Same continuation over temperature at fixed rotation.
TransitionPoint scan_temperature_c2(double omega, double omega_v, double t_lo, double t_hi,
                                    SweepDirection direction, const ForwardContext& ctx,
                                    const ScanOptions& opts,
                                    std::vector<ScanPoint>* path = nullptr);

// Up plus down scan over the same range with the hysteresis window and the
// branch-energy crossing.
TransitionReport hysteresis_scan(double t, double omega_v, double omega_lo, double omega_hi,
                                 const ForwardContext& ctx, const ScanOptions& opts);

std::string report_to_json(const TransitionReport& report);
std::string path_to_csv(const std::vector<ScanPoint>& path);

}  // namespace texlab
