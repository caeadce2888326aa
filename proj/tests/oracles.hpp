#pragma once

// Independent oracles used by the test suites.  Everything here computes the
// checked quantities along a different route than the library: quadrature
// instead of Matsubara sums, raw 2D integration of the rotation-matrix field
// instead of the reduced 1D functional, finite differences instead of the
// analytic gradient.

#include <functional>
#include <random>
#include <vector>

#include "texlab/material.hpp"
#include "texlab/texture.hpp"

namespace texlab::oracle {

// T -> 0 limit of Z_j by direct quadrature: pi T sum -> (1/2) integral d eps.
double z_limit_quadrature(int j, double gap);

// Brute-force Matsubara sum with a fixed huge truncation (no stopping rule).
double z_brute_force(int j, double t, double gap, long terms);

// Smooth closed-form texture profiles with analytic derivatives, for the
// 1D/2D equivalence checks.
struct SmoothTexture {
  double radius;
  double beta_wall;
  std::vector<double> beta_coef;   // sine-series amplitudes
  std::vector<double> alpha_coef;
  double alpha0;

  double beta(double r) const;
  double dbeta(double r) const;
  double alpha(double r) const;
  double dalpha(double r) const;

  static SmoothTexture random(std::mt19937& rng, double radius, bool extended);
  Texture sample(const RadialGrid& grid) const;
};

// Total free energy from the raw definition: densities built from the
// rotation matrix evaluated on a 2D (r, phi) grid, Cartesian derivatives by
// finite differences of the matrix entries, Simpson quadrature in r and
// periodic trapezoid in phi.  Units match total_energy (J per meter).
EnergyBreakdown energy_2d(const SmoothTexture& tex, const MaterialState& mat,
                          const FlowState& flow, double field, int nr = 2000, int nphi = 16);

// 1D reduced energy evaluated on a fine grid from the same closed-form
// profiles (library integration path, oracle-grade resolution).
EnergyBreakdown energy_1d_fine(const SmoothTexture& tex, const MaterialState& mat,
                               const FlowState& flow, double field, int m = 6400);

// Central finite-difference gradient of total_energy.
void fd_gradient(const Texture& tex, const MaterialState& mat, const FlowState& flow, double field,
                 double step, std::vector<double>& g_alpha, std::vector<double>& g_beta);

// Shared fixture: the parameter table shipped with the repository.
const ParameterTable& default_table();

}  // namespace texlab::oracle
