#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "texlab/flow.hpp"
#include "texlab/material.hpp"

namespace texlab {

// Uniform radial grid r_i = i h, i = 0..m, with m h = R.
struct RadialGrid {
  double radius = 3e-3;
  double step = 15e-6;
  int m = 200;

  static RadialGrid make(double radius, double target_step = 15e-6);
  int points() const { return m + 1; }
  double r(int i) const { return step * i; }
};

enum class Branch { simple, parted, extended };

const char* branch_name(Branch b);
Branch branch_from_name(const std::string& name);

struct Texture {
  RadialGrid grid;
  std::vector<double> alpha;  // rad, azimuth offset of n around the field axis
  std::vector<double> beta;   // rad, polar angle from the field axis
  Branch branch = Branch::simple;
  double energy = 0.0;  // J per meter of cylinder length
  bool converged = false;
  int iterations = 0;
};

struct EnergyBreakdown {
  double f_dh = 0, f_dv = 0, f_g = 0, f_hv = 0, f_sh = 0;
  double total = 0;
};

// Cartesian n for an axisymmetric texture: polar angle beta from the field
// axis z, azimuth phi + alpha.
std::array<double, 3> nhat_field(double alpha, double beta, double phi);

// R_ij = cos(th) d_ij + (1-cos th) n_i n_j - sin(th) eps_ijk n_k.
std::array<std::array<double, 3>, 3> rotation_matrix(const std::array<double, 3>& n, double theta);

struct EnergyDensity {
  double f_dh = 0, f_dv = 0, f_g = 0, f_hv = 0;
  double total = 0;
};

// Bulk free-energy density at radius r for local angles and radial
// derivatives.  At r = 0 the azimuthal 1/r terms use the analytic limit
// sin(beta)/r -> dbeta (valid with the axis condition beta(0) = 0).
EnergyDensity energy_density(double r, double alpha, double beta, double dalpha, double dbeta,
                             const MaterialState& mat, const FlowState& flow, double field);

// Total free energy per unit cylinder length: interval-midpoint integration
// of the bulk density with weight 2 pi r dr plus the surface term at r = R.
EnergyBreakdown total_energy(const Texture& tex, const MaterialState& mat, const FlowState& flow,
                             double field);

// Analytic gradient of total_energy w.r.t. the nodal angles; the pinned
// axis component g_beta[0] is exactly zero.
void energy_gradient(const Texture& tex, const MaterialState& mat, const FlowState& flow,
                     double field, std::vector<double>& g_alpha, std::vector<double>& g_beta);

struct MinimizeOptions {
  double gtol_rel = 1e-9;   // on the gradient max-norm, relative to the energy scale
  double etol_rel = 1e-12;  // on the relative energy change of the last step
  int max_iterations = 50000;
  int history = 10;         // quasi-Newton memory
};

// Straight-line initial texture: beta from 0 to asin(sqrt(0.8)) for
// simple/parted, to pi - asin(sqrt(0.8)) for extended; constant alpha at the
// flow-preferred wall orientation.
Texture initial_guess(Branch branch, const RadialGrid& grid);

// Line-searched quasi-Newton descent to the local minimum reachable from the
// initial texture.  The wall angle relaxes under the surface term, which
// keeps the two flare-out families distinct local minima near the first-order
// transition.
Texture minimize(const Texture& initial, const MaterialState& mat, const FlowState& flow,
                 double field, const MinimizeOptions& opts = {});

struct PotentialWell {
  std::vector<double> u;  // sin^2 beta on the grid
  // for the extended branch: radial window between the 90-degree crossing
  // and the wall
  std::optional<std::pair<double, double>> well;
};

PotentialWell potential_well(const Texture& tex);

bool has_ninety_crossing(const Texture& tex);
bool has_plateau(const Texture& tex);
Branch classify_branch(const Texture& tex);

// Columnar text serialization: header block with branch, energy and a
// parameter hash, then r[m], alpha[rad], beta[rad] rows.
std::string texture_to_text(const Texture& tex, const std::string& params_hash = "");
Texture texture_from_text(const std::string& text);

}  // namespace texlab
