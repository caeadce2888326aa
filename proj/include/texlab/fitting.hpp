#pragma once

#include <optional>
#include <string>
#include <vector>

#include "texlab/features.hpp"
#include "texlab/material.hpp"
#include "texlab/spectrum.hpp"
#include "texlab/texture.hpp"

namespace texlab {

// Fixed experimental context for the texture -> spectrum forward model.
struct ForwardContext {
  double omega = 0.0;
  double omega_v = 0.0;
  double radius = 3e-3;
  double kappa = kappa_default;
  double pressure = 29.0;
  double nu_rf = 965.0e3;          // Hz; also the Larmor frequency on resonance
  double larmor_field = 29.75e-3;  // T
  Branch branch = Branch::parted;
  GapModel::Kind gap_kind = GapModel::Kind::scaled;
  double grid_step = 15e-6;
  SpectrumGrid spectral_grid{};
  const ParameterTable* table = nullptr;
  MinimizeOptions minimize_opts{};
  // fixes lambda_HV instead of evaluating it from theory (scans, anchored fits)
  std::optional<double> lambda_hv_override;
};

struct ForwardResult {
  Spectrum spectrum;  // reduced axis, broadened, normalized
  Texture texture;
  MaterialState material;
};

// MaterialState with lambda_HV override -> minimize from the branch guess ->
// line shape -> broaden -> normalize.
ForwardResult forward_model(double t, double lambda_hv_value, double dhoverh,
                            const ForwardContext& ctx);

struct FitParam {
  bool free = false;
  double initial = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

enum class FitStrategy { single_spectrum, dual_texture_pair, omega_c1_anchor };

struct FitConfig {
  FitParam T;
  FitParam lambda_HV;
  FitParam dHoverH;
  FitStrategy strategy = FitStrategy::single_spectrum;
  double objective_tol = 1e-4;
  double degeneracy_tol = 2e-3;  // flatness triggering the degeneracy error
  int max_evaluations = 400;
};

struct FitCriteria {
  bool edge_overlap = false;   // |edge_m - edge_c| < 0.01 in reduced units
  bool cf_peak_match = false;  // height within dA relative, position within 0.01
  bool area_ok = false;        // dA < 0.1
};

struct FitResult {
  double t = 0.0;
  double lambda_hv = 0.0;
  double lambda_lo = 0.0, lambda_hi = 0.0;  // uncertainty interval
  double dhoverh = 0.0;
  double deltaA = 0.0;
  FitCriteria criteria;
  Spectrum calculated;        // final forward spectrum (reduced, normalized)
  Spectrum measured_reduced;  // measured converted at the fitted T
  std::vector<std::string> trace;
};

struct FitInput {
  Spectrum measured;  // frequency axis, normalized
  ForwardContext ctx;
  // dual_texture_pair: second spectrum (other branch) at the same temperature
  std::optional<Spectrum> measured_secondary;
  std::optional<ForwardContext> ctx_secondary;
  // omega_c1_anchor: measured critical velocity
  std::optional<double> omega_c1_measured;
};

FitResult fit_spectrum(const FitInput& input, const FitConfig& cfg);

FitCriteria compute_criteria(const Spectrum& measured_reduced, const Spectrum& calculated,
                             double deltaA);

// Sampled lambda_HV -> cf-peak-height map around a center value.
std::vector<std::pair<double, double>> sample_lambda_sensitivity(
    double t, double dhoverh, const ForwardContext& ctx, double lambda_center,
    double span = 2.0, double step = 1.0, int workers = 1);

// chi'_cfp(1 +- dA) inverted through the sensitivity map.
std::pair<double, double> lambda_uncertainty(const FitResult& fit,
                                             const std::vector<std::pair<double, double>>& map);

// Ratio of integrated raw absorptions, superfluid over normal phase.
double susceptibility_from_areas(const Spectrum& superfluid_raw, const Spectrum& normal_raw);

struct IngestOptions {
  // off-resonance field window used for the linear baseline fit (T units)
  double baseline_lo = 0.0;
  double baseline_hi = 0.0;
  double sweep_lag_s = 0.0;       // inductive delay of the magnet
  double max_dtdt = 5e-5;         // admission filter on |dT/dt| metadata, Tc/s
};

// Reads a two-column field sweep with '# key=value' metadata (H_L, nu_rf,
// sweep_rate, optional dTdt), subtracts the linear baseline, corrects the
// sweep lag and converts to a normalized frequency-shift spectrum.  If
// leggett_hz > 0 the result is further converted to the reduced axis.
Spectrum ingest_measured(const std::string& path, const IngestOptions& opts,
                         double leggett_hz = 0.0);
Spectrum ingest_measured_text(const std::string& text, const IngestOptions& opts,
                              double leggett_hz = 0.0);

}  // namespace texlab
