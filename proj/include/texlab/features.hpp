#pragma once

#include <optional>
#include <string>

#include "texlab/spectrum.hpp"

namespace texlab {

struct Peak {
  double height = 0.0;    // absorption (1/axis-unit)
  double position = 0.0;  // reduced shift
};

struct SpectralFeatures {
  std::optional<Peak> cf_peak;
  std::optional<Peak> ninety_peak;
  std::optional<double> edge_shift;
  Branch branch_hint = Branch::simple;
  bool peak_collision = false;  // cf and 90-degree windows both triggered near the boundary
};

// Highest local maximum in the window (0.3, 0.95) of a normalized
// reduced-axis spectrum; absent below the prominence threshold.
std::optional<Peak> cf_peak(const Spectrum& spec);

// Local maximum nearest reduced shift 1 within (0.95, 1.05).
std::optional<Peak> ninety_degree_peak(const Spectrum& spec);

// Abscissa where the tangent at the steepest descent of the high-frequency
// edge meets the baseline.
double edge_shift(const Spectrum& spec);

// dA = int |m - c| dx / int m dx on a common grid.
double area_mismatch(const Spectrum& measured, const Spectrum& calculated);

// Pointwise |m - c| on the measured grid.
Spectrum surface_peak_residual(const Spectrum& measured, const Spectrum& calculated);

SpectralFeatures extract_features(const Spectrum& spec);

std::string features_to_json(const SpectralFeatures& f);

}  // namespace texlab
