#pragma once

#include <string>
#include <vector>

#include "texlab/texture.hpp"

namespace texlab {

enum class SpectrumAxis { field, frequency_shift, reduced_shift };

const char* axis_name(SpectrumAxis a);
SpectrumAxis axis_from_name(const std::string& s);

// Sampled absorption spectrum; x strictly increasing, absorption is a density
// per axis unit.
struct Spectrum {
  SpectrumAxis axis = SpectrumAxis::reduced_shift;
  std::vector<double> x;
  std::vector<double> absorption;
  // provenance metadata
  double nu_rf = 0.0;        // Hz
  double larmor_field = 0.0; // T
  double leggett_hz = 0.0;   // Omega_B/2pi
  double dhoverh = 0.0;
  bool normalized = false;
};

// sin^2(beta): the reduced frequency shift of a local oscillator.
double reduced_shift(double beta);

// dnu = dnu_tilde * nu_B^2 / (2 nu_L), the high-field transverse shift in Hz.
double shift_to_frequency(double dnu_tilde, double leggett_hz, double larmor_hz);

// dnu = (H_L - H) H / H_L^2 * nu_rf, the field-sweep conversion.
double field_to_frequency(double field, double larmor_field, double nu_rf);

struct SpectrumGrid {
  int bins = 2048;
  double lo = -0.05;
  double hi = 1.05;
};

double integral(const Spectrum& spec);  // trapezoid

// Local-oscillator line shape on the reduced axis: each annulus 2 pi r dr
// deposits its area at sin^2(beta(r)), spread area-preservingly over the bins
// its beta interval covers.
Spectrum line_shape(const Texture& tex, const SpectrumGrid& grid = {});

// Lorentzian dephasing by field inhomogeneity: half-width nu_rf*(dH/H) in the
// frequency domain, mapped to the reduced axis with 2 nu_L / nu_B^2.
Spectrum broaden(const Spectrum& spec, double dhoverh, double nu_rf, double leggett_hz,
                 double larmor_hz);

Spectrum normalize(const Spectrum& spec);

// Axis conversions (densities transform with the Jacobian).
Spectrum to_frequency_axis(const Spectrum& reduced, double leggett_hz, double larmor_hz);
Spectrum to_reduced_axis(const Spectrum& freq, double leggett_hz, double larmor_hz);
Spectrum field_to_frequency_axis(const Spectrum& field_spec);

// CSV with '# key=value' metadata header; bit-exact round trip.
std::string spectrum_to_csv(const Spectrum& spec);
Spectrum spectrum_from_csv(const std::string& text);
void write_spectrum(const Spectrum& spec, const std::string& path);
Spectrum read_spectrum(const std::string& path);

}  // namespace texlab
