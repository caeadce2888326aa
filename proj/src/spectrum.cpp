#include "texlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "texlab/errors.hpp"

namespace texlab {

const char* axis_name(SpectrumAxis a) {
  switch (a) {
    case SpectrumAxis::field: return "field";
    case SpectrumAxis::frequency_shift: return "frequency_shift";
    case SpectrumAxis::reduced_shift: return "reduced_shift";
  }
  return "?";
}

SpectrumAxis axis_from_name(const std::string& s) {
  if (s == "field") return SpectrumAxis::field;
  if (s == "frequency_shift") return SpectrumAxis::frequency_shift;
  if (s == "reduced_shift") return SpectrumAxis::reduced_shift;
  throw ConfigError("unknown spectrum axis: " + s);
}

double reduced_shift(double beta) {
  const double s = std::sin(beta);
  return s * s;
}

double shift_to_frequency(double dnu_tilde, double leggett_hz, double larmor_hz) {
  if (larmor_hz <= 0.0) throw NumericsError("shift_to_frequency: larmor frequency must be positive");
  return dnu_tilde * leggett_hz * leggett_hz / (2.0 * larmor_hz);
}

double field_to_frequency(double field, double larmor_field, double nu_rf) {
  if (field <= 0.0 || larmor_field <= 0.0)
    throw NumericsError("field_to_frequency: fields must be positive");
  return (larmor_field - field) * field / (larmor_field * larmor_field) * nu_rf;
}

double integral(const Spectrum& spec) {
  double sum = 0.0;
  for (size_t i = 1; i < spec.x.size(); ++i)
    sum += 0.5 * (spec.absorption[i] + spec.absorption[i - 1]) * (spec.x[i] - spec.x[i - 1]);
  return sum;
}

namespace {

// Deposit mass at position x into the two neighboring bins, area preserving.
inline void deposit(std::vector<double>& bins, double lo, double dx, double x, double mass) {
  const double pos = (x - lo) / dx - 0.5;  // bin centers at lo + (k+0.5) dx
  const long k = static_cast<long>(std::floor(pos));
  const double f = pos - k;
  if (k >= 0 && k < static_cast<long>(bins.size())) bins[k] += mass * (1.0 - f);
  if (k + 1 >= 0 && k + 1 < static_cast<long>(bins.size())) bins[k + 1] += mass * f;
}

}  // namespace

Spectrum line_shape(const Texture& tex, const SpectrumGrid& grid) {
  if (grid.bins < 8 || grid.hi <= grid.lo) throw ConfigError("line_shape: bad spectral grid");
  const double dx = (grid.hi - grid.lo) / grid.bins;
  std::vector<double> mass(grid.bins, 0.0);

  const int m = tex.grid.m;
  const double h = tex.grid.step;
  for (int i = 0; i < m; ++i) {
    const double b0 = tex.beta[i], b1 = tex.beta[i + 1];
    const double x0 = reduced_shift(b0), x1 = reduced_shift(b1);
    // subdivide so each sub-deposit spans less than half a bin
    const int k = std::clamp(static_cast<int>(std::ceil(std::abs(x1 - x0) / (0.5 * dx))) + 1, 1, 4096);
    for (int s = 0; s < k; ++s) {
      const double f = (s + 0.5) / k;
      const double r = (i + f) * h;
      const double beta = b0 + f * (b1 - b0);
      const double w = 2.0 * pi * r * h / k;  // annulus area of the sub-interval
      deposit(mass, grid.lo, dx, reduced_shift(beta), w);
    }
  }

  Spectrum spec;
  spec.axis = SpectrumAxis::reduced_shift;
  spec.x.resize(grid.bins);
  spec.absorption.resize(grid.bins);
  for (int i = 0; i < grid.bins; ++i) {
    spec.x[i] = grid.lo + (i + 0.5) * dx;
    spec.absorption[i] = mass[i] / dx;
  }
  return spec;
}

Spectrum broaden(const Spectrum& spec, double dhoverh, double nu_rf, double leggett_hz,
                 double larmor_hz) {
  if (dhoverh < 0.0) throw NumericsError("broaden: dH/H must be non-negative");
  if (spec.axis != SpectrumAxis::reduced_shift)
    throw NumericsError("broaden: expected a reduced-axis spectrum");
  Spectrum out = spec;
  out.dhoverh = dhoverh;
  out.nu_rf = nu_rf;
  out.leggett_hz = leggett_hz;
  if (dhoverh == 0.0) return out;

  const double scale = leggett_hz * leggett_hz / (2.0 * larmor_hz);  // Hz per reduced unit
  const double gamma = nu_rf * dhoverh / scale;                      // half width, reduced units
  const size_t n = spec.x.size();
  if (n < 2) return out;
  const double dx = spec.x[1] - spec.x[0];
  const long halfwin = std::max<long>(1, std::lround(std::ceil(50.0 * gamma / dx)));

  // precompute the kernel once; per source bin it is clipped at the grid
  // edges and renormalized so mass is conserved exactly
  std::vector<double> kernel(2 * halfwin + 1);
  for (long k = -halfwin; k <= halfwin; ++k) {
    const double u = k * dx;
    kernel[k + halfwin] = gamma / (pi * (u * u + gamma * gamma)) * dx;
  }

  std::vector<double> result(n, 0.0);
  for (size_t j = 0; j < n; ++j) {
    const double mass = spec.absorption[j] * dx;
    if (mass == 0.0) continue;
    const long lo = std::max<long>(0, static_cast<long>(j) - halfwin);
    const long hi = std::min<long>(n - 1, static_cast<long>(j) + halfwin);
    double ksum = 0.0;
    for (long i = lo; i <= hi; ++i) ksum += kernel[i - j + halfwin];
    const double inv = mass / (ksum * dx);
    for (long i = lo; i <= hi; ++i) result[i] += kernel[i - j + halfwin] * inv;
  }
  out.absorption = std::move(result);
  out.normalized = false;
  return out;
}

Spectrum normalize(const Spectrum& spec) {
  const double area = integral(spec);
  if (!(area > 0.0)) throw NumericsError("normalize: spectrum area is not positive");
  Spectrum out = spec;
  for (double& v : out.absorption) v /= area;
  out.normalized = true;
  return out;
}

Spectrum to_frequency_axis(const Spectrum& reduced, double leggett_hz, double larmor_hz) {
  if (reduced.axis != SpectrumAxis::reduced_shift)
    throw NumericsError("to_frequency_axis: expected reduced axis");
  const double s = leggett_hz * leggett_hz / (2.0 * larmor_hz);
  Spectrum out = reduced;
  out.axis = SpectrumAxis::frequency_shift;
  out.leggett_hz = leggett_hz;
  for (size_t i = 0; i < out.x.size(); ++i) {
    out.x[i] = reduced.x[i] * s;
    out.absorption[i] = reduced.absorption[i] / s;
  }
  return out;
}

Spectrum to_reduced_axis(const Spectrum& freq, double leggett_hz, double larmor_hz) {
  if (freq.axis != SpectrumAxis::frequency_shift)
    throw NumericsError("to_reduced_axis: expected frequency axis");
  const double s = leggett_hz * leggett_hz / (2.0 * larmor_hz);
  Spectrum out = freq;
  out.axis = SpectrumAxis::reduced_shift;
  out.leggett_hz = leggett_hz;
  for (size_t i = 0; i < out.x.size(); ++i) {
    out.x[i] = freq.x[i] / s;
    out.absorption[i] = freq.absorption[i] * s;
  }
  return out;
}

Spectrum field_to_frequency_axis(const Spectrum& field_spec) {
  if (field_spec.axis != SpectrumAxis::field)
    throw NumericsError("field_to_frequency_axis: expected field axis");
  if (field_spec.nu_rf <= 0.0 || field_spec.larmor_field <= 0.0)
    throw ConfigError("field_to_frequency_axis: missing nu_rf / larmor field metadata");
  const double hl = field_spec.larmor_field;
  Spectrum out;
  out = field_spec;
  out.axis = SpectrumAxis::frequency_shift;
  const size_t n = field_spec.x.size();
  out.x.resize(n);
  out.absorption.resize(n);
  // decreasing field maps to increasing frequency shift; reverse the order
  for (size_t i = 0; i < n; ++i) {
    const size_t j = n - 1 - i;
    const double H = field_spec.x[j];
    out.x[i] = field_to_frequency(H, hl, field_spec.nu_rf);
    const double jac = std::abs(field_spec.nu_rf * (hl - 2.0 * H) / (hl * hl));
    out.absorption[i] = field_spec.absorption[j] / std::max(jac, 1e-300);
  }
  for (size_t i = 1; i < n; ++i)
    if (out.x[i] <= out.x[i - 1])
      throw NumericsError("field_to_frequency_axis: non-monotone converted axis");
  return out;
}

std::string spectrum_to_csv(const Spectrum& spec) {
  std::ostringstream os;
  char buf[160];
  os << "# texlab spectrum v1\n";
  os << "# axis=" << axis_name(spec.axis) << "\n";
  std::snprintf(buf, sizeof buf, "# nu_rf=%.17g\n", spec.nu_rf);
  os << buf;
  std::snprintf(buf, sizeof buf, "# H_L=%.17g\n", spec.larmor_field);
  os << buf;
  std::snprintf(buf, sizeof buf, "# Omega_B=%.17g\n", spec.leggett_hz);
  os << buf;
  std::snprintf(buf, sizeof buf, "# dHoverH=%.17g\n", spec.dhoverh);
  os << buf;
  os << "# normalized=" << (spec.normalized ? 1 : 0) << "\n";
  os << "x,absorption\n";
  for (size_t i = 0; i < spec.x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", spec.x[i], spec.absorption[i]);
    os << buf;
  }
  return os.str();
}

Spectrum spectrum_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Spectrum spec;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eat = [&](const char* key) -> const char* {
        const std::string prefix = std::string("# ") + key + "=";
        if (line.rfind(prefix, 0) == 0) return line.c_str() + prefix.size();
        return nullptr;
      };
      if (const char* v = eat("axis")) spec.axis = axis_from_name(v);
      else if (const char* v2 = eat("nu_rf")) spec.nu_rf = std::strtod(v2, nullptr);
      else if (const char* v3 = eat("H_L")) spec.larmor_field = std::strtod(v3, nullptr);
      else if (const char* v4 = eat("Omega_B")) spec.leggett_hz = std::strtod(v4, nullptr);
      else if (const char* v5 = eat("dHoverH")) spec.dhoverh = std::strtod(v5, nullptr);
      else if (const char* v6 = eat("normalized")) spec.normalized = std::atoi(v6) != 0;
      continue;
    }
    if (line.rfind("x,", 0) == 0) continue;
    double x, y;
    if (std::sscanf(line.c_str(), "%lg,%lg", &x, &y) != 2)
      throw ConfigError("spectrum_from_csv: malformed row: " + line);
    spec.x.push_back(x);
    spec.absorption.push_back(y);
  }
  for (size_t i = 1; i < spec.x.size(); ++i)
    if (spec.x[i] <= spec.x[i - 1]) throw ConfigError("spectrum_from_csv: x not increasing");
  return spec;
}

void write_spectrum(const Spectrum& spec, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  os << spectrum_to_csv(spec);
}

Spectrum read_spectrum(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return spectrum_from_csv(ss.str());
}

}  // namespace texlab
