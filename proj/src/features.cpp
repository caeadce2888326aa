#include "texlab/features.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "texlab/errors.hpp"

namespace texlab {

namespace {

constexpr double kCfLo = 0.3, kCfHi = 0.95;
constexpr double kNinetyLo = 0.95, kNinetyHi = 1.05;
constexpr double kProminenceFrac = 0.02;

std::vector<double> smooth3(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    double s = v[i];
    int n = 1;
    if (i > 0) { s += v[i - 1]; ++n; }
    if (i + 1 < v.size()) { s += v[i + 1]; ++n; }
    out[i] = s / n;
  }
  return out;
}

// Prominence of the local maximum at index p: height above the higher of the
// two minima separating it from higher ground (or from the trace ends).
double prominence(const std::vector<double>& v, size_t p) {
  double left_min = v[p];
  for (size_t i = p; i-- > 0;) {
    if (v[i] > v[p]) break;
    left_min = std::min(left_min, v[i]);
  }
  double right_min = v[p];
  for (size_t i = p + 1; i < v.size(); ++i) {
    if (v[i] > v[p]) break;
    right_min = std::min(right_min, v[i]);
  }
  return v[p] - std::max(left_min, right_min);
}

std::optional<Peak> peak_in_window(const Spectrum& spec, double lo, double hi, bool nearest_one) {
  if (!spec.normalized) throw NumericsError("peak extraction requires a normalized spectrum");
  if (spec.axis != SpectrumAxis::reduced_shift)
    throw NumericsError("peak extraction requires the reduced axis");
  const auto sm = smooth3(spec.absorption);
  double global_max = 0.0;
  for (double v : sm) global_max = std::max(global_max, v);
  const double thresh = kProminenceFrac * global_max;

  std::optional<Peak> best;
  for (size_t i = 1; i + 1 < sm.size(); ++i) {
    if (spec.x[i] <= lo || spec.x[i] >= hi) continue;
    if (!(sm[i] >= sm[i - 1] && sm[i] > sm[i + 1])) continue;
    if (prominence(sm, i) < thresh) continue;
    // quadratic refinement of the apex from the smoothed neighbors
    const double d1 = 0.5 * (sm[i + 1] - sm[i - 1]);
    const double d2 = sm[i + 1] - 2.0 * sm[i] + sm[i - 1];
    double xpk = spec.x[i];
    if (d2 < 0.0) xpk -= d1 / d2 * (spec.x[1] - spec.x[0]);
    const Peak cand{spec.absorption[i], xpk};
    if (!best) {
      best = cand;
    } else if (nearest_one ? (std::abs(xpk - 1.0) < std::abs(best->position - 1.0))
                           : (cand.height > best->height)) {
      best = cand;
    }
  }
  return best;
}

}  // namespace

std::optional<Peak> cf_peak(const Spectrum& spec) {
  return peak_in_window(spec, kCfLo, kCfHi, false);
}

std::optional<Peak> ninety_degree_peak(const Spectrum& spec) {
  return peak_in_window(spec, kNinetyLo, kNinetyHi, true);
}

double edge_shift(const Spectrum& spec) {
  if (!spec.normalized) throw NumericsError("edge_shift requires a normalized spectrum");
  const size_t n = spec.x.size();
  if (n < 8) throw NumericsError("edge_shift: spectrum too short");
  const auto sm = smooth3(spec.absorption);

  size_t imax = 0;
  for (size_t i = 0; i < n; ++i)
    if (sm[i] > sm[imax]) imax = i;

  // steepest descending 5-bin run beyond the global maximum
  constexpr size_t W = 5;
  double best_slope = 0.0;
  size_t best_i = 0;
  for (size_t i = imax; i + W <= n; ++i) {
    const double slope = (sm[i + W - 1] - sm[i]) / (spec.x[i + W - 1] - spec.x[i]);
    if (slope < best_slope) {
      best_slope = slope;
      best_i = i;
    }
  }
  if (best_slope >= 0.0) throw NumericsError("edge_shift: no descending edge found");

  // least-squares line through the window, intersect with the baseline
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t k = 0; k < W; ++k) {
    const double x = spec.x[best_i + k], y = sm[best_i + k];
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = W * sxx - sx * sx;
  const double slope = (W * sxy - sx * sy) / denom;
  const double icept = (sy - slope * sx) / W;
  if (slope >= 0.0) throw NumericsError("edge_shift: degenerate tangent");
  return -icept / slope;
}

namespace {

// resample `src` onto grid `x` with linear interpolation, zero outside
std::vector<double> resample(const Spectrum& src, const std::vector<double>& x) {
  std::vector<double> out(x.size(), 0.0);
  for (size_t i = 0; i < x.size(); ++i) {
    const double v = x[i];
    if (v < src.x.front() || v > src.x.back()) continue;
    auto it = std::lower_bound(src.x.begin(), src.x.end(), v);
    size_t hi = it - src.x.begin();
    if (hi == 0) { out[i] = src.absorption[0]; continue; }
    if (hi >= src.x.size()) { out[i] = src.absorption.back(); continue; }
    const size_t lo = hi - 1;
    const double w = (v - src.x[lo]) / (src.x[hi] - src.x[lo]);
    out[i] = src.absorption[lo] + w * (src.absorption[hi] - src.absorption[lo]);
  }
  return out;
}

}  // namespace

double area_mismatch(const Spectrum& measured, const Spectrum& calculated) {
  if (measured.axis != calculated.axis)
    throw NumericsError("area_mismatch: spectra on different axes");
  const auto calc = resample(calculated, measured.x);
  double num = 0.0, den = 0.0;
  for (size_t i = 1; i < measured.x.size(); ++i) {
    const double dx = measured.x[i] - measured.x[i - 1];
    num += 0.5 * (std::abs(measured.absorption[i] - calc[i]) +
                  std::abs(measured.absorption[i - 1] - calc[i - 1])) * dx;
    den += 0.5 * (measured.absorption[i] + measured.absorption[i - 1]) * dx;
  }
  if (!(den > 0.0)) throw NumericsError("area_mismatch: measured spectrum has no area");
  return num / den;
}

Spectrum surface_peak_residual(const Spectrum& measured, const Spectrum& calculated) {
  if (measured.axis != calculated.axis)
    throw NumericsError("surface_peak_residual: spectra on different axes");
  const auto calc = resample(calculated, measured.x);
  Spectrum out = measured;
  out.normalized = false;
  for (size_t i = 0; i < out.absorption.size(); ++i)
    out.absorption[i] = std::abs(measured.absorption[i] - calc[i]);
  return out;
}

SpectralFeatures extract_features(const Spectrum& spec) {
  SpectralFeatures f;
  f.cf_peak = cf_peak(spec);
  f.ninety_peak = ninety_degree_peak(spec);
  try {
    f.edge_shift = edge_shift(spec);
  } catch (const NumericsError&) {
    f.edge_shift.reset();
  }
  if (f.ninety_peak) f.branch_hint = Branch::extended;
  else if (f.cf_peak) f.branch_hint = Branch::parted;
  else f.branch_hint = Branch::simple;
  if (f.cf_peak && f.ninety_peak &&
      std::abs(f.cf_peak->position - f.ninety_peak->position) < 0.08)
    f.peak_collision = true;
  return f;
}

std::string features_to_json(const SpectralFeatures& f) {
  std::ostringstream os;
  os.precision(12);
  os << "{";
  auto peak = [&](const char* name, const std::optional<Peak>& p) {
    os << "\"" << name << "\":";
    if (p) os << "{\"height\":" << p->height << ",\"position\":" << p->position << "}";
    else os << "null";
  };
  peak("cf_peak", f.cf_peak);
  os << ",";
  peak("ninety_peak", f.ninety_peak);
  os << ",\"edge_shift\":";
  if (f.edge_shift) os << *f.edge_shift;
  else os << "null";
  os << ",\"branch_hint\":\"" << branch_name(f.branch_hint) << "\"";
  os << ",\"peak_collision\":" << (f.peak_collision ? "true" : "false");
  os << "}";
  return os.str();
}

}  // namespace texlab
