#include "texlab/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>

#include "texlab/errors.hpp"
#include "texlab/scan.hpp"

namespace texlab {

ForwardResult forward_model(double t, double lambda_hv_value, double dhoverh,
                            const ForwardContext& ctx) {
  if (!ctx.table) throw ConfigError("forward_model: no parameter table in context");
  ForwardResult out;
  out.material = MaterialState::create(t, ctx.pressure, ctx.gap_kind, *ctx.table, lambda_hv_value);
  const FlowState flow = FlowState::make(ctx.omega, ctx.omega_v, ctx.radius, ctx.kappa);
  const RadialGrid grid = RadialGrid::make(ctx.radius, ctx.grid_step);
  Texture guess = initial_guess(ctx.branch, grid);
  out.texture = minimize(guess, out.material, flow, ctx.larmor_field, ctx.minimize_opts);
  if (!out.texture.converged)
    throw NumericsError("forward_model: texture minimization did not converge");
  Spectrum raw = line_shape(out.texture, ctx.spectral_grid);
  Spectrum broad =
      broaden(raw, dhoverh, ctx.nu_rf, out.material.leggett_hz, ctx.nu_rf);
  out.spectrum = normalize(broad);
  return out;
}

namespace {

double nu_b_squared_scale(double leggett_hz, double nu_l) {
  return leggett_hz * leggett_hz / (2.0 * nu_l);
}

// measured frequency-axis spectrum converted to the reduced axis at the
// Leggett frequency implied by temperature t
Spectrum reduce_measured(const Spectrum& measured_freq, double t, const ForwardContext& ctx) {
  const double nu_b = leggett_frequency(t, ctx.table->leggett());
  Spectrum red = to_reduced_axis(measured_freq, nu_b, ctx.nu_rf);
  return normalize(red);
}

// Golden-section minimization of a 1D function on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol,
                  int max_iter = 60) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

// Nelder-Mead on a box; coordinates are scaled to [0,1] per parameter.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, const std::vector<double>& lo,
                                const std::vector<double>& hi, double ftol, int max_eval) {
  const size_t n = x0.size();
  auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
  auto to_unit = [&](const std::vector<double>& x) {
    std::vector<double> u(n);
    for (size_t i = 0; i < n; ++i) u[i] = (x[i] - lo[i]) / (hi[i] - lo[i]);
    return u;
  };
  auto from_unit = [&](const std::vector<double>& u) {
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = lo[i] + clamp01(u[i]) * (hi[i] - lo[i]);
    return x;
  };
  int evals = 0;
  auto feval = [&](const std::vector<double>& u) {
    ++evals;
    return f(from_unit(u));
  };

  std::vector<std::vector<double>> simplex;
  std::vector<double> fv;
  simplex.push_back(to_unit(x0));
  fv.push_back(feval(simplex[0]));
  for (size_t i = 0; i < n; ++i) {
    auto u = simplex[0];
    u[i] = clamp01(u[i] + (u[i] > 0.6 ? -0.15 : 0.15));
    simplex.push_back(u);
    fv.push_back(feval(u));
  }

  while (evals < max_eval) {
    // order
    std::vector<size_t> idx(simplex.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> s2;
    std::vector<double> f2;
    for (size_t i : idx) {
      s2.push_back(simplex[i]);
      f2.push_back(fv[i]);
    }
    simplex.swap(s2);
    fv.swap(f2);
    if (std::abs(fv.back() - fv.front()) < ftol) break;

    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i + 1 < simplex.size(); ++i)
      for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;

    auto blend = [&](double c) {
      std::vector<double> u(n);
      for (size_t j = 0; j < n; ++j) u[j] = clamp01(centroid[j] + c * (centroid[j] - simplex.back()[j]));
      return u;
    };
    auto xr = blend(1.0);
    double fr = feval(xr);
    if (fr < fv.front()) {
      auto xe = blend(2.0);
      double fe = feval(xe);
      if (fe < fr) { simplex.back() = xe; fv.back() = fe; }
      else { simplex.back() = xr; fv.back() = fr; }
    } else if (fr < fv[fv.size() - 2]) {
      simplex.back() = xr;
      fv.back() = fr;
    } else {
      auto xc = blend(fr < fv.back() ? 0.5 : -0.5);
      double fc = feval(xc);
      if (fc < std::min(fr, fv.back())) { simplex.back() = xc; fv.back() = fc; }
      else {
        // shrink toward the best vertex
        for (size_t i = 1; i < simplex.size(); ++i) {
          for (size_t j = 0; j < n; ++j)
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          fv[i] = feval(simplex[i]);
        }
      }
    }
  }
  size_t best = 0;
  for (size_t i = 1; i < fv.size(); ++i)
    if (fv[i] < fv[best]) best = i;
  return from_unit(simplex[best]);
}

// Solve leggett_frequency(t) = nu_b for t in (lo, hi); the fit formula is
// monotone decreasing there.
double invert_leggett(double nu_b, const LeggettFit& fit, double lo, double hi) {
  auto f = [&](double t) { return leggett_frequency(t, fit) - nu_b; };
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa * fb > 0.0) return fa > 0 ? hi : lo;  // outside; clamp to the nearer bound
  for (int i = 0; i < 100; ++i) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if ((fa < 0) == (fm < 0)) { a = m; fa = fm; }
    else { b = m; fb = fm; }
  }
  return 0.5 * (a + b);
}

}  // namespace

FitCriteria compute_criteria(const Spectrum& measured_reduced, const Spectrum& calculated,
                             double deltaA) {
  FitCriteria c;
  c.area_ok = deltaA < 0.1;
  try {
    const double em = edge_shift(measured_reduced);
    const double ec = edge_shift(calculated);
    c.edge_overlap = std::abs(em - ec) < 0.01;
  } catch (const NumericsError&) {
    c.edge_overlap = false;
  }
  const auto pm = cf_peak(measured_reduced);
  const auto pc = cf_peak(calculated);
  if (!pm && !pc) {
    c.cf_peak_match = true;
  } else if (pm && pc) {
    const double hrel = std::abs(pm->height - pc->height) / std::max(pm->height, 1e-300);
    c.cf_peak_match = hrel <= std::max(deltaA, 1e-3) + 1e-12 &&
                      std::abs(pm->position - pc->position) < 0.01;
  } else {
    c.cf_peak_match = false;
  }
  return c;
}

FitResult fit_spectrum(const FitInput& input, const FitConfig& cfg) {
  const ForwardContext& ctx = input.ctx;
  if (!ctx.table) throw ConfigError("fit_spectrum: no parameter table in context");
  if (!input.measured.normalized || input.measured.axis != SpectrumAxis::frequency_shift)
    throw NumericsError("fit_spectrum: measured spectrum must be normalized, frequency axis");
  if (cfg.strategy == FitStrategy::dual_texture_pair &&
      (!input.measured_secondary || !input.ctx_secondary))
    throw ConfigError("fit_spectrum: dual_texture_pair needs a secondary spectrum and context");
  if (cfg.strategy == FitStrategy::omega_c1_anchor && !input.omega_c1_measured)
    throw ConfigError("fit_spectrum: omega_c1_anchor needs the measured critical velocity");

  FitResult res;
  std::vector<std::string>& trace = res.trace;

  double T = cfg.T.initial;
  double lam = cfg.lambda_HV.initial;
  double dh = cfg.dHoverH.initial;

  const double t_lo = cfg.T.free ? cfg.T.lo : cfg.T.initial;
  const double t_hi = cfg.T.free ? cfg.T.hi : cfg.T.initial;

  // stage 1: temperature from the spectrum edge; the measured edge in Hz
  // equals 0.8 * nu_B(T)^2/(2 nu_L) when the wall angle sits at sin^2 b = 0.8
  if (cfg.T.free) {
    Spectrum m = input.measured;
    const double edge_hz = [&] {
      Spectrum tmp = m;
      tmp.normalized = true;
      // edge extraction works on any monotone axis; reuse the reduced-axis
      // validation by temporarily declaring the axis reduced
      tmp.axis = SpectrumAxis::reduced_shift;
      return edge_shift(tmp);
    }();
    const double want_nu_b = std::sqrt(std::max(edge_hz, 1e-9) / 0.8 * 2.0 * ctx.nu_rf);
    T = invert_leggett(want_nu_b, ctx.table->leggett(), std::max(0.02, t_lo * 0.8),
                       std::min(0.9, t_hi * 1.2));
    T = std::clamp(T, t_lo, t_hi);
    char buf[128];
    std::snprintf(buf, sizeof buf, "stage1: edge %.3g Hz -> T=%.5f", edge_hz, T);
    trace.push_back(buf);
  }

  auto objective = [&](double t, double l, double d) -> double {
    double total = 0.0;
    ForwardResult fw = forward_model(t, l, d, ctx);
    Spectrum mr = reduce_measured(input.measured, t, ctx);
    total += area_mismatch(mr, fw.spectrum);
    if (cfg.strategy == FitStrategy::dual_texture_pair) {
      ForwardResult fw2 = forward_model(t, l, d, *input.ctx_secondary);
      Spectrum mr2 = reduce_measured(*input.measured_secondary, t, *input.ctx_secondary);
      total += area_mismatch(mr2, fw2.spectrum);
    }
    return total;
  };

  // stage 2: flow / broadening parameters at fixed temperature
  if (cfg.strategy == FitStrategy::omega_c1_anchor) {
    // lambda_HV from the measured critical velocity: higher lambda_HV moves
    // omega_c1 down, so bisect on the monotone map
    ScanOptions sopts;
    sopts.dhoverh = dh;
    auto c1_of_lambda = [&](double l) {
      std::vector<ScanPoint> path;
      try {
        return scan_omega_c1(T, ctx.omega_v, 0.05, 3.0, [&] {
                 ForwardContext c = ctx;
                 c.branch = Branch::parted;
                 return c;
               }(), sopts, &path).value;
      } catch (const NotFoundError&) {
        return 3.0;
      }
    };
    double a = cfg.lambda_HV.lo, b = cfg.lambda_HV.hi;
    for (int i = 0; i < 12; ++i) {
      const double m = 0.5 * (a + b);
      if (c1_of_lambda(m) > *input.omega_c1_measured) a = m;  // need larger lambda
      else b = m;
    }
    lam = 0.5 * (a + b);
    trace.push_back("stage2: lambda_HV from omega_c1 anchor = " + std::to_string(lam));
    if (cfg.dHoverH.free) {
      dh = golden_min([&](double d) { return objective(T, lam, d); }, cfg.dHoverH.lo,
                      cfg.dHoverH.hi, 1e-7);
      trace.push_back("stage2: dHoverH = " + std::to_string(dh));
    }
  } else {
    const bool lam_free = cfg.lambda_HV.free;
    const bool dh_free = cfg.dHoverH.free;
    if (lam_free && dh_free) {
      auto got = nelder_mead(
          [&](const std::vector<double>& p) { return objective(T, p[0], p[1]); },
          {lam, dh}, {cfg.lambda_HV.lo, cfg.dHoverH.lo}, {cfg.lambda_HV.hi, cfg.dHoverH.hi},
          cfg.objective_tol, cfg.max_evaluations);
      lam = got[0];
      dh = got[1];
    } else if (lam_free) {
      lam = golden_min([&](double l) { return objective(T, l, dh); }, cfg.lambda_HV.lo,
                       cfg.lambda_HV.hi, 1e-5 * (cfg.lambda_HV.hi - cfg.lambda_HV.lo));
    } else if (dh_free) {
      dh = golden_min([&](double d) { return objective(T, lam, d); }, cfg.dHoverH.lo,
                      cfg.dHoverH.hi, 1e-5 * (cfg.dHoverH.hi - cfg.dHoverH.lo));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "stage2: lambda_HV=%.5g dHoverH=%.5g", lam, dh);
    trace.push_back(buf);
  }

  // stage 3: one temperature re-refinement, then a short joint polish
  if (cfg.T.free) {
    const double halfwin = std::max(0.01, 0.03 * T);
    const double lo = std::max(t_lo, T - halfwin), hi = std::min(t_hi, T + halfwin);
    T = golden_min([&](double t) { return objective(t, lam, dh); }, lo, hi, 1e-5);
    trace.push_back("stage3: refined T = " + std::to_string(T));
    if (cfg.lambda_HV.free && cfg.dHoverH.free) {
      auto got = nelder_mead(
          [&](const std::vector<double>& p) { return objective(T, p[0], p[1]); },
          {lam, dh}, {cfg.lambda_HV.lo, cfg.dHoverH.lo}, {cfg.lambda_HV.hi, cfg.dHoverH.hi},
          cfg.objective_tol * 0.1, cfg.max_evaluations / 2);
      lam = got[0];
      dh = got[1];
    } else if (cfg.lambda_HV.free) {
      const double w = 0.15 * (cfg.lambda_HV.hi - cfg.lambda_HV.lo);
      lam = golden_min([&](double l) { return objective(T, l, dh); },
                       std::max(cfg.lambda_HV.lo, lam - w), std::min(cfg.lambda_HV.hi, lam + w),
                       1e-6 * (cfg.lambda_HV.hi - cfg.lambda_HV.lo));
    }
  }

  // degeneracy probe for the joint single-spectrum fit: re-optimize dHoverH
  // on a lambda line spanning the bounds; a flat profile means the pair is
  // not separable from one spectrum
  if (cfg.strategy == FitStrategy::single_spectrum && cfg.lambda_HV.free && cfg.dHoverH.free) {
    const int K = 5;
    double lo_obj = 1e300, hi_obj = -1e300;
    for (int k = 0; k < K; ++k) {
      const double l = cfg.lambda_HV.lo + (cfg.lambda_HV.hi - cfg.lambda_HV.lo) * k / (K - 1.0);
      const double d =
          golden_min([&](double x) { return objective(T, l, x); }, cfg.dHoverH.lo, cfg.dHoverH.hi,
                     1e-3 * (cfg.dHoverH.hi - cfg.dHoverH.lo), 25);
      const double v = objective(T, l, d);
      lo_obj = std::min(lo_obj, v);
      hi_obj = std::max(hi_obj, v);
    }
    trace.push_back("degeneracy probe: dA span " + std::to_string(hi_obj - lo_obj));
    if (hi_obj - lo_obj < cfg.degeneracy_tol)
      throw DegeneracyError(
          "fit_spectrum: (lambda_HV, dHoverH) are degenerate for this spectrum; "
          "dA stays within " + std::to_string(hi_obj - lo_obj) + " across the lambda bounds",
          "lambda_HV", "dHoverH");
  }

  ForwardResult fw = forward_model(T, lam, dh, ctx);
  res.t = T;
  res.lambda_hv = lam;
  res.dhoverh = dh;
  res.calculated = fw.spectrum;
  res.measured_reduced = reduce_measured(input.measured, T, ctx);
  res.deltaA = area_mismatch(res.measured_reduced, res.calculated);
  res.criteria = compute_criteria(res.measured_reduced, res.calculated, res.deltaA);
  res.lambda_lo = res.lambda_hi = lam;
  return res;
}

std::vector<std::pair<double, double>> sample_lambda_sensitivity(double t, double dhoverh,
                                                                 const ForwardContext& ctx,
                                                                 double lambda_center, double span,
                                                                 double step, int workers) {
  if (step <= 0.0 || span <= 0.0) throw ConfigError("sample_lambda_sensitivity: bad grid");
  std::vector<double> lams;
  for (double l = lambda_center - span; l <= lambda_center + span + 1e-12; l += step)
    if (l > 0.0) lams.push_back(l);
  if (lams.size() < 2) throw ConfigError("sample_lambda_sensitivity: grid too small");

  auto eval = [&](double l) -> double {
    const auto fw = forward_model(t, l, dhoverh, ctx);
    const auto pk = cf_peak(fw.spectrum);
    return pk ? pk->height : 0.0;
  };

  std::vector<std::pair<double, double>> map(lams.size());
  if (workers > 1) {
    std::vector<std::future<double>> futs;
    futs.reserve(lams.size());
    for (double l : lams)
      futs.push_back(std::async(std::launch::async, eval, l));
    for (size_t i = 0; i < lams.size(); ++i) map[i] = {lams[i], futs[i].get()};
  } else {
    for (size_t i = 0; i < lams.size(); ++i) map[i] = {lams[i], eval(lams[i])};
  }
  return map;
}

std::pair<double, double> lambda_uncertainty(const FitResult& fit,
                                             const std::vector<std::pair<double, double>>& map) {
  if (map.size() < 2) throw MapInversionError("lambda_uncertainty: map too small", map);
  for (size_t i = 1; i < map.size(); ++i) {
    if (map[i].second <= map[i - 1].second)
      throw MapInversionError("lambda_uncertainty: sensitivity map is not strictly increasing",
                              map);
  }
  // cf-peak height at the fitted lambda, interpolated on the map
  auto height_at = [&](double lam) {
    if (lam <= map.front().first) return map.front().second;
    if (lam >= map.back().first) return map.back().second;
    for (size_t i = 1; i < map.size(); ++i) {
      if (lam <= map[i].first) {
        const double w = (lam - map[i - 1].first) / (map[i].first - map[i - 1].first);
        return map[i - 1].second + w * (map[i].second - map[i - 1].second);
      }
    }
    return map.back().second;
  };
  auto invert = [&](double h) -> double {
    // linear interpolation inside, end-slope extrapolation outside
    if (h <= map.front().second) {
      const double slope =
          (map[1].second - map[0].second) / (map[1].first - map[0].first);
      if (slope < 1e-12) throw MapInversionError("lambda_uncertainty: flat map end", map);
      return map.front().first + (h - map.front().second) / slope;
    }
    if (h >= map.back().second) {
      const size_t n = map.size();
      const double slope =
          (map[n - 1].second - map[n - 2].second) / (map[n - 1].first - map[n - 2].first);
      if (slope < 1e-12) throw MapInversionError("lambda_uncertainty: flat map end", map);
      return map.back().first + (h - map.back().second) / slope;
    }
    for (size_t i = 1; i < map.size(); ++i) {
      if (h <= map[i].second) {
        const double w = (h - map[i - 1].second) / (map[i].second - map[i - 1].second);
        return map[i - 1].first + w * (map[i].first - map[i - 1].first);
      }
    }
    return map.back().first;
  };

  const double h0 = height_at(fit.lambda_hv);
  const double lo = invert(h0 * (1.0 - fit.deltaA));
  const double hi = invert(h0 * (1.0 + fit.deltaA));
  return {lo, hi};
}

double susceptibility_from_areas(const Spectrum& superfluid_raw, const Spectrum& normal_raw) {
  if (superfluid_raw.normalized || normal_raw.normalized)
    throw NumericsError("susceptibility_from_areas: inputs must be un-normalized");
  const double den = integral(normal_raw);
  if (!(den > 0.0)) throw NumericsError("susceptibility_from_areas: normal-phase area is zero");
  return integral(superfluid_raw) / den;
}

namespace {

struct SweepData {
  std::vector<double> field, absorption;
  double larmor_field = 0.0, nu_rf = 0.0;
  double sweep_rate = 0.0;  // T/s, signed by sweep direction
  double dtdt = 0.0;        // Tc/s
  bool has_dtdt = false;
};

SweepData parse_sweep(const std::string& text) {
  SweepData d;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  double prev_field = 0.0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      double v;
      if (std::sscanf(line.c_str(), "# H_L=%lg", &v) == 1) d.larmor_field = v;
      else if (std::sscanf(line.c_str(), "# nu_rf=%lg", &v) == 1) d.nu_rf = v;
      else if (std::sscanf(line.c_str(), "# sweep_rate=%lg", &v) == 1) d.sweep_rate = v;
      else if (std::sscanf(line.c_str(), "# dTdt=%lg", &v) == 1) { d.dtdt = v; d.has_dtdt = true; }
      continue;
    }
    double h, a;
    if (std::sscanf(line.c_str(), "%lg %lg", &h, &a) != 2 &&
        std::sscanf(line.c_str(), "%lg,%lg", &h, &a) != 2)
      throw ConfigError("ingest: malformed sweep row: " + line);
    if (!first && h == prev_field) throw ConfigError("ingest: repeated field value");
    first = false;
    prev_field = h;
    d.field.push_back(h);
    d.absorption.push_back(a);
  }
  if (d.field.size() < 8) throw ConfigError("ingest: too few samples");
  if (d.larmor_field <= 0.0 || d.nu_rf <= 0.0)
    throw ConfigError("ingest: missing H_L or nu_rf metadata");
  bool increasing = d.field.back() > d.field.front();
  for (size_t i = 1; i < d.field.size(); ++i) {
    if (increasing != (d.field[i] > d.field[i - 1]))
      throw ConfigError("ingest: non-monotone field sweep");
  }
  return d;
}

}  // namespace

Spectrum ingest_measured_text(const std::string& text, const IngestOptions& opts,
                              double leggett_hz) {
  SweepData d = parse_sweep(text);
  if (d.has_dtdt && std::abs(d.dtdt) > opts.max_dtdt)
    throw ConfigError("ingest: |dT/dt| above the admission limit");

  // sweep-lag correction: the recorded field lags the true field by rate*lag
  const bool increasing = d.field.back() > d.field.front();
  const double signed_rate = std::abs(d.sweep_rate) * (increasing ? 1.0 : -1.0);
  if (opts.sweep_lag_s != 0.0 && d.sweep_rate != 0.0) {
    for (double& h : d.field) h -= signed_rate * opts.sweep_lag_s;
  }

  // linear baseline over the declared off-resonance window
  if (opts.baseline_hi > opts.baseline_lo) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < d.field.size(); ++i) {
      if (d.field[i] < opts.baseline_lo || d.field[i] > opts.baseline_hi) continue;
      sx += d.field[i]; sy += d.absorption[i];
      sxx += d.field[i] * d.field[i]; sxy += d.field[i] * d.absorption[i];
      ++n;
    }
    if (n >= 2) {
      const double denom = n * sxx - sx * sx;
      const double slope = (n * sxy - sx * sy) / denom;
      const double icept = (sy - slope * sx) / n;
      for (size_t i = 0; i < d.field.size(); ++i)
        d.absorption[i] -= icept + slope * d.field[i];
    }
  }
  for (double& a : d.absorption) a = std::max(a, 0.0);

  Spectrum fs;
  fs.axis = SpectrumAxis::field;
  fs.larmor_field = d.larmor_field;
  fs.nu_rf = d.nu_rf;
  if (increasing) {
    fs.x = d.field;
    fs.absorption = d.absorption;
  } else {
    fs.x.assign(d.field.rbegin(), d.field.rend());
    fs.absorption.assign(d.absorption.rbegin(), d.absorption.rend());
  }

  Spectrum freq = field_to_frequency_axis(fs);
  freq = normalize(freq);
  if (leggett_hz > 0.0) return normalize(to_reduced_axis(freq, leggett_hz, d.nu_rf));
  return freq;
}

Spectrum ingest_measured(const std::string& path, const IngestOptions& opts, double leggett_hz) {
  std::ifstream is(path);
  if (!is) throw ConfigError("ingest: cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ingest_measured_text(ss.str(), opts, leggett_hz);
}

}  // namespace texlab
