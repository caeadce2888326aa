#include "texlab/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "texlab/errors.hpp"

namespace texlab {

namespace {

struct StepResult {
  Texture texture;
  double cf_height = 0.0;
  bool has_cf = false;
};

// Converge the texture at one control point, warm-starting from `seed` when
// given, and extract the cf-peak from the broadened normalized spectrum.
StepResult converge_point(double t, double omega, double omega_v, Branch guess_branch,
                          const Texture* seed, const ForwardContext& ctx,
                          const ScanOptions& opts) {
  MaterialState mat = MaterialState::create(t, ctx.pressure, ctx.gap_kind, *ctx.table);
  FlowState flow = FlowState::make(omega, omega_v, ctx.radius, ctx.kappa);
  RadialGrid grid = RadialGrid::make(ctx.radius, ctx.grid_step);
  Texture init = seed ? *seed : initial_guess(guess_branch, grid);
  StepResult out;
  out.texture = minimize(init, mat, flow, ctx.larmor_field, ctx.minimize_opts);
  if (!out.texture.converged)
    throw NumericsError("scan: minimization failed to converge at control point");
  Spectrum spec = normalize(
      broaden(line_shape(out.texture, ctx.spectral_grid), opts.dhoverh, ctx.nu_rf,
              mat.leggett_hz, ctx.nu_rf));
  if (auto pk = cf_peak(spec)) {
    out.cf_height = pk->height;
    out.has_cf = true;
  }
  return out;
}

// The branch identity test; textures whose maximum beta sits within a hair
// of 90 degrees cannot be assigned a side.
bool is_extended_state(const Texture& tex) {
  double bmax = 0.0;
  for (double b : tex.beta) bmax = std::max(bmax, b);
  if (std::abs(bmax - pi / 2.0) < 0.02)
    throw NumericsError("scan: branch identity ambiguous (beta_max within 0.02 rad of 90 deg)");
  return bmax > pi / 2.0;
}

double warm_start_energy_of(const Texture& seed, double t, double omega, double omega_v,
                            const ForwardContext& ctx) {
  MaterialState mat = MaterialState::create(t, ctx.pressure, ctx.gap_kind, *ctx.table);
  FlowState flow = FlowState::make(omega, omega_v, ctx.radius, ctx.kappa);
  return total_energy(seed, mat, flow, ctx.larmor_field).total;
}

}  // namespace

TransitionPoint scan_omega_c1(double t, double omega_v, double omega_lo, double omega_hi,
                              const ForwardContext& ctx, const ScanOptions& opts,
                              std::vector<ScanPoint>* path) {
  if (!ctx.table) throw ConfigError("scan_omega_c1: no parameter table in context");
  if (omega_hi <= omega_lo) throw ConfigError("scan_omega_c1: empty range");

  Texture seed;
  bool have_seed = false;
  double prev = omega_lo;
  for (double w = omega_lo; w <= omega_hi + 1e-12; w += opts.step) {
    if (w < omega_v) continue;  // invariant omega_v <= omega
    StepResult sr = converge_point(t, w, omega_v, Branch::parted, have_seed ? &seed : nullptr,
                                   ctx, opts);
    if (path) {
      ScanPoint p;
      p.control = w;
      p.branch = sr.texture.branch;
      p.energy = sr.texture.energy;
      p.warm_start_energy =
          have_seed ? warm_start_energy_of(seed, t, w, omega_v, ctx) : sr.texture.energy;
      if (sr.has_cf) p.cf_height = sr.cf_height;
      path->push_back(p);
    }
    if (sr.has_cf && sr.cf_height >= opts.threshold) {
      return TransitionPoint{w, 0.5 * (w - prev)};
    }
    seed = sr.texture;
    have_seed = true;
    prev = w;
  }
  throw NotFoundError("scan_omega_c1: no cf-peak above threshold in range", omega_lo, omega_hi);
}

namespace {

TransitionPoint continuation_scan(double control_lo, double control_hi, double step,
                                  SweepDirection direction, bool control_is_temperature,
                                  double t_fixed, double omega_fixed, double omega_v,
                                  const ForwardContext& ctx, const ScanOptions& opts,
                                  std::vector<ScanPoint>* path) {
  const bool up = direction == SweepDirection::up;
  // up-sweeps continue the parted branch until it flips to extended; down-
  // sweeps continue the extended branch until it collapses to parted
  const Branch start_branch = up ? Branch::parted : Branch::extended;
  const double start = up ? control_lo : control_hi;
  const double stop = up ? control_hi : control_lo;
  const double dir = up ? 1.0 : -1.0;

  Texture seed;
  bool have_seed = false;
  double prev_control = start;
  int refine_budget = opts.bisection_iterations;

  auto run = [&](double c, const Texture* s) {
    const double t = control_is_temperature ? c : t_fixed;
    const double w = control_is_temperature ? omega_fixed : c;
    return converge_point(t, w, omega_v, start_branch, s, ctx, opts);
  };

  for (double c = start; dir * (c - stop) <= 1e-12; c += dir * step) {
    StepResult sr = run(c, have_seed ? &seed : nullptr);
    const bool extended = is_extended_state(sr.texture);
    const bool flipped = up ? extended : !extended;
    if (path) {
      ScanPoint p;
      p.control = c;
      p.branch = sr.texture.branch;
      p.energy = sr.texture.energy;
      p.warm_start_energy =
          have_seed ? warm_start_energy_of(seed, control_is_temperature ? c : t_fixed,
                                           control_is_temperature ? omega_fixed : c, omega_v, ctx)
                    : sr.texture.energy;
      if (sr.has_cf) p.cf_height = sr.cf_height;
      path->push_back(p);
    }
    if (!have_seed && flipped)
      throw NumericsError("scan: starting branch is already unstable at the first control point");
    if (flipped) {
      // bracket (prev_control stable, c flipped); optionally bisect
      double stable = prev_control, lost = c;
      Texture stable_seed = seed;
      for (int i = 0; i < refine_budget; ++i) {
        const double mid = 0.5 * (stable + lost);
        StepResult mr = run(mid, &stable_seed);
        if (up == is_extended_state(mr.texture)) {
          lost = mid;
        } else {
          stable = mid;
          stable_seed = mr.texture;
        }
      }
      return TransitionPoint{0.5 * (stable + lost), 0.5 * std::abs(lost - stable)};
    }
    seed = sr.texture;
    have_seed = true;
    prev_control = c;
  }
  throw NotFoundError("scan: branch survived the whole range",
                      std::min(control_lo, control_hi), std::max(control_lo, control_hi));
}

}  // namespace

TransitionPoint scan_omega_c2(double t, double omega_v, double omega_lo, double omega_hi,
                              SweepDirection direction, const ForwardContext& ctx,
                              const ScanOptions& opts, std::vector<ScanPoint>* path) {
  if (!ctx.table) throw ConfigError("scan_omega_c2: no parameter table in context");
  return continuation_scan(omega_lo, omega_hi, opts.step, direction, false, t, 0.0, omega_v, ctx,
                           opts, path);
}

TransitionPoint scan_temperature_c2(double omega, double omega_v, double t_lo, double t_hi,
                                    SweepDirection direction, const ForwardContext& ctx,
                                    const ScanOptions& opts, std::vector<ScanPoint>* path) {
  if (!ctx.table) throw ConfigError("scan_temperature_c2: no parameter table in context");
  // on cooling (direction down) the extended branch is continued from high T
  return continuation_scan(t_lo, t_hi, opts.t_step, direction, true, 0.0, omega, omega_v, ctx,
                           opts, path);
}

TransitionReport hysteresis_scan(double t, double omega_v, double omega_lo, double omega_hi,
                                 const ForwardContext& ctx, const ScanOptions& opts) {
  TransitionReport rep;
  std::vector<ScanPoint> up_path, down_path;
  try {
    rep.omega_c2_up = scan_omega_c2(t, omega_v, omega_lo, omega_hi, SweepDirection::up, ctx, opts,
                                    &up_path);
  } catch (const NotFoundError&) {
  }
  try {
    rep.omega_c2_down = scan_omega_c2(t, omega_v, omega_lo, omega_hi, SweepDirection::down, ctx,
                                      opts, &down_path);
  } catch (const NotFoundError&) {
  }
  if (rep.omega_c2_up && rep.omega_c2_down)
    rep.hysteresis_width = rep.omega_c2_up->value - rep.omega_c2_down->value;

  // branch-energy crossing inside the overlap of the two paths
  double best_gap = 1e300;
  std::optional<double> crossing;
  double prev_diff = 0.0, prev_c = 0.0;
  bool have_prev = false;
  for (const auto& pu : up_path) {
    // nearest down-path point at the same control value
    const ScanPoint* match = nullptr;
    for (const auto& pd : down_path)
      if (std::abs(pd.control - pu.control) < 0.25 * opts.step &&
          (!match || std::abs(pd.control - pu.control) < std::abs(match->control - pu.control)))
        match = &pd;
    if (!match || pu.branch == match->branch) continue;
    const double diff = pu.energy - match->energy;
    if (have_prev && prev_diff * diff <= 0.0 && diff != prev_diff) {
      const double c = prev_c + (pu.control - prev_c) * prev_diff / (prev_diff - diff);
      if (std::abs(diff) < best_gap) {
        crossing = c;
        best_gap = std::abs(diff);
      }
    }
    prev_diff = diff;
    prev_c = pu.control;
    have_prev = true;
  }
  rep.energy_crossing = crossing;

  rep.path = up_path;
  rep.path.insert(rep.path.end(), down_path.begin(), down_path.end());
  return rep;
}

std::string report_to_json(const TransitionReport& rep) {
  std::ostringstream os;
  os.precision(10);
  auto pt = [&](const char* name, const std::optional<TransitionPoint>& p) {
    os << "\"" << name << "\":";
    if (p) os << "{\"value\":" << p->value << ",\"uncertainty\":" << p->uncertainty << "}";
    else os << "null";
  };
  os << "{";
  pt("omega_c1", rep.omega_c1);
  os << ",";
  pt("omega_c2_up", rep.omega_c2_up);
  os << ",";
  pt("omega_c2_down", rep.omega_c2_down);
  os << ",\"hysteresis_width\":" << rep.hysteresis_width;
  os << ",\"energy_crossing\":";
  if (rep.energy_crossing) os << *rep.energy_crossing;
  else os << "null";
  os << ",\"points\":" << rep.path.size() << "}";
  return os.str();
}

std::string path_to_csv(const std::vector<ScanPoint>& path) {
  std::ostringstream os;
  os << "control,branch,energy,warm_start_energy,cf_height\n";
  char buf[200];
  for (const auto& p : path) {
    std::snprintf(buf, sizeof buf, "%.10g,%s,%.12g,%.12g,", p.control, branch_name(p.branch),
                  p.energy, p.warm_start_energy);
    os << buf;
    if (p.cf_height) os << *p.cf_height;
    os << "\n";
  }
  return os.str();
}

}  // namespace texlab
