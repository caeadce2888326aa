// texlab: batch front end for B-phase texture, NMR spectrum, fit and
// transition-scan calculations.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "texlab/config.hpp"
#include "texlab/errors.hpp"
#include "texlab/fitting.hpp"
#include "texlab/plot.hpp"
#include "texlab/runio.hpp"
#include "texlab/scan.hpp"

using namespace texlab;

namespace {

GapModel::Kind gap_kind_from(const std::string& s) {
  if (s == "weak" || s == "weak_coupling") return GapModel::Kind::weak_coupling;
  if (s == "strong" || s == "strong_coupling") return GapModel::Kind::strong_coupling;
  if (s == "scaled") return GapModel::Kind::scaled;
  throw ConfigError("unknown gap model: " + s);
}

struct CommonArgs {
  RunConfig cfg;
  std::string out_dir = "out";
  std::string command;
  ParameterTable table;

  static CommonArgs load(const std::string& config_path, const std::string& out,
                         const std::vector<std::string>& overrides, const std::string& command) {
    CommonArgs c;
    c.cfg = RunConfig::from_file(config_path, overrides);
    c.out_dir = out.empty() ? c.cfg.get("run", "out", "out") : out;
    c.command = command;
    c.table = ParameterTable::load(c.cfg.get("material", "table", "data/he3b.params"));
    write_manifest(c.out_dir, command, c.cfg.resolved_text(), c.cfg.physics_hash(command));
    return c;
  }

  ForwardContext context() const {
    ForwardContext ctx;
    ctx.omega = cfg.number("flow", "omega", 0.0);
    ctx.omega_v = cfg.number("flow", "omega_v", 0.0);
    ctx.radius = cfg.number("flow", "radius", 3e-3);
    ctx.kappa = cfg.number("flow", "kappa", kappa_default);
    ctx.pressure = cfg.number("material", "pressure", 29.0);
    ctx.nu_rf = cfg.number("spectrum", "nu_rf", 965.0e3);
    ctx.larmor_field = cfg.number("spectrum", "larmor_field", 29.75e-3);
    ctx.branch = branch_from_name(cfg.get("solver", "branch", "parted"));
    ctx.gap_kind = gap_kind_from(cfg.get("material", "gap", "scaled"));
    ctx.grid_step = cfg.number("solver", "step", 15e-6);
    ctx.spectral_grid.bins = cfg.integer("spectrum", "bins", 2048);
    ctx.spectral_grid.lo = cfg.number("spectrum", "lo", -0.05);
    ctx.spectral_grid.hi = cfg.number("spectrum", "hi", 1.05);
    ctx.table = &table;
    ctx.minimize_opts.gtol_rel = cfg.number("solver", "gtol", 1e-9);
    ctx.minimize_opts.etol_rel = cfg.number("solver", "etol", 1e-12);
    ctx.minimize_opts.max_iterations = cfg.integer("solver", "max_iterations", 50000);
    return ctx;
  }

  std::optional<double> lambda_override() const {
    const std::string v = cfg.get("material", "lambda_hv", "auto");
    if (v == "auto") return std::nullopt;
    return cfg.require_number("material", "lambda_hv");
  }
};

int cmd_params(const CommonArgs& args) {
  const double p = args.cfg.number("material", "pressure", 29.0);
  const double t_lo = args.cfg.number("params", "t_lo", 0.05);
  const double t_hi = args.cfg.number("params", "t_hi", 1.0);
  const int n = args.cfg.integer("params", "points", 40);
  const auto fl = args.table.fermi_liquid(p);
  const auto leg = args.table.leggett();
  const GapModel wc = args.table.gap_model(GapModel::Kind::weak_coupling);
  const GapModel sc = args.table.gap_model(GapModel::Kind::strong_coupling);
  const GapModel sl = args.table.gap_model(GapModel::Kind::scaled);

  std::ostringstream os;
  os << "T,gap_wc,gap_sc,gap_scaled,Y,Z3,Z5,Z7,lambda_HV_sc,lambda_HV_scaled,chi_ratio,Omega_B\n";
  char buf[400];
  for (int i = 0; i < n; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / (n - 1.0);
    const double gwc = gap(t, wc), gsc = gap(t, sc), gsl = gap(t, sl);
    const double y = yosida(t, gsl);
    const double z3 = matsubara_Z(3, t, gsl);
    const double z5 = matsubara_Z(5, t, gsl);
    const double z7 = matsubara_Z(7, t, gsl);
    const double lsc = (t < 1.0 && gsc > 0) ? lambda_hv(t, fl, gsc) : 0.0;
    const double lsl = (t < 1.0 && gsl > 0) ? lambda_hv(t, fl, gsl) : 0.0;
    const double chi = susceptibility_ratio(t, gsl, fl.F0a);
    double nub = 0.0;
    try { nub = leggett_frequency(t, leg); } catch (const NumericsError&) {}
    std::snprintf(buf, sizeof buf, "%.6g,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g\n",
                  t, gwc, gsc, gsl, y, z3, z5, z7, lsc, lsl, chi, nub);
    os << buf;
  }
  write_text_file(args.out_dir + "/params.csv", os.str());
  std::cout << "wrote " << args.out_dir << "/params.csv\n";
  return 0;
}

Texture compute_texture(const CommonArgs& args, const ForwardContext& ctx, double t,
                        bool* from_cache = nullptr) {
  const std::string cache_dir = args.cfg.get("run", "cache", "");
  const std::string key = "tex_" + args.cfg.physics_hash("texture");
  if (auto cached = cache_lookup(cache_dir, key)) {
    if (from_cache) *from_cache = true;
    return texture_from_text(*cached);
  }
  MaterialState mat =
      MaterialState::create(t, ctx.pressure, ctx.gap_kind, *ctx.table, args.lambda_override());
  FlowState flow = FlowState::make(ctx.omega, ctx.omega_v, ctx.radius, ctx.kappa);
  RadialGrid grid = RadialGrid::make(ctx.radius, ctx.grid_step);
  Texture tex = minimize(initial_guess(ctx.branch, grid), mat, flow, ctx.larmor_field,
                         ctx.minimize_opts);
  if (!tex.converged) throw NumericsError("texture minimization did not converge");
  cache_store(cache_dir, key, texture_to_text(tex, args.cfg.physics_hash("texture")));
  if (from_cache) *from_cache = false;
  return tex;
}

void emit_texture_plots(const CommonArgs& args, const Texture& tex) {
  if (args.cfg.get("run", "plots", "1") == "0") return;
  std::vector<double> r(tex.grid.points());
  for (int i = 0; i < tex.grid.points(); ++i) r[i] = tex.grid.r(i) / tex.grid.radius;
  std::vector<double> beta_deg(tex.beta.size()), alpha_deg(tex.alpha.size());
  for (size_t i = 0; i < tex.beta.size(); ++i) beta_deg[i] = tex.beta[i] * 180.0 / pi;
  for (size_t i = 0; i < tex.alpha.size(); ++i) alpha_deg[i] = tex.alpha[i] * 180.0 / pi;
  write_text_file(args.out_dir + "/texture_angles.svg",
                  svg_line_chart("n-vector texture", "r/R", "angle [deg]",
                                 {{"beta", r, beta_deg, "#1f77b4", false},
                                  {"alpha", r, alpha_deg, "#d62728", true}}));
  PotentialWell well = potential_well(tex);
  write_text_file(args.out_dir + "/potential_well.svg",
                  svg_line_chart("textural potential", "r/R", "sin^2(beta)",
                                 {{"U", r, well.u, "#2ca02c", false}}));
}

int cmd_texture(const CommonArgs& args) {
  const ForwardContext ctx = args.context();
  const double t = args.cfg.require_number("material", "temperature");
  bool cached = false;
  Texture tex = compute_texture(args, ctx, t, &cached);
  write_text_file(args.out_dir + "/texture.txt",
                  texture_to_text(tex, args.cfg.physics_hash("texture")));
  emit_texture_plots(args, tex);
  std::cout << (cached ? "cache hit: " : "computed: ") << args.out_dir
            << "/texture.txt branch=" << branch_name(tex.branch) << " energy=" << tex.energy
            << "\n";
  return 0;
}

int cmd_spectrum(const CommonArgs& args) {
  const ForwardContext ctx = args.context();
  const double t = args.cfg.require_number("material", "temperature");
  const double dh = args.cfg.number("spectrum", "dhoverh", 8.8e-4);
  Texture tex = compute_texture(args, ctx, t);
  MaterialState mat =
      MaterialState::create(t, ctx.pressure, ctx.gap_kind, *ctx.table, args.lambda_override());
  Spectrum spec = normalize(
      broaden(line_shape(tex, ctx.spectral_grid), dh, ctx.nu_rf, mat.leggett_hz, ctx.nu_rf));
  spec.larmor_field = ctx.larmor_field;
  write_spectrum(spec, args.out_dir + "/spectrum.csv");
  const SpectralFeatures feats = extract_features(spec);
  write_text_file(args.out_dir + "/features.json", features_to_json(feats) + "\n");
  if (args.cfg.get("run", "plots", "1") != "0") {
    write_text_file(args.out_dir + "/spectrum.svg",
                    svg_line_chart("cw-NMR line shape", "reduced shift", "absorption",
                                   {{"calculated", spec.x, spec.absorption, "#1f77b4", false}}));
  }
  emit_texture_plots(args, tex);
  std::cout << "wrote " << args.out_dir << "/spectrum.csv " << features_to_json(feats) << "\n";
  return 0;
}

int cmd_fit(const CommonArgs& args) {
  const ForwardContext ctx = args.context();
  FitInput input;
  input.ctx = ctx;
  IngestOptions iopts;
  iopts.baseline_lo = args.cfg.number("fit", "baseline_lo", 0.0);
  iopts.baseline_hi = args.cfg.number("fit", "baseline_hi", 0.0);
  iopts.sweep_lag_s = args.cfg.number("fit", "sweep_lag", 0.0);
  const std::string measured_path = args.cfg.require("fit", "measured");
  if (measured_path.size() > 4 && measured_path.substr(measured_path.size() - 4) == ".csv") {
    input.measured = read_spectrum(measured_path);
    if (input.measured.axis == SpectrumAxis::field)
      input.measured = normalize(field_to_frequency_axis(input.measured));
    else if (!input.measured.normalized)
      input.measured = normalize(input.measured);
  } else {
    input.measured = ingest_measured(measured_path, iopts);
  }

  FitConfig fc;
  const std::string free = args.cfg.get("fit", "free", "T,lambda_HV,dHoverH");
  fc.T.free = free.find('T') != std::string::npos;
  fc.lambda_HV.free = free.find("lambda_HV") != std::string::npos;
  fc.dHoverH.free = free.find("dHoverH") != std::string::npos;
  fc.T.initial = args.cfg.require_number("fit", "T_init");
  fc.T.lo = args.cfg.number("fit", "T_lo", std::max(0.05, fc.T.initial - 0.1));
  fc.T.hi = args.cfg.number("fit", "T_hi", std::min(0.95, fc.T.initial + 0.1));
  fc.lambda_HV.initial = args.cfg.number("fit", "lambda_init", 3.0);
  fc.lambda_HV.lo = args.cfg.number("fit", "lambda_lo", 0.2);
  fc.lambda_HV.hi = args.cfg.number("fit", "lambda_hi", 9.0);
  fc.dHoverH.initial = args.cfg.number("fit", "dh_init", 8.8e-4);
  fc.dHoverH.lo = args.cfg.number("fit", "dh_lo", 1e-5);
  fc.dHoverH.hi = args.cfg.number("fit", "dh_hi", 3e-3);
  const std::string strategy = args.cfg.get("fit", "strategy", "single_spectrum");
  if (strategy == "single_spectrum") fc.strategy = FitStrategy::single_spectrum;
  else if (strategy == "dual_texture_pair") fc.strategy = FitStrategy::dual_texture_pair;
  else if (strategy == "omega_c1_anchor") fc.strategy = FitStrategy::omega_c1_anchor;
  else throw ConfigError("unknown fit strategy: " + strategy);
  if (fc.strategy == FitStrategy::omega_c1_anchor)
    input.omega_c1_measured = args.cfg.require_number("fit", "omega_c1");

  FitResult res = fit_spectrum(input, fc);

  // lambda uncertainty from the cf-peak sensitivity map
  if (res.calculated.normalized && cf_peak(res.calculated)) {
    const int workers = args.cfg.integer("run", "workers", 1);
    try {
      auto map = sample_lambda_sensitivity(res.t, res.dhoverh, ctx, res.lambda_hv,
                                           args.cfg.number("fit", "map_span", 2.0),
                                           args.cfg.number("fit", "map_step", 1.0), workers);
      auto [lo, hi] = lambda_uncertainty(res, map);
      res.lambda_lo = lo;
      res.lambda_hi = hi;
    } catch (const MapInversionError& e) {
      std::cerr << "lambda uncertainty skipped: " << e.what() << "\n";
    }
  }

  std::ostringstream rep;
  rep.precision(10);
  rep << "{\"T\":" << res.t << ",\"lambda_HV\":" << res.lambda_hv << ",\"lambda_lo\":"
      << res.lambda_lo << ",\"lambda_hi\":" << res.lambda_hi << ",\"dHoverH\":" << res.dhoverh
      << ",\"deltaA\":" << res.deltaA << ",\"criteria\":{\"edge_overlap\":"
      << (res.criteria.edge_overlap ? "true" : "false")
      << ",\"cf_peak_match\":" << (res.criteria.cf_peak_match ? "true" : "false")
      << ",\"area_ok\":" << (res.criteria.area_ok ? "true" : "false") << "},\"trace\":[";
  for (size_t i = 0; i < res.trace.size(); ++i)
    rep << (i ? "," : "") << "\"" << res.trace[i] << "\"";
  rep << "]}\n";
  write_text_file(args.out_dir + "/fit.json", rep.str());
  write_spectrum(res.calculated, args.out_dir + "/fit_calculated.csv");
  write_spectrum(res.measured_reduced, args.out_dir + "/fit_measured.csv");
  if (args.cfg.get("run", "plots", "1") != "0") {
    write_text_file(
        args.out_dir + "/fit_overlay.svg",
        svg_line_chart("measured vs calculated", "reduced shift", "absorption",
                       {{"measured", res.measured_reduced.x, res.measured_reduced.absorption,
                         "#1f77b4", false},
                        {"calculated", res.calculated.x, res.calculated.absorption, "#2ca02c",
                         true}}));
  }
  std::cout << rep.str();
  return 0;
}

int cmd_scan(const CommonArgs& args) {
  const ForwardContext ctx = args.context();
  ScanOptions opts;
  opts.step = args.cfg.number("scan", "step", 0.05);
  opts.t_step = args.cfg.number("scan", "t_step", 0.005);
  opts.threshold = args.cfg.number("scan", "threshold", 1.5);
  opts.dhoverh = args.cfg.number("spectrum", "dhoverh", 8.8e-4);
  opts.bisection_iterations = args.cfg.integer("scan", "bisection", 0);

  const std::string mode = args.cfg.get("scan", "mode", "omega_c2");
  const double t = args.cfg.number("material", "temperature", 0.25);
  const double omega_v = args.cfg.number("flow", "omega_v", 0.0);

  TransitionReport rep;
  if (mode == "omega_c1") {
    rep.omega_c1 = scan_omega_c1(t, omega_v, args.cfg.require_number("scan", "from"),
                                 args.cfg.require_number("scan", "to"), ctx, opts, &rep.path);
  } else if (mode == "omega_c2") {
    const std::string dir = args.cfg.get("scan", "direction", "both");
    const double lo = args.cfg.require_number("scan", "from");
    const double hi = args.cfg.require_number("scan", "to");
    if (dir == "both") {
      rep = hysteresis_scan(t, omega_v, lo, hi, ctx, opts);
      if (!rep.omega_c2_up && !rep.omega_c2_down)
        throw NotFoundError("scan: no transition in either direction", lo, hi);
    } else {
      const SweepDirection d = dir == "up" ? SweepDirection::up : SweepDirection::down;
      auto pt = scan_omega_c2(t, omega_v, lo, hi, d, ctx, opts, &rep.path);
      (d == SweepDirection::up ? rep.omega_c2_up : rep.omega_c2_down) = pt;
    }
  } else if (mode == "temperature_c2") {
    const std::string dir = args.cfg.get("scan", "direction", "down");
    const double omega = args.cfg.number("flow", "omega", 0.8);
    auto pt = scan_temperature_c2(omega, omega_v, args.cfg.require_number("scan", "from"),
                                  args.cfg.require_number("scan", "to"),
                                  dir == "up" ? SweepDirection::up : SweepDirection::down, ctx,
                                  opts, &rep.path);
    (dir == "up" ? rep.omega_c2_up : rep.omega_c2_down) = pt;
  } else {
    throw ConfigError("unknown scan mode: " + mode);
  }

  write_text_file(args.out_dir + "/scan.json", report_to_json(rep) + "\n");
  write_text_file(args.out_dir + "/scan_path.csv", path_to_csv(rep.path));
  if (args.cfg.get("run", "plots", "1") != "0" && !rep.path.empty()) {
    PlotSeries s;
    s.label = "cf height";
    for (const auto& p : rep.path)
      if (p.cf_height) {
        s.x.push_back(p.control);
        s.y.push_back(*p.cf_height);
      }
    write_text_file(args.out_dir + "/scan_path.svg",
                    svg_line_chart("scan path", "control", "cf-peak height", {s}));
  }
  std::cout << report_to_json(rep) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium textures and cw-NMR spectra of rotating superfluid 3He-B"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  std::vector<std::string> overrides;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "run configuration file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("overrides", overrides, "section.key=value overrides");
  };

  CLI::App* p_params = app.add_subcommand("params", "material quantities over a T grid");
  CLI::App* p_texture = app.add_subcommand("texture", "equilibrium texture");
  CLI::App* p_spectrum = app.add_subcommand("spectrum", "synthesized NMR spectrum");
  CLI::App* p_fit = app.add_subcommand("fit", "fit a measured spectrum");
  CLI::App* p_scan = app.add_subcommand("scan", "textural transition scan");
  for (auto* sub : {p_params, p_texture, p_spectrum, p_fit, p_scan}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    CommonArgs args = CommonArgs::load(config_path, out_dir, overrides, cmd);
    if (cmd == "params") return cmd_params(args);
    if (cmd == "texture") return cmd_texture(args);
    if (cmd == "spectrum") return cmd_spectrum(args);
    if (cmd == "fit") return cmd_fit(args);
    if (cmd == "scan") return cmd_scan(args);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NotFoundError& e) {
    std::cerr << "not found: " << e.what() << " (range " << e.range_lo << " .. " << e.range_hi
              << ")\n";
    return 4;
  } catch (const NumericsError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
