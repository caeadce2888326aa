#include "texlab/texture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "texlab/errors.hpp"

namespace texlab {

namespace {
constexpr double kSqrt15 = 3.872983346207417;  // sqrt(15)
constexpr double kWallBeta = 1.1071487177940904;  // asin(sqrt(0.8)) = 63.43 deg
}  // namespace

RadialGrid RadialGrid::make(double radius, double target_step) {
  if (radius <= 0.0 || target_step <= 0.0) throw ConfigError("grid: radius and step must be positive");
  int m = std::max(4, static_cast<int>(std::lround(radius / target_step)));
  return RadialGrid{radius, radius / m, m};
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::simple: return "simple";
    case Branch::parted: return "parted";
    case Branch::extended: return "extended";
  }
  return "?";
}

Branch branch_from_name(const std::string& name) {
  if (name == "simple") return Branch::simple;
  if (name == "parted") return Branch::parted;
  if (name == "extended") return Branch::extended;
  throw ConfigError("unknown branch name: " + name);
}

std::array<double, 3> nhat_field(double alpha, double beta, double phi) {
  const double psi = phi + alpha;
  return {std::sin(beta) * std::cos(psi), std::sin(beta) * std::sin(psi), std::cos(beta)};
}

std::array<std::array<double, 3>, 3> rotation_matrix(const std::array<double, 3>& n, double theta) {
  const double norm2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  if (std::abs(norm2 - 1.0) > 1e-10) throw NumericsError("rotation_matrix: n is not a unit vector");
  const double ct = std::cos(theta), st = std::sin(theta);
  std::array<std::array<double, 3>, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = (1.0 - ct) * n[i] * n[j] + (i == j ? ct : 0.0);
  // -sin(th) eps_ijk n_k
  r[0][1] -= st * n[2];
  r[1][0] += st * n[2];
  r[0][2] += st * n[1];
  r[2][0] -= st * n[1];
  r[1][2] -= st * n[0];
  r[2][1] += st * n[0];
  return r;
}

namespace {

// Gradient-energy density and partials from the generated kernel.
struct GradKernel {
  double f, f_b, f_a, f_db, f_da, f_u;
};

inline GradKernel grad_kernel(double b, double a, double db, double da, double u, double lg1,
                              double lg2) {
  using std::cos;
  using std::pow;
  using std::sin;
  using std::sqrt;
  double f, f_b, f_a, f_db, f_da, f_u;
#include "texture_kernel.inc"
  return GradKernel{f, f_b, f_a, f_db, f_da, f_u};
}

// Orientation factor of the field-velocity term: P = z^T R e_phi.
inline double hv_factor(double b, double a) {
  return std::sin(b) * (1.25 * std::cos(b) * std::sin(a) + 0.25 * kSqrt15 * std::cos(a));
}
inline double hv_factor_db(double b, double a) {
  return std::cos(b) * (1.25 * std::cos(b) * std::sin(a) + 0.25 * kSqrt15 * std::cos(a)) -
         1.25 * std::sin(b) * std::sin(b) * std::sin(a);
}
inline double hv_factor_da(double b, double a) {
  return std::sin(b) * (1.25 * std::cos(b) * std::cos(a) - 0.25 * kSqrt15 * std::sin(a));
}

// Orientation factor of the surface term: P_s = z^T R r_hat at r = R.
inline double sh_factor(double b, double a) {
  return std::sin(b) * (1.25 * std::cos(b) * std::cos(a) - 0.25 * kSqrt15 * std::sin(a));
}
inline double sh_factor_db(double b, double a) {
  return std::cos(b) * (1.25 * std::cos(b) * std::cos(a) - 0.25 * kSqrt15 * std::sin(a)) -
         1.25 * std::sin(b) * std::sin(b) * std::cos(a);
}
inline double sh_factor_da(double b, double a) {
  return std::sin(b) * (-1.25 * std::cos(b) * std::sin(a) - 0.25 * kSqrt15 * std::cos(a));
}

// Cached per-minimize quantities; angles are the only moving parts.
struct Evaluator {
  const MaterialState* mat;
  const FlowState* flow;
  double field;
  RadialGrid grid;
  std::vector<double> r_mid, weight, v2;  // per interval
  double h;

  Evaluator(const RadialGrid& g, const MaterialState& m, const FlowState& fl, double fieldT)
      : mat(&m), flow(&fl), field(fieldT), grid(g), h(g.step) {
    r_mid.resize(g.m);
    weight.resize(g.m);
    v2.resize(g.m);
    for (int i = 0; i < g.m; ++i) {
      r_mid[i] = (i + 0.5) * h;
      weight[i] = 2.0 * pi * r_mid[i] * h;
      const double v = counterflow(std::min(r_mid[i], fl.radius), fl);
      v2[i] = v * v;
    }
  }

  // Energy breakdown, and optionally the gradient w.r.t. nodal angles.
  EnergyBreakdown eval(const std::vector<double>& alpha, const std::vector<double>& beta,
                       std::vector<double>* g_alpha, std::vector<double>* g_beta) const {
    const auto& c = mat->coeffs;
    const double H2 = field * field;
    EnergyBreakdown out;
    if (g_alpha) {
      g_alpha->assign(alpha.size(), 0.0);
      g_beta->assign(beta.size(), 0.0);
    }
    for (int i = 0; i < grid.m; ++i) {
      const double b = 0.5 * (beta[i] + beta[i + 1]);
      const double a = 0.5 * (alpha[i] + alpha[i + 1]);
      const double db = (beta[i + 1] - beta[i]) / h;
      const double da = (alpha[i + 1] - alpha[i]) / h;
      const double sb = std::sin(b), cb = std::cos(b);
      const double u = sb / r_mid[i];
      const double w = weight[i];

      const GradKernel g = grad_kernel(b, a, db, da, u, c.lambda_g1, c.lambda_g2);
      const double sa = std::sin(a), ca = std::cos(a);
      const double f_dh = -c.a * H2 * cb * cb;
      const double f_dv = -c.lambda_dv * v2[i] * sb * sb * sa * sa;
      const double P = hv_factor(b, a);
      const double f_hv = -c.lambda_hv * H2 * v2[i] * P * P;

      out.f_g += w * g.f;
      out.f_dh += w * f_dh;
      out.f_dv += w * f_dv;
      out.f_hv += w * f_hv;

      if (g_alpha) {
        const double dh_b = 2.0 * c.a * H2 * cb * sb;
        const double dv_b = -2.0 * c.lambda_dv * v2[i] * sb * cb * sa * sa;
        const double dv_a = -2.0 * c.lambda_dv * v2[i] * sb * sb * sa * ca;
        const double hv_b = -2.0 * c.lambda_hv * H2 * v2[i] * P * hv_factor_db(b, a);
        const double hv_a = -2.0 * c.lambda_hv * H2 * v2[i] * P * hv_factor_da(b, a);
        const double fb = g.f_b + g.f_u * cb / r_mid[i] + dh_b + dv_b + hv_b;
        const double fa = g.f_a + dv_a + hv_a;
        (*g_beta)[i] += w * (0.5 * fb - g.f_db / h);
        (*g_beta)[i + 1] += w * (0.5 * fb + g.f_db / h);
        (*g_alpha)[i] += w * (0.5 * fa - g.f_da / h);
        (*g_alpha)[i + 1] += w * (0.5 * fa + g.f_da / h);
      }
    }
    // surface term at r = R
    {
      const int n = grid.m;
      const double ws = 2.0 * pi * grid.radius;
      const double Ps = sh_factor(beta[n], alpha[n]);
      out.f_sh = -c.d * H2 * Ps * Ps * ws;
      if (g_alpha) {
        (*g_beta)[n] += -2.0 * c.d * H2 * Ps * sh_factor_db(beta[n], alpha[n]) * ws;
        (*g_alpha)[n] += -2.0 * c.d * H2 * Ps * sh_factor_da(beta[n], alpha[n]) * ws;
      }
    }
    out.total = out.f_dh + out.f_dv + out.f_g + out.f_hv + out.f_sh;
    if (g_beta) (*g_beta)[0] = 0.0;  // axis angle is pinned
    return out;
  }
};

}  // namespace

EnergyDensity energy_density(double r, double alpha, double beta, double dalpha, double dbeta,
                             const MaterialState& mat, const FlowState& flow, double field) {
  if (r < 0.0 || r > flow.radius * (1.0 + 1e-12))
    throw NumericsError("energy_density: r outside [0, R]");
  const auto& c = mat.coeffs;
  const double H2 = field * field;
  const double sb = std::sin(beta), cb = std::cos(beta);
  const double u = (r > 0.0) ? sb / r : dbeta;  // analytic axis limit, beta(0)=0
  const double v = counterflow(r, flow);
  const GradKernel g = grad_kernel(beta, alpha, dbeta, dalpha, u, c.lambda_g1, c.lambda_g2);
  EnergyDensity out;
  out.f_g = g.f;
  out.f_dh = -c.a * H2 * cb * cb;
  const double sa = std::sin(alpha);
  out.f_dv = -c.lambda_dv * v * v * sb * sb * sa * sa;
  const double P = hv_factor(beta, alpha);
  out.f_hv = -c.lambda_hv * H2 * v * v * P * P;
  out.total = out.f_dh + out.f_dv + out.f_g + out.f_hv;
  return out;
}

EnergyBreakdown total_energy(const Texture& tex, const MaterialState& mat, const FlowState& flow,
                             double field) {
  Evaluator ev(tex.grid, mat, flow, field);
  return ev.eval(tex.alpha, tex.beta, nullptr, nullptr);
}

void energy_gradient(const Texture& tex, const MaterialState& mat, const FlowState& flow,
                     double field, std::vector<double>& g_alpha, std::vector<double>& g_beta) {
  Evaluator ev(tex.grid, mat, flow, field);
  ev.eval(tex.alpha, tex.beta, &g_alpha, &g_beta);
}

Texture initial_guess(Branch branch, const RadialGrid& grid) {
  Texture tex;
  tex.grid = grid;
  tex.branch = branch;
  const int n = grid.points();
  tex.alpha.resize(n);
  tex.beta.resize(n);
  const double wall = (branch == Branch::extended) ? pi - kWallBeta : kWallBeta;
  // flow-preferred azimuth at the wall: tan(alpha) = sqrt(5/3) cos(beta)
  const double alpha0 = std::atan(std::sqrt(5.0 / 3.0) * std::cos(wall));
  for (int i = 0; i < n; ++i) {
    tex.beta[i] = wall * i / (n - 1.0);
    tex.alpha[i] = alpha0;
  }
  return tex;
}

namespace {

// Limited-memory BFGS with a backtracking/expanding Wolfe line search.
struct LbfgsState {
  int mem;
  std::vector<std::vector<double>> s, y;
  std::vector<double> rho;

  explicit LbfgsState(int m) : mem(m) {}

  void push(std::vector<double> si, std::vector<double> yi) {
    double sy = 0.0;
    for (size_t k = 0; k < si.size(); ++k) sy += si[k] * yi[k];
    if (sy <= 1e-300) return;  // curvature not usable
    s.push_back(std::move(si));
    y.push_back(std::move(yi));
    rho.push_back(1.0 / sy);
    if (static_cast<int>(s.size()) > mem) {
      s.erase(s.begin());
      y.erase(y.begin());
      rho.erase(rho.begin());
    }
  }

  // d = -H g via the two-loop recursion
  void direction(const std::vector<double>& g, std::vector<double>& d) const {
    d = g;
    const int k = static_cast<int>(s.size());
    std::vector<double> alpha_coef(k);
    for (int i = k - 1; i >= 0; --i) {
      double sg = 0.0;
      for (size_t j = 0; j < d.size(); ++j) sg += s[i][j] * d[j];
      alpha_coef[i] = rho[i] * sg;
      for (size_t j = 0; j < d.size(); ++j) d[j] -= alpha_coef[i] * y[i][j];
    }
    if (k > 0) {
      double yy = 0.0, sy = 0.0;
      for (size_t j = 0; j < d.size(); ++j) {
        yy += y[k - 1][j] * y[k - 1][j];
        sy += s[k - 1][j] * y[k - 1][j];
      }
      const double scale = sy / std::max(yy, 1e-300);
      for (double& x : d) x *= scale;
    }
    for (double& x : d) x = -x;
  }
};

}  // namespace

Texture minimize(const Texture& initial, const MaterialState& mat, const FlowState& flow,
                 double field, const MinimizeOptions& opts) {
  if (initial.beta.empty() || initial.beta[0] != 0.0) {
    if (initial.beta.empty() || std::abs(initial.beta[0]) > 1e-12)
      throw NumericsError("minimize: initial texture must have beta(0) = 0");
  }
  const int n = initial.grid.points();
  Evaluator ev(initial.grid, mat, flow, field);

  // pack: x = [alpha_0..alpha_m, beta_1..beta_m]; beta_0 pinned at 0
  const int dim = 2 * n - 1;
  std::vector<double> alpha = initial.alpha, beta = initial.beta;
  beta[0] = 0.0;

  auto pack = [&](std::vector<double>& x) {
    x.resize(dim);
    std::copy(alpha.begin(), alpha.end(), x.begin());
    std::copy(beta.begin() + 1, beta.end(), x.begin() + n);
  };
  auto unpack = [&](const std::vector<double>& x) {
    std::copy(x.begin(), x.begin() + n, alpha.begin());
    std::copy(x.begin() + n, x.end(), beta.begin() + 1);
  };

  std::vector<double> ga, gb;
  auto eval = [&](const std::vector<double>& x, std::vector<double>& grad) {
    unpack(x);
    EnergyBreakdown e = ev.eval(alpha, beta, &ga, &gb);
    grad.resize(dim);
    std::copy(ga.begin(), ga.end(), grad.begin());
    std::copy(gb.begin() + 1, gb.end(), grad.begin() + n);
    return e;
  };

  std::vector<double> x, g, d, xnew, gnew;
  pack(x);
  EnergyBreakdown e = eval(x, g);

  const double scale = std::abs(e.f_dh) + std::abs(e.f_dv) + std::abs(e.f_g) + std::abs(e.f_hv) +
                       std::abs(e.f_sh) +
                       std::abs(mat.coeffs.a) * field * field * pi * flow.radius * flow.radius;
  const double gtol = opts.gtol_rel * std::max(scale, 1e-300);

  LbfgsState lbfgs(opts.history);
  Texture result = initial;
  int iter = 0;
  bool converged = false;

  for (; iter < opts.max_iterations; ++iter) {
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax < gtol) {
      converged = true;
      break;
    }

    lbfgs.direction(g, d);
    double gd = 0.0;
    for (int j = 0; j < dim; ++j) gd += g[j] * d[j];
    if (gd >= 0.0) {  // not a descent direction; restart from steepest descent
      lbfgs = LbfgsState(opts.history);
      for (int j = 0; j < dim; ++j) d[j] = -g[j];
      gd = 0.0;
      for (int j = 0; j < dim; ++j) gd += g[j] * d[j];
      if (gd >= 0.0) break;  // gradient numerically zero
    }

    // Wolfe line search
    double step = (iter == 0) ? std::min(1.0, 0.1 / std::sqrt(-gd / scale + 1e-300)) : 1.0;
    const double c1 = 1e-4, c2 = 0.9;
    double enew_total = e.total;
    EnergyBreakdown enew = e;
    bool ok = false;
    for (int ls = 0; ls < 60; ++ls) {
      xnew.resize(dim);
      for (int j = 0; j < dim; ++j) xnew[j] = x[j] + step * d[j];
      enew = eval(xnew, gnew);
      enew_total = enew.total;
      if (!(enew_total <= e.total + c1 * step * gd)) {
        step *= 0.5;
        continue;
      }
      double gdnew = 0.0;
      for (int j = 0; j < dim; ++j) gdnew += gnew[j] * d[j];
      if (gdnew < c2 * gd && ls < 20) {
        step *= 2.1;
        continue;
      }
      ok = true;
      break;
    }
    if (!ok) break;  // line search failed; report unconverged state

    std::vector<double> si(dim), yi(dim);
    for (int j = 0; j < dim; ++j) {
      si[j] = xnew[j] - x[j];
      yi[j] = gnew[j] - g[j];
    }
    lbfgs.push(std::move(si), std::move(yi));

    const double de = std::abs(enew_total - e.total);
    x.swap(xnew);
    g.swap(gnew);
    const double eprev = e.total;
    e = enew;

    if (de < opts.etol_rel * std::max(std::abs(eprev), 1e-300)) {
      double gmax2 = 0.0;
      for (double v : g) gmax2 = std::max(gmax2, std::abs(v));
      if (gmax2 < gtol) {
        converged = true;
        ++iter;
        break;
      }
    }
  }

  unpack(x);
  result.alpha = alpha;
  result.beta = beta;
  result.energy = e.total;
  result.converged = converged;
  result.iterations = iter;
  result.branch = classify_branch(result);
  return result;
}

bool has_ninety_crossing(const Texture& tex) {
  for (size_t i = 0; i < tex.beta.size(); ++i)
    if (tex.beta[i] > pi / 2.0) return true;
  return false;
}

bool has_plateau(const Texture& tex) {
  // flattest window of width ~0.1 R inside r in (0.15 R, R]; a plateau means
  // its mean |slope| falls well below the global mean slope beta_max / R
  const int n = tex.grid.points();
  const int w = std::max(2, tex.grid.m / 10);
  double bmax = 0.0;
  for (double b : tex.beta) bmax = std::max(bmax, std::abs(b));
  if (bmax < 1e-6) return false;
  const double global_slope = bmax / tex.grid.radius;
  const int i0 = std::max(1, static_cast<int>(0.15 * tex.grid.m));
  double flattest = 1e300;
  for (int i = i0; i + w < n; ++i) {
    const double slope = std::abs(tex.beta[i + w] - tex.beta[i]) / (w * tex.grid.step);
    flattest = std::min(flattest, slope);
  }
  return flattest < 0.12 * global_slope;
}

Branch classify_branch(const Texture& tex) {
  if (has_ninety_crossing(tex)) return Branch::extended;
  return has_plateau(tex) ? Branch::parted : Branch::simple;
}

PotentialWell potential_well(const Texture& tex) {
  if (!tex.converged) throw NumericsError("potential_well: texture is not converged");
  PotentialWell out;
  out.u.resize(tex.beta.size());
  for (size_t i = 0; i < tex.beta.size(); ++i) {
    const double s = std::sin(tex.beta[i]);
    out.u[i] = s * s;
  }
  if (has_ninety_crossing(tex)) {
    // first radius where beta crosses 90 degrees
    for (size_t i = 1; i < tex.beta.size(); ++i) {
      if (tex.beta[i] > pi / 2.0 && tex.beta[i - 1] <= pi / 2.0) {
        const double f = (pi / 2.0 - tex.beta[i - 1]) / (tex.beta[i] - tex.beta[i - 1]);
        out.well = std::make_pair(tex.grid.r(static_cast<int>(i) - 1) + f * tex.grid.step,
                                  tex.grid.radius);
        break;
      }
    }
  }
  return out;
}

std::string texture_to_text(const Texture& tex, const std::string& params_hash) {
  std::ostringstream os;
  char buf[128];
  os << "# texlab texture v1\n";
  std::snprintf(buf, sizeof buf, "# branch=%s energy=%.17g converged=%d iterations=%d\n",
                branch_name(tex.branch), tex.energy, tex.converged ? 1 : 0, tex.iterations);
  os << buf;
  std::snprintf(buf, sizeof buf, "# radius=%.17g step=%.17g points=%d params=%s\n",
                tex.grid.radius, tex.grid.step, tex.grid.points(),
                params_hash.empty() ? "-" : params_hash.c_str());
  os << buf;
  os << "# r[m] alpha[rad] beta[rad]\n";
  for (int i = 0; i < tex.grid.points(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", tex.grid.r(i), tex.alpha[i], tex.beta[i]);
    os << buf;
  }
  return os.str();
}

Texture texture_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Texture tex;
  bool have_header = false, have_grid = false;
  std::vector<double> rs;
  while (std::getline(is, line)) {
    if (line.rfind("# branch=", 0) == 0) {
      char br[32];
      double energy;
      int conv, iters;
      if (std::sscanf(line.c_str(), "# branch=%31s energy=%lg converged=%d iterations=%d", br,
                      &energy, &conv, &iters) == 4) {
        tex.branch = branch_from_name(br);
        tex.energy = energy;
        tex.converged = conv != 0;
        tex.iterations = iters;
        have_header = true;
      }
      continue;
    }
    if (line.rfind("# radius=", 0) == 0) {
      double radius, step;
      int points;
      char hash[64];
      if (std::sscanf(line.c_str(), "# radius=%lg step=%lg points=%d params=%63s", &radius, &step,
                      &points, hash) == 4) {
        tex.grid = RadialGrid{radius, step, points - 1};
        have_grid = true;
      }
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    double r, a, b;
    if (std::sscanf(line.c_str(), "%lg %lg %lg", &r, &a, &b) != 3)
      throw ConfigError("texture_from_text: malformed row: " + line);
    rs.push_back(r);
    tex.alpha.push_back(a);
    tex.beta.push_back(b);
  }
  if (!have_header || !have_grid) throw ConfigError("texture_from_text: missing header");
  if (static_cast<int>(tex.alpha.size()) != tex.grid.points())
    throw ConfigError("texture_from_text: row count does not match header");
  return tex;
}

}  // namespace texlab
