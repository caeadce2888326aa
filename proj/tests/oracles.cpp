#include "oracles.hpp"

#include <cmath>

#include "texlab/constants.hpp"

namespace texlab::oracle {

double z_limit_quadrature(int j, double gap) {
  // pi T sum_n -> (1/2) int d eps over the real line as T -> 0
  // Z_j -> Delta^(j-1)/2 * int (eps^2 + Delta^2)^(-j/2) d eps, by Simpson on
  // a substituted finite interval eps = Delta tan(s), s in (-pi/2, pi/2)
  const int n = 20000;
  const double lo = -pi / 2 + 1e-9, hi = pi / 2 - 1e-9;
  const double h = (hi - lo) / n;
  auto f = [&](double s) {
    const double eps = gap * std::tan(s);
    const double jac = gap / std::pow(std::cos(s), 2);
    return std::pow(eps * eps + gap * gap, -0.5 * j) * jac;
  };
  double sum = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  const double integral = sum * h / 3.0;
  return 0.5 * std::pow(gap, j - 1) * integral;
}

double z_brute_force(int j, double t, double gap, long terms) {
  const double pit = pi * t;
  double sum = 0.0;
  for (long n = terms; n >= 1; --n) {
    const double eps = pit * (2.0 * n - 1.0);
    sum += 2.0 * std::pow(eps * eps + gap * gap, -0.5 * j);
  }
  return pit * std::pow(gap, j - 1) * sum;
}

double SmoothTexture::beta(double r) const {
  const double x = r / radius;
  double b = beta_wall * x;
  for (size_t k = 0; k < beta_coef.size(); ++k) b += beta_coef[k] * std::sin((k + 1) * pi * x);
  return b;
}

double SmoothTexture::dbeta(double r) const {
  const double x = r / radius;
  double d = beta_wall / radius;
  for (size_t k = 0; k < beta_coef.size(); ++k)
    d += beta_coef[k] * (k + 1) * pi / radius * std::cos((k + 1) * pi * x);
  return d;
}

double SmoothTexture::alpha(double r) const {
  const double x = r / radius;
  double a = alpha0;
  for (size_t k = 0; k < alpha_coef.size(); ++k)
    a += alpha_coef[k] * std::sin((k + 0.5) * pi * x);
  return a;
}

double SmoothTexture::dalpha(double r) const {
  const double x = r / radius;
  double d = 0.0;
  for (size_t k = 0; k < alpha_coef.size(); ++k)
    d += alpha_coef[k] * (k + 0.5) * pi / radius * std::cos((k + 0.5) * pi * x);
  return d;
}

SmoothTexture SmoothTexture::random(std::mt19937& rng, double radius, bool extended) {
  std::uniform_real_distribution<double> amp(-0.15, 0.15);
  std::uniform_real_distribution<double> a0(-1.0, 1.0);
  SmoothTexture t;
  t.radius = radius;
  t.beta_wall = extended ? pi - 1.1071487177940904 : 1.1071487177940904;
  for (int k = 0; k < 3; ++k) t.beta_coef.push_back(amp(rng));
  for (int k = 0; k < 3; ++k) t.alpha_coef.push_back(amp(rng));
  t.alpha0 = a0(rng);
  return t;
}

Texture SmoothTexture::sample(const RadialGrid& grid) const {
  Texture tex;
  tex.grid = grid;
  tex.alpha.resize(grid.points());
  tex.beta.resize(grid.points());
  for (int i = 0; i < grid.points(); ++i) {
    tex.alpha[i] = alpha(grid.r(i));
    tex.beta[i] = beta(grid.r(i));
  }
  tex.converged = true;
  return tex;
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 rot_at(const SmoothTexture& tex, double r, double phi) {
  const double theta = std::acos(cos_theta_leggett);
  return rotation_matrix(nhat_field(tex.alpha(r), tex.beta(r), phi), theta);
}

struct Densities {
  double dh, dv, g, hv;
};

Densities densities_2d(const SmoothTexture& tex, const MaterialState& mat, const FlowState& flow,
                       double field, double r, double phi) {
  const auto& c = mat.coeffs;
  Densities out{0, 0, 0, 0};
  const auto n = nhat_field(tex.alpha(r), tex.beta(r), phi);
  const double H2 = field * field;
  out.dh = -c.a * H2 * n[2] * n[2];

  const double v = counterflow(r, flow);
  const double ephi[3] = {-std::sin(phi), std::cos(phi), 0.0};
  double ndotv = 0.0;
  for (int i = 0; i < 3; ++i) ndotv += n[i] * ephi[i] * v;
  out.dv = -c.lambda_dv * ndotv * ndotv;

  const Mat3 R = rot_at(tex, r, phi);
  double zRv = 0.0;
  for (int j2 = 0; j2 < 3; ++j2) zRv += R[2][j2] * ephi[j2] * v;
  out.hv = -c.lambda_hv * H2 * zRv * zRv;

  // gradient contractions from finite differences of the matrix entries
  const double hr = 3e-6 * tex.radius;
  const double hphi = 1e-4;
  Mat3 Rrp = rot_at(tex, r + hr, phi), Rrm = rot_at(tex, r - hr, phi);
  Mat3 Rpp = rot_at(tex, r, phi + hphi), Rpm = rot_at(tex, r, phi - hphi);
  const double cphi = std::cos(phi), sphi = std::sin(phi);
  double gdiv = 0.0, gall = 0.0;
  for (int s = 0; s < 3; ++s) {
    double div = 0.0;
    for (int j2 = 0; j2 < 3; ++j2) {
      const double dr = (Rrp[s][j2] - Rrm[s][j2]) / (2.0 * hr);
      const double dphi = (Rpp[s][j2] - Rpm[s][j2]) / (2.0 * hphi) / r;
      const double dx = cphi * dr - sphi * dphi;
      const double dy = sphi * dr + cphi * dphi;
      gall += dx * dx + dy * dy;
      if (j2 == 0) div += dx;
      if (j2 == 1) div += dy;
    }
    gdiv += div * div;
  }
  out.g = c.lambda_g1 * gdiv + c.lambda_g2 * gall;
  return out;
}

}  // namespace

EnergyBreakdown energy_2d(const SmoothTexture& tex, const MaterialState& mat,
                          const FlowState& flow, double field, int nr, int nphi) {
  if (nr % 2) ++nr;
  const double hr = tex.radius / nr;
  const double hphi = 2.0 * pi / nphi;
  EnergyBreakdown out;
  for (int i = 0; i <= nr; ++i) {
    const double r = i * hr;
    const double wr = (i == 0 || i == nr) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    if (r == 0.0) continue;  // measure r dr kills the axis point
    const double inner_r = std::min(r, tex.radius * (1.0 - 1e-12));
    for (int k = 0; k < nphi; ++k) {
      const double phi = k * hphi;
      const Densities d = densities_2d(tex, mat, flow, field, inner_r, phi);
      const double w = wr * hr / 3.0 * hphi * r;
      out.f_dh += w * d.dh;
      out.f_dv += w * d.dv;
      out.f_g += w * d.g;
      out.f_hv += w * d.hv;
    }
  }
  // surface term, s_hat = -r_hat
  const double theta = std::acos(cos_theta_leggett);
  for (int k = 0; k < nphi; ++k) {
    const double phi = k * hphi;
    const auto R = rotation_matrix(
        nhat_field(tex.alpha(tex.radius), tex.beta(tex.radius), phi), theta);
    const double rhat[3] = {std::cos(phi), std::sin(phi), 0.0};
    double zRs = 0.0;
    for (int j2 = 0; j2 < 3; ++j2) zRs += R[2][j2] * (-rhat[j2]);
    out.f_sh += -mat.coeffs.d * field * field * zRs * zRs * hphi * tex.radius;
  }
  out.total = out.f_dh + out.f_dv + out.f_g + out.f_hv + out.f_sh;
  return out;
}

EnergyBreakdown energy_1d_fine(const SmoothTexture& tex, const MaterialState& mat,
                               const FlowState& flow, double field, int m) {
  RadialGrid grid{tex.radius, tex.radius / m, m};
  Texture sampled = tex.sample(grid);
  return total_energy(sampled, mat, flow, field);
}

void fd_gradient(const Texture& tex, const MaterialState& mat, const FlowState& flow, double field,
                 double step, std::vector<double>& g_alpha, std::vector<double>& g_beta) {
  Texture work = tex;
  const int n = tex.grid.points();
  g_alpha.assign(n, 0.0);
  g_beta.assign(n, 0.0);
  auto energy = [&]() { return total_energy(work, mat, flow, field).total; };
  for (int i = 0; i < n; ++i) {
    const double keep = work.alpha[i];
    work.alpha[i] = keep + step;
    const double ep = energy();
    work.alpha[i] = keep - step;
    const double em = energy();
    work.alpha[i] = keep;
    g_alpha[i] = (ep - em) / (2.0 * step);
  }
  for (int i = 1; i < n; ++i) {  // beta_0 pinned
    const double keep = work.beta[i];
    work.beta[i] = keep + step;
    const double ep = energy();
    work.beta[i] = keep - step;
    const double em = energy();
    work.beta[i] = keep;
    g_beta[i] = (ep - em) / (2.0 * step);
  }
}

const ParameterTable& default_table() {
  static const ParameterTable table = ParameterTable::load(TEXLAB_SOURCE_DIR "/data/he3b.params");
  return table;
}

}  // namespace texlab::oracle
