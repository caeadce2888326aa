#include "texlab/material.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "texlab/constants.hpp"
#include "texlab/errors.hpp"

namespace texlab {

namespace {

constexpr double kPairRelTol = 1e-13;
constexpr long kPairCap = 10'000'000;

// Interpolate a (x, y) table sorted by x; linear inside, clamped outside.
double table_interp(const std::vector<std::pair<double, double>>& tbl, double x) {
  if (tbl.empty()) throw ConfigError("empty table lookup");
  if (x <= tbl.front().first) return tbl.front().second;
  if (x >= tbl.back().first) return tbl.back().second;
  auto it = std::lower_bound(tbl.begin(), tbl.end(), x,
                             [](const auto& p, double v) { return p.first < v; });
  auto lo = it - 1;
  double w = (x - lo->first) / (it->first - lo->first);
  return lo->second + w * (it->second - lo->second);
}

}  // namespace

double matsubara_Z(int j, double t, double gap_value) {
  if (j != 3 && j != 5 && j != 7) throw NumericsError("matsubara_Z: j must be 3, 5 or 7");
  if (t <= 0.0 || t > 1.0) throw NumericsError("matsubara_Z: T/Tc out of (0,1]");
  if (gap_value < 0.0) throw NumericsError("matsubara_Z: negative gap");
  if (gap_value == 0.0) return 0.0;  // Delta^(j-1) prefactor

  const double pit = pi * t;
  const double g2 = gap_value * gap_value;
  const double half = 0.5 * j;
  double sum = 0.0;
  for (long n = 1; n <= kPairCap; ++n) {
    const double eps = pit * (2.0 * n - 1.0);
    const double pair = 2.0 * std::pow(eps * eps + g2, -half);
    sum += pair;
    if (pair < kPairRelTol * sum) {
      return pit * std::pow(gap_value, j - 1) * sum;
    }
  }
  throw MatsubaraError("matsubara_Z: no convergence within term cap",
                       pit * std::pow(gap_value, j - 1) * sum);
}

double yosida(double t, double gap_value) { return 1.0 - matsubara_Z(3, t, gap_value); }

namespace {

// Reduced BCS gap equation, Delta in k_B Tc units:
//   ln(1/t) = 2 pi t sum_{n>=1} [1/eps_n - 1/sqrt(eps_n^2 + Delta^2)].
// The slowly convergent tail is replaced by its integral.
double gap_equation_rhs(double t, double delta) {
  const double pit = pi * t;
  const double d2 = delta * delta;
  const long nmax = std::max<long>(400, static_cast<long>(30.0 * delta / (2.0 * pit)));
  double sum = 0.0;
  for (long n = 1; n <= nmax; ++n) {
    const double eps = pit * (2.0 * n - 1.0);
    sum += 1.0 / eps - 1.0 / std::sqrt(eps * eps + d2);
  }
  // integral tail from eps_N: int [1/e - 1/sqrt(e^2+d^2)] de / (2 pi t)
  const double eN = pit * (2.0 * nmax);
  const double tail = std::log((eN + std::sqrt(eN * eN + d2)) / (2.0 * eN));
  return 2.0 * pit * sum + tail;
}

struct BcsShape {
  // s(t) = Delta_BCS(t) / Delta_BCS(0) on a 2001-point grid, cubic interpolation.
  static constexpr int kN = 2001;
  std::array<double, kN> s{};

  BcsShape() {
    const double delta0 = pi * std::exp(-0.5772156649015329);  // 1.76388
    s[kN - 1] = 0.0;
    double hi = 1.05 * delta0;
    for (int i = kN - 2; i >= 1; --i) {
      const double t = static_cast<double>(i) / (kN - 1);
      // bisection on Delta; warm bracket from the previous (higher-T) point
      double lo = 0.0;
      double a = lo, b = hi;
      double target = std::log(1.0 / t);
      auto res = [&](double d) { return gap_equation_rhs(t, d) - target; };
      if (res(b) < 0.0) b = 2.5 * delta0;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (a + b);
        double r = res(mid);
        if (std::abs(r) < 1e-10) { a = b = mid; break; }
        (r < 0.0 ? a : b) = mid;
        if (b - a < 1e-14 * delta0) break;
      }
      double d = 0.5 * (a + b);
      s[i] = d / delta0;
      hi = std::min(1.2 * d + 1e-3, 2.5 * delta0);
    }
    s[0] = 1.0;
  }

  double eval(double t) const {
    if (t >= 1.0) return 0.0;
    if (t <= 0.0) return 1.0;
    const double x = t * (kN - 1);
    int i = static_cast<int>(x);
    i = std::clamp(i, 1, kN - 3);
    const double u = x - i;
    // Catmull-Rom through the four surrounding grid values
    const double p0 = s[i - 1], p1 = s[i], p2 = s[i + 1], p3 = s[i + 2];
    return p1 + 0.5 * u * (p2 - p0 + u * (2 * p0 - 5 * p1 + 4 * p2 - p3 + u * (3 * (p1 - p2) + p3 - p0)));
  }
};

const BcsShape& bcs_shape() {
  static const BcsShape shape;
  return shape;
}

double correction_rel(const GapModel& m, double t) {
  if (m.correction_table.empty()) return 1.0;
  const double c0 = table_interp(m.correction_table, 0.0);
  if (c0 <= 0.0) throw ConfigError("gap correction table must be positive at T=0");
  return table_interp(m.correction_table, t) / c0;
}

}  // namespace

GapModel GapModel::weak_coupling() {
  return GapModel{Kind::weak_coupling, 1.79, {}};
}
GapModel GapModel::strong_coupling(std::vector<std::pair<double, double>> table) {
  return GapModel{Kind::strong_coupling, 1.87, std::move(table)};
}
GapModel GapModel::scaled(std::vector<std::pair<double, double>> table) {
  return GapModel{Kind::scaled, 1.97, std::move(table)};
}

double gap(double t, const GapModel& model) {
  if (t <= 0.0 || t > 1.0) throw NumericsError("gap: T/Tc out of (0,1]");
  const double shape = bcs_shape().eval(t);
  switch (model.kind) {
    case GapModel::Kind::weak_coupling:
      return model.zero_T_value * shape;
    case GapModel::Kind::strong_coupling:
    case GapModel::Kind::scaled:
      return model.zero_T_value * shape * correction_rel(model, t);
  }
  throw NumericsError("gap: unknown model kind");
}

double lambda_hv_bracket(double t, double F2a, double gap_value) {
  const double z3 = matsubara_Z(3, t, gap_value);
  const double z5 = matsubara_Z(5, t, gap_value);
  const double z7 = matsubara_Z(7, t, gap_value);
  if (z3 <= 0.0) throw NumericsError("lambda_hv_bracket: Z_3 vanished");
  double br = z3 - 0.9 * z5 + 0.9 * z5 * z5 / z3 - 1.5 * z7;
  br += 3.0 * F2a * z3 / (50.0 * (1.0 + 0.2 * F2a)) * (3.0 * z5 - 2.0 * z3);
  return br;
}

double lambda_hv(double t, const FermiLiquidParams& fl, double gap_value) {
  if (gap_value <= 0.0) throw NumericsError("lambda_hv: gap must be positive");
  if (t <= 0.0 || t >= 1.0) throw NumericsError("lambda_hv: T/Tc out of (0,1)");
  const double y = yosida(t, gap_value);
  const double gap_joules = gap_value * k_boltzmann * fl.Tc_mK * 1e-3;
  const double gamma = std::abs(fl.gyro_mhz_per_t) * 1e6 * 2.0 * pi;  // rad/(s T)
  const double moment = 0.5 * hbar * gamma * (1.0 + 0.2 * fl.F2a);    // J/T
  const double denom = 1.0 + fl.F0a * (2.0 / 3.0 + y / 3.0) +
                       0.2 * fl.F2a * (1.0 / 3.0 + (2.0 / 3.0 + fl.F0a) * y);
  const double fl_mass = fl.effective_mass_ratio / std::pow(1.0 + fl.F1s * y / 3.0, 2);
  const double bracket = lambda_hv_bracket(t, fl.F2a, gap_value);
  return fl.density / (gap_joules * gap_joules) * fl_mass * std::pow(moment / denom, 2) * bracket;
}

double susceptibility_ratio(double t, double gap_value, double F0a) {
  if (t <= 0.0 || t > 1.0) throw NumericsError("susceptibility_ratio: T/Tc out of (0,1]");
  if (F0a <= -1.0 || F0a > 0.0) throw NumericsError("susceptibility_ratio: F0a out of (-1,0]");
  const double y = yosida(t, gap_value);
  const double core = 2.0 / 3.0 + y / 3.0;
  return (1.0 + F0a) * core / (1.0 + F0a * core);
}

double leggett_frequency(double t, const LeggettFit& fit) {
  if (t < 0.0 || t > 1.0) throw NumericsError("leggett_frequency: T/Tc out of [0,1]");
  const double t4 = std::pow(t, 4);
  const double radicand = (1.0 - t4) * (fit.a - fit.b * t4 + fit.c * t4 * t * t) * 1e10;
  if (radicand < 0.0)
    throw NumericsError("leggett_frequency: fit coefficients invalid at T/Tc=" + std::to_string(t));
  return std::sqrt(radicand);
}

}  // namespace texlab
