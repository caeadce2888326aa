#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "texlab/errors.hpp"
#include "texlab/material.hpp"

using namespace texlab;

TEST_CASE("matsubara_Z vanishes with the gap and matches the T->0 quadrature limits") {
  CHECK(matsubara_Z(3, 1.0, 0.0) == 0.0);

  const double gap0 = 1.97;
  // independent oracle: pi T sum -> (1/2) integral
  const double z3_lim = oracle::z_limit_quadrature(3, gap0);
  const double z5_lim = oracle::z_limit_quadrature(5, gap0);
  const double z7_lim = oracle::z_limit_quadrature(7, gap0);
  CHECK(z3_lim == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(z5_lim == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK(z7_lim == doctest::Approx(8.0 / 15.0).epsilon(1e-6));

  CHECK(matsubara_Z(3, 0.01, gap0) == doctest::Approx(z3_lim).epsilon(1e-3));
  CHECK(matsubara_Z(5, 0.01, gap0) == doctest::Approx(z5_lim).epsilon(1e-3));
  CHECK(matsubara_Z(7, 0.01, gap0) == doctest::Approx(z7_lim).epsilon(1e-3));

  CHECK_THROWS_AS(matsubara_Z(4, 0.5, 1.0), NumericsError);
  CHECK_THROWS_AS(matsubara_Z(3, 0.0, 1.0), NumericsError);
}

TEST_CASE("matsubara_Z agrees with a fixed-truncation brute-force sum") {
  const GapModel sc = GapModel::strong_coupling({{0.0, 1.0447}, {1.0, 1.17}});
  for (double t : {0.2, 0.35, 0.5, 0.75}) {
    const double g = gap(t, sc);
    for (int j : {3, 5, 7}) {
      const double bf1 = oracle::z_brute_force(j, t, g, 2'000'000);
      const double bf2 = oracle::z_brute_force(j, t, g, 4'000'000);
      CHECK(std::abs(bf1 - bf2) < 1e-10);  // truncation-doubling stability
      CHECK(matsubara_Z(j, t, g) == doctest::Approx(bf2).epsilon(1e-9));
    }
  }
}

TEST_CASE("yosida limits and the exact Z3 + Y = 1 identity") {
  CHECK(yosida(1.0, 0.0) == 1.0);
  CHECK(yosida(0.01, 1.97) == doctest::Approx(0.0).epsilon(1e-3));
  const double y_mid = yosida(0.5, 1.8);
  CHECK(y_mid > 0.0);
  CHECK(y_mid < 1.0);
  for (double t : {0.1, 0.3, 0.6, 0.9}) {
    const double g = 1.9 * std::sqrt(1.0 - t);
    CHECK(std::abs(matsubara_Z(3, t, g) + yosida(t, g) - 1.0) < 1e-14);
  }
}

TEST_CASE("Z_j decreases monotonically in T at fixed gap model") {
  const GapModel m = oracle::default_table().gap_model(GapModel::Kind::scaled);
  for (int j : {3, 5, 7}) {
    double prev = 2.0;
    for (int i = 1; i <= 50; ++i) {
      const double t = i / 50.0;
      const double z = matsubara_Z(j, t, gap(t, m));
      CHECK(z < prev + 1e-12);
      prev = z;
    }
  }
}

TEST_CASE("gap models: closing at Tc, zero-T values, exact scaled ratio") {
  const auto& tbl = oracle::default_table();
  const GapModel wc = tbl.gap_model(GapModel::Kind::weak_coupling);
  const GapModel sc = tbl.gap_model(GapModel::Kind::strong_coupling);
  const GapModel sl = tbl.gap_model(GapModel::Kind::scaled);

  CHECK(gap(1.0, wc) == 0.0);
  CHECK(gap(1.0, sc) == 0.0);
  CHECK(gap(1.0, sl) == 0.0);
  CHECK(gap(0.01, wc) == doctest::Approx(1.79).epsilon(1e-4));
  CHECK(gap(0.01, sc) == doctest::Approx(1.87).epsilon(1e-4));
  CHECK(gap(0.01, sl) == doctest::Approx(1.97).epsilon(1e-4));

  for (int i = 1; i < 50; ++i) {
    const double t = i / 50.0;
    CHECK(gap(t, sl) / gap(t, sc) == doctest::Approx(1.97 / 1.87).epsilon(1e-12));
  }

  // monotone non-increasing on a 50-point grid
  for (const GapModel& m : {wc, sc, sl}) {
    double prev = 1e9;
    for (int i = 1; i <= 50; ++i) {
      const double g = gap(i / 50.0, m);
      CHECK(g <= prev + 1e-12);
      prev = g;
    }
  }
}

TEST_CASE("lambda_hv bracket cancels at T->0 and the coefficient is order 1") {
  const auto& tbl = oracle::default_table();
  const GapModel sl = tbl.gap_model(GapModel::Kind::scaled);
  const GapModel sc = tbl.gap_model(GapModel::Kind::strong_coupling);
  const FermiLiquidParams fl = tbl.fermi_liquid(29.0);

  const double br_cold = lambda_hv_bracket(0.01, 0.0, gap(0.01, sl));
  CHECK(std::abs(br_cold) < 1e-3);

  const double lam = lambda_hv(0.232, fl, gap(0.232, sl));
  CHECK(lam > 0.05);  // same order as the fitted 0.94 kg/(m^3 T^2)
  CHECK(lam < 10.0);

  for (double t : {0.2, 0.3, 0.4, 0.5}) {
    CHECK(lambda_hv(t, fl, gap(t, sl)) < lambda_hv(t, fl, gap(t, sc)));
  }

  // vanishing at low temperature relative to mid range
  const double l_cold = lambda_hv(0.01, fl, gap(0.01, sl));
  const double l_mid = lambda_hv(0.5, fl, gap(0.5, sl));
  CHECK(l_cold < 1e-3 * l_mid);

  CHECK_THROWS_AS(lambda_hv(0.5, fl, 0.0), NumericsError);
}

TEST_CASE("susceptibility ratio limits and monotonicity in Y") {
  CHECK(susceptibility_ratio(1.0, 0.0, -0.75) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(susceptibility_ratio(0.01, 1.97, -0.75) == doctest::Approx(0.33).epsilon(0.015));
  CHECK(susceptibility_ratio(0.01, 1.97, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-3));

  // monotone in Y: sample synthetic (t, gap) pairs giving increasing Y
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double y_target = i / 20.0;
    // find a gap at t=0.5 with that Yosida value by bisection
    double lo = 0.0, hi = 25.0;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      (yosida(0.5, mid) > y_target ? lo : hi) = mid;
    }
    const double ratio = susceptibility_ratio(0.5, 0.5 * (lo + hi), -0.75);
    CHECK(ratio >= prev - 1e-9);
    prev = ratio;
  }
}

TEST_CASE("leggett frequency fit formula") {
  CHECK(leggett_frequency(1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(leggett_frequency(0.0) == doctest::Approx(295510.0).epsilon(1e-3));
  CHECK(leggett_frequency(0.5) == doctest::Approx(272562.0).epsilon(1e-3));
  CHECK_THROWS_AS(leggett_frequency(0.95), NumericsError);
}

TEST_CASE("parameter table lookup, override and range errors") {
  const auto& tbl = oracle::default_table();
  const TexturalCoefficients c = tbl.coefficients(0.5, 29.0);
  CHECK(c.a > 0.0);
  CHECK(c.lambda_dv > 0.0);
  CHECK(c.lambda_g1 > 0.0);
  CHECK(c.lambda_g2 > 0.0);
  CHECK(c.d > 0.0);
  CHECK(std::isfinite(c.a + c.lambda_dv + c.lambda_g1 + c.lambda_g2 + c.d));

  const MaterialState with_override =
      MaterialState::create(0.36, 29.0, GapModel::Kind::scaled, tbl, 5.9);
  CHECK(with_override.coeffs.lambda_hv == 5.9);

  CHECK_THROWS_AS(tbl.coefficients(0.5, 27.0), ConfigError);
  CHECK_THROWS_AS(ParameterTable::parse("[pressure=29]\na nonsense row here\n"), ConfigError);
  CHECK_THROWS_AS(ParameterTable::parse(""), ConfigError);

  // pressure interpolation between shipped sections
  const auto c28 = tbl.coefficients(0.4, 28.0);
  const auto c29 = tbl.coefficients(0.4, 29.0);
  const auto mid = tbl.coefficients(0.4, 28.5);
  CHECK(mid.a == doctest::Approx(0.5 * (c28.a + c29.a)).epsilon(1e-12));
}

TEST_CASE("MaterialState construction is idempotent") {
  const auto& tbl = oracle::default_table();
  const MaterialState a = MaterialState::create(0.31, 29.0, GapModel::Kind::scaled, tbl);
  const MaterialState b = MaterialState::create(0.31, 29.0, GapModel::Kind::scaled, tbl);
  CHECK(a.gap_value == b.gap_value);
  CHECK(a.coeffs.lambda_hv == b.coeffs.lambda_hv);
  CHECK(a.coeffs.a == b.coeffs.a);
  CHECK(a.leggett_hz == b.leggett_hz);
  CHECK(a.coeffs.lambda_hv > 0.0);
  CHECK(a.leggett_hz > 2e5);
}
