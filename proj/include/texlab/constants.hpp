#pragma once

namespace texlab {

// Physical constants (SI).
constexpr double k_boltzmann = 1.380649e-23;   // J/K
constexpr double hbar = 1.054571817e-34;       // J s
constexpr double planck_h = 6.62607015e-34;    // J s
constexpr double mass_he3 = 5.00824e-27;       // kg

// Circulation quantum h/2m3, m^2/s.
constexpr double kappa_default = planck_h / (2.0 * mass_he3);

// 3He gyromagnetic ratio, gamma/2pi in MHz/T (negative for 3He).
constexpr double gyro_mhz_per_tesla = -32.435;

// |gamma| in rad/(s T).
constexpr double gyro_abs = 2.0 * 3.14159265358979323846 * 32.435e6;

constexpr double pi = 3.14159265358979323846;

// B-phase Leggett angle theta_L = acos(-1/4).
constexpr double cos_theta_leggett = -0.25;

}  // namespace texlab
