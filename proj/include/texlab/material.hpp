#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace texlab {

// Energy-gap model, gaps in units of k_B Tc.
struct GapModel {
  enum class Kind { weak_coupling, strong_coupling, scaled };
  Kind kind = Kind::scaled;
  double zero_T_value = 1.97;
  // T/Tc -> multiplicative strong-coupling correction, normalized internally
  // to its value at T=0.  Empty or identity table reproduces weak coupling.
  std::vector<std::pair<double, double>> correction_table;

  static GapModel weak_coupling();
  static GapModel strong_coupling(std::vector<std::pair<double, double>> table = {});
  static GapModel scaled(std::vector<std::pair<double, double>> table = {});
};

struct FermiLiquidParams {
  double F0a = -0.75;
  double F1s = 13.28;
  double F2a = 0.0;
  double effective_mass_ratio = 5.43;  // m*/m
  double density = 110.2;              // kg/m^3
  double Tc_mK = 2.44;                 // converts gaps to joules
  double gyro_mhz_per_t = -32.435;     // gamma/2pi
};

// Coefficients of the textural free energy, SI with fields in tesla:
// a [J/(m^3 T^2)], lambda_dv [kg/m^3], lambda_g1/g2 [J/m], d [J/(m^2 T^2)],
// lambda_hv [kg/(m^3 T^2)].
struct TexturalCoefficients {
  double a = 0.0;
  double lambda_dv = 0.0;
  double lambda_g1 = 0.0;
  double lambda_g2 = 0.0;
  double d = 0.0;
  double lambda_hv = 0.0;
};

// Coefficients of the Omega_B(T) fit: (Omega_B/2pi)^2 = (1-T^4)(a - b T^4 + c T^6) 1e10.
struct LeggettFit {
  double a = 8.73312;
  double b = 13.32121;
  double c = 1.51919;
};

// Matsubara function Z_j = pi T Delta^(j-1) sum_n (eps_n^2 + Delta^2)^(-j/2),
// eps_n = pi T (2n-1), j in {3,5,7}.  T in Tc units, Delta in k_B Tc units.
double matsubara_Z(int j, double t, double gap);

// Yosida function Y = 1 - Z_3.
double yosida(double t, double gap);

// Gap Delta(T)/k_B Tc for the given model; weak coupling is the
// self-consistent BCS shape normalized to the model's zero-T value.
double gap(double t, const GapModel& model);

// Field-velocity coefficient lambda_HV [kg/(m^3 T^2)].
double lambda_hv(double t, const FermiLiquidParams& fl, double gap_value);

// The dimensionless Z-function bracket of lambda_hv (exposed for diagnostics).
double lambda_hv_bracket(double t, double F2a, double gap_value);

// chi_B/chi_N = (1+F0a)(2/3+Y/3)/(1+F0a(2/3+Y/3)).
double susceptibility_ratio(double t, double gap_value, double F0a);

// Omega_B/2pi in Hz from the fit formula; throws on negative radicand.
double leggett_frequency(double t, const LeggettFit& fit = {});

// Parameter file: [pressure=<bar>] sections with scalar keys and (T,value)
// tables, a [gap] section with the strong-coupling correction table and the
// zero-T gap values, and a [leggett] section with the fit coefficients.
class ParameterTable {
 public:
  static ParameterTable load(const std::string& path);
  static ParameterTable parse(const std::string& text, const std::string& origin = "<string>");

  // Textural coefficients at (t, pressure); lambda_hv is left at zero here
  // (computed from theory or overridden by MaterialState).
  TexturalCoefficients coefficients(double t, double pressure) const;
  FermiLiquidParams fermi_liquid(double pressure) const;
  GapModel gap_model(GapModel::Kind kind) const;
  LeggettFit leggett() const;

  double pressure_min() const;
  double pressure_max() const;

 private:
  struct Section {
    double pressure = 0.0;
    std::map<std::string, double> scalars;
    std::map<std::string, std::vector<std::pair<double, double>>> tables;
  };
  std::vector<Section> sections_;  // sorted by pressure
  std::map<std::string, double> gap_scalars_;
  std::vector<std::pair<double, double>> gap_correction_;
  LeggettFit leggett_{};
  friend struct ParameterTableAccess;
};

// All temperature/pressure-dependent quantities for one physical condition.
struct MaterialState {
  double t = 0.5;           // T/Tc
  double pressure = 29.0;   // bar
  GapModel gap_model;
  FermiLiquidParams fl;
  TexturalCoefficients coeffs;
  double gap_value = 0.0;   // k_B Tc units
  double yosida_value = 1.0;
  double leggett_hz = 0.0;  // Omega_B/2pi

  static MaterialState create(double t, double pressure, GapModel::Kind kind,
                              const ParameterTable& table,
                              std::optional<double> lambda_hv_override = std::nullopt);
};

}  // namespace texlab
