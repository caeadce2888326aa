#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "texlab/errors.hpp"
#include "texlab/material.hpp"

namespace texlab {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& s, const std::string& where) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad number '" + s + "' " + where);
  }
}

double interp_t(const std::vector<std::pair<double, double>>& tbl, double t,
                const std::string& key) {
  if (tbl.empty()) throw ConfigError("parameter table: missing key '" + key + "'");
  if (t <= tbl.front().first) return tbl.front().second;
  if (t >= tbl.back().first) return tbl.back().second;
  auto it = std::lower_bound(tbl.begin(), tbl.end(), t,
                             [](const auto& p, double v) { return p.first < v; });
  auto lo = it - 1;
  double w = (t - lo->first) / (it->first - lo->first);
  return lo->second + w * (it->second - lo->second);
}

}  // namespace

struct ParameterTableAccess {
  static const std::vector<std::pair<double, double>>& gap_correction(const ParameterTable& t) {
    return t.gap_correction_;
  }
};

ParameterTable ParameterTable::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open parameter file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse(ss.str(), path);
}

ParameterTable ParameterTable::parse(const std::string& text, const std::string& origin) {
  ParameterTable out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  enum class Mode { none, pressure, gap, leggett } mode = Mode::none;
  Section* cur = nullptr;

  while (std::getline(is, line)) {
    ++lineno;
    const std::string where = "at " + origin + ":" + std::to_string(lineno);
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;

    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("unterminated section header " + where);
      const std::string name = trim(s.substr(1, s.size() - 2));
      if (name.rfind("pressure=", 0) == 0) {
        out.sections_.push_back({});
        cur = &out.sections_.back();
        cur->pressure = to_double(name.substr(9), where);
        mode = Mode::pressure;
      } else if (name == "gap") {
        mode = Mode::gap;
      } else if (name == "leggett") {
        mode = Mode::leggett;
      } else {
        throw ConfigError("unknown section [" + name + "] " + where);
      }
      continue;
    }

    const size_t eq = s.find('=');
    if (eq != std::string::npos) {
      const std::string key = trim(s.substr(0, eq));
      const double value = to_double(trim(s.substr(eq + 1)), where);
      switch (mode) {
        case Mode::pressure:
          cur->scalars[key] = value;
          break;
        case Mode::gap:
          out.gap_scalars_[key] = value;
          break;
        case Mode::leggett:
          if (key == "a") out.leggett_.a = value;
          else if (key == "b") out.leggett_.b = value;
          else if (key == "c") out.leggett_.c = value;
          else throw ConfigError("unknown leggett key '" + key + "' " + where);
          break;
        default:
          throw ConfigError("key outside any section " + where);
      }
      continue;
    }

    // table row: `key T value`
    std::istringstream row(s);
    std::string key, ts, vs;
    if (!(row >> key >> ts >> vs))
      throw ConfigError("malformed row '" + s + "' " + where);
    const double t = to_double(ts, where);
    const double v = to_double(vs, where);
    if (mode == Mode::pressure) {
      cur->tables[key].emplace_back(t, v);
    } else if (mode == Mode::gap) {
      if (key != "corr") throw ConfigError("unknown gap table '" + key + "' " + where);
      out.gap_correction_.emplace_back(t, v);
    } else {
      throw ConfigError("table row outside a [pressure=] or [gap] section " + where);
    }
  }

  if (out.sections_.empty()) throw ConfigError("parameter file has no [pressure=] section: " + origin);
  std::sort(out.sections_.begin(), out.sections_.end(),
            [](const Section& a, const Section& b) { return a.pressure < b.pressure; });
  for (auto& sec : out.sections_)
    for (auto& [k, tbl] : sec.tables) std::sort(tbl.begin(), tbl.end());
  std::sort(out.gap_correction_.begin(), out.gap_correction_.end());
  return out;
}

double ParameterTable::pressure_min() const { return sections_.front().pressure; }
double ParameterTable::pressure_max() const { return sections_.back().pressure; }

namespace {

// locate bracketing sections and an interpolation weight
struct PressureBracket {
  size_t lo, hi;
  double w;
};

}  // namespace

static PressureBracket bracket_pressure(const std::vector<double>& ps, double p) {
  if (p < ps.front() - 1e-9 || p > ps.back() + 1e-9)
    throw ConfigError("pressure " + std::to_string(p) + " bar outside table range [" +
                      std::to_string(ps.front()) + ", " + std::to_string(ps.back()) + "]");
  if (ps.size() == 1) return {0, 0, 0.0};
  auto it = std::lower_bound(ps.begin(), ps.end(), p);
  if (it == ps.begin()) return {0, 0, 0.0};
  if (it == ps.end()) return {ps.size() - 1, ps.size() - 1, 0.0};
  size_t hi = it - ps.begin();
  size_t lo = hi - 1;
  double w = (p - ps[lo]) / (ps[hi] - ps[lo]);
  return {lo, hi, w};
}

TexturalCoefficients ParameterTable::coefficients(double t, double pressure) const {
  std::vector<double> ps;
  for (const auto& s : sections_) ps.push_back(s.pressure);
  const auto br = bracket_pressure(ps, pressure);
  auto value = [&](const char* key) {
    auto get = [&](const Section& sec) {
      auto it = sec.tables.find(key);
      if (it == sec.tables.end())
        throw ConfigError(std::string("parameter table: missing key '") + key + "' at pressure " +
                          std::to_string(sec.pressure));
      return interp_t(it->second, t, key);
    };
    const double vlo = get(sections_[br.lo]);
    if (br.lo == br.hi) return vlo;
    const double vhi = get(sections_[br.hi]);
    return vlo + br.w * (vhi - vlo);
  };
  TexturalCoefficients c;
  c.a = value("a");
  c.lambda_dv = value("lambda_DV");
  c.lambda_g1 = value("lambda_G1");
  c.lambda_g2 = value("lambda_G2");
  c.d = value("d");
  c.lambda_hv = 0.0;
  return c;
}

FermiLiquidParams ParameterTable::fermi_liquid(double pressure) const {
  std::vector<double> ps;
  for (const auto& s : sections_) ps.push_back(s.pressure);
  const auto br = bracket_pressure(ps, pressure);
  auto value = [&](const char* key) {
    auto get = [&](const Section& sec) {
      auto it = sec.scalars.find(key);
      if (it == sec.scalars.end())
        throw ConfigError(std::string("parameter table: missing scalar '") + key +
                          "' at pressure " + std::to_string(sec.pressure));
      return it->second;
    };
    const double vlo = get(sections_[br.lo]);
    if (br.lo == br.hi) return vlo;
    return vlo + br.w * (get(sections_[br.hi]) - vlo);
  };
  FermiLiquidParams fl;
  fl.F0a = value("F0a");
  fl.F1s = value("F1s");
  fl.F2a = value("F2a");
  fl.effective_mass_ratio = value("effective_mass_ratio");
  fl.density = value("density");
  fl.Tc_mK = value("Tc_mK");
  return fl;
}

GapModel ParameterTable::gap_model(GapModel::Kind kind) const {
  auto scalar = [&](const char* key, double fallback) {
    auto it = gap_scalars_.find(key);
    return it == gap_scalars_.end() ? fallback : it->second;
  };
  GapModel m;
  m.kind = kind;
  switch (kind) {
    case GapModel::Kind::weak_coupling:
      m.zero_T_value = scalar("delta0_weak", 1.79);
      m.correction_table.clear();
      break;
    case GapModel::Kind::strong_coupling:
      m.zero_T_value = scalar("delta0_strong", 1.87);
      m.correction_table = gap_correction_;
      break;
    case GapModel::Kind::scaled:
      m.zero_T_value = scalar("delta0_scaled", 1.97);
      m.correction_table = gap_correction_;
      break;
  }
  return m;
}

LeggettFit ParameterTable::leggett() const { return leggett_; }

MaterialState MaterialState::create(double t, double pressure, GapModel::Kind kind,
                                    const ParameterTable& table,
                                    std::optional<double> lambda_hv_override) {
  if (t <= 0.0 || t > 1.0) throw ConfigError("MaterialState: T/Tc must lie in (0,1]");
  MaterialState st;
  st.t = t;
  st.pressure = pressure;
  st.gap_model = table.gap_model(kind);
  st.fl = table.fermi_liquid(pressure);
  st.gap_value = gap(t, st.gap_model);
  st.yosida_value = yosida(t, st.gap_value);
  st.coeffs = table.coefficients(t, pressure);
  if (lambda_hv_override) {
    st.coeffs.lambda_hv = *lambda_hv_override;
  } else if (st.gap_value > 0.0 && t < 1.0) {
    st.coeffs.lambda_hv = lambda_hv(t, st.fl, st.gap_value);
  } else {
    st.coeffs.lambda_hv = 0.0;
  }
  try {
    st.leggett_hz = leggett_frequency(t, table.leggett());
  } catch (const NumericsError&) {
    st.leggett_hz = 0.0;  // fit formula leaves its validity range near Tc
  }
  return st;
}

}  // namespace texlab
