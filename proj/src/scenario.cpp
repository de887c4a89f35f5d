#include "ssbjt/scenario.hpp"

#include <cmath>
#include <string>

#include "ssbjt/errors.hpp"

namespace ssbjt {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

double lin_to_db(double lin) {
  return lin > 0.0 ? 10.0 * std::log10(lin)
                   : -std::numeric_limits<double>::infinity();
}

Eigen::VectorXd NetworkScenario::bs_powers_mw() const {
  return bs_powers_dbm.unaryExpr([](double p) { return dbm_to_mw(p); });
}

namespace {

void require(bool ok, const std::string& name, const std::string& reason) {
  if (!ok) throw InvalidValueError(name, reason);
}

}  // namespace

void NetworkScenario::validate() const {
  const int b = num_bs();
  require(b >= 1, "bs_positions", "at least one base station required");
  require(bs_positions.allFinite(), "bs_positions", "must be finite");
  require(bs_powers_dbm.size() == b, "bs_powers_dbm",
          "length " + std::to_string(bs_powers_dbm.size()) +
              " does not match number of base stations " + std::to_string(b));
  require(bs_powers_dbm.allFinite(), "bs_powers_dbm", "must be finite");
  require(num_antennas >= 1, "num_antennas", "must be >= 1");
  require(std::isfinite(carrier_freq_hz) && carrier_freq_hz > 0.0,
          "carrier_freq_hz", "must be positive and finite");
  require(std::isfinite(wavelength_scale) && wavelength_scale > 0.0,
          "wavelength_scale", "must be positive and finite");
  require(std::isfinite(noise_power_dbm), "noise_power_dbm",
          "must be finite");
  require(std::isfinite(area.x_min) && std::isfinite(area.x_max) &&
              std::isfinite(area.y_min) && std::isfinite(area.y_max),
          "area", "must be finite");
  require(area.width() > 0.0 && area.height() > 0.0, "area",
          "must have positive width and height");
  require(std::isfinite(grid_step_m) && grid_step_m > 0.0, "grid_step_m",
          "must be positive and finite");
  // Grid cells must stay much smaller than the (scaled) wavelength.
  require(grid_step_m < scaled_wavelength(), "grid_step_m",
          "must be smaller than the scaled wavelength " +
              std::to_string(scaled_wavelength()) + " m");
  require(std::isfinite(antenna_spacing_wavelengths) &&
              antenna_spacing_wavelengths > 0.0,
          "antenna_spacing_wavelengths", "must be positive and finite");
  require(bs_boresight.size() == b, "bs_boresight",
          "length must match number of base stations");
  require(bs_boresight.allFinite(), "bs_boresight", "must be finite");
  require(std::isfinite(min_distance_m) && min_distance_m > 0.0,
          "min_distance_m", "must be positive and finite");
  for (int i = 0; i < b; ++i) {
    require(area.contains(bs_positions(0, i), bs_positions(1, i)),
            "bs_positions",
            "base station " + std::to_string(i) + " lies outside the area");
  }
}

namespace {

double number_field(const nlohmann::json& config, const char* key,
                    double fallback) {
  if (!config.contains(key)) return fallback;
  const auto& v = config.at(key);
  if (!v.is_number()) throw InvalidValueError(key, "expected a number");
  return v.get<double>();
}

Eigen::VectorXd vector_field(const nlohmann::json& config, const char* key,
                             int expected_len) {
  const auto& v = config.at(key);
  Eigen::VectorXd out(expected_len);
  if (v.is_number()) {
    out.setConstant(v.get<double>());
    return out;
  }
  if (!v.is_array() || static_cast<int>(v.size()) != expected_len)
    throw InvalidValueError(
        key, "expected a number or an array of length " +
                 std::to_string(expected_len));
  for (int i = 0; i < expected_len; ++i) {
    if (!v[i].is_number()) throw InvalidValueError(key, "expected numbers");
    out[i] = v[i].get<double>();
  }
  return out;
}

Rect area_field(const nlohmann::json& config) {
  const auto& v = config.at("area");
  if (!v.is_object()) throw InvalidValueError("area", "expected an object");
  for (const char* key : {"x_min", "y_min", "x_max", "y_max"}) {
    if (!v.contains(key))
      throw MissingFieldError(std::string("area.") + key);
    if (!v.at(key).is_number())
      throw InvalidValueError(std::string("area.") + key,
                              "expected a number");
  }
  return Rect{v.at("x_min").get<double>(), v.at("y_min").get<double>(),
              v.at("x_max").get<double>(), v.at("y_max").get<double>()};
}

}  // namespace

NetworkScenario build_scenario(const nlohmann::json& config) {
  if (!config.contains("bs_positions"))
    throw MissingFieldError("bs_positions");
  if (!config.contains("area")) throw MissingFieldError("area");

  const auto& pos = config.at("bs_positions");
  if (!pos.is_array() || pos.empty())
    throw InvalidValueError("bs_positions", "expected a nonempty array");
  const int b = static_cast<int>(pos.size());

  NetworkScenario s;
  s.bs_positions.resize(2, b);
  for (int i = 0; i < b; ++i) {
    const auto& p = pos[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number())
      throw InvalidValueError("bs_positions",
                              "entry " + std::to_string(i) +
                                  " must be a [x, y] pair");
    s.bs_positions(0, i) = p[0].get<double>();
    s.bs_positions(1, i) = p[1].get<double>();
  }

  s.area = area_field(config);

  if (config.contains("bs_powers_dbm"))
    s.bs_powers_dbm = vector_field(config, "bs_powers_dbm", b);
  else
    s.bs_powers_dbm = Eigen::VectorXd::Zero(b);  // 0 dBm each

  const double num_antennas = number_field(config, "num_antennas", 4.0);
  if (num_antennas != std::floor(num_antennas))
    throw InvalidValueError("num_antennas", "expected an integer");
  s.num_antennas = static_cast<int>(num_antennas);
  s.carrier_freq_hz = number_field(config, "carrier_freq_hz", 7.5e9);
  s.wavelength_scale = number_field(config, "wavelength_scale", 100.0);
  s.noise_power_dbm = number_field(config, "noise_power_dbm", -95.0);
  s.antenna_spacing_wavelengths =
      number_field(config, "antenna_spacing_wavelengths", 0.5);
  s.min_distance_m = number_field(config, "min_distance_m", 1.0);
  s.grid_step_m =
      number_field(config, "grid_step_m", s.scaled_wavelength() / 4.0);

  if (config.contains("bs_boresight")) {
    s.bs_boresight = vector_field(config, "bs_boresight", b);
  } else {
    // Aim each array's broadside at the area centroid.
    const double cx = 0.5 * (s.area.x_min + s.area.x_max);
    const double cy = 0.5 * (s.area.y_min + s.area.y_max);
    s.bs_boresight.resize(b);
    for (int i = 0; i < b; ++i)
      s.bs_boresight[i] = std::atan2(cy - s.bs_positions(1, i),
                                     cx - s.bs_positions(0, i));
  }

  if (config.contains("exact_element_phases")) {
    const auto& v = config.at("exact_element_phases");
    if (!v.is_boolean())
      throw InvalidValueError("exact_element_phases", "expected a boolean");
    s.exact_element_phases = v.get<bool>();
  }

  s.validate();
  return s;
}

nlohmann::json to_json(const NetworkScenario& s) {
  nlohmann::json j;
  auto positions = nlohmann::json::array();
  for (int i = 0; i < s.num_bs(); ++i)
    positions.push_back({s.bs_positions(0, i), s.bs_positions(1, i)});
  j["bs_positions"] = positions;
  j["bs_powers_dbm"] =
      std::vector<double>(s.bs_powers_dbm.begin(), s.bs_powers_dbm.end());
  j["num_antennas"] = s.num_antennas;
  j["carrier_freq_hz"] = s.carrier_freq_hz;
  j["wavelength_scale"] = s.wavelength_scale;
  j["noise_power_dbm"] = s.noise_power_dbm;
  j["area"] = {{"x_min", s.area.x_min},
               {"y_min", s.area.y_min},
               {"x_max", s.area.x_max},
               {"y_max", s.area.y_max}};
  j["grid_step_m"] = s.grid_step_m;
  j["antenna_spacing_wavelengths"] = s.antenna_spacing_wavelengths;
  j["bs_boresight"] =
      std::vector<double>(s.bs_boresight.begin(), s.bs_boresight.end());
  j["min_distance_m"] = s.min_distance_m;
  j["exact_element_phases"] = s.exact_element_phases;
  return j;
}

NetworkScenario four_corner_scenario() {
  nlohmann::json config = {
      {"bs_positions",
       {{0.0, 0.0}, {100.0, 0.0}, {0.0, 100.0}, {100.0, 100.0}}},
      {"area",
       {{"x_min", 0.0}, {"y_min", 0.0}, {"x_max", 100.0}, {"y_max", 100.0}}},
      {"grid_step_m", 1.0},
  };
  return build_scenario(config);
}

Grid make_grid(const NetworkScenario& scenario) {
  scenario.validate();
  const double w = scenario.area.width();
  const double h = scenario.area.height();
  // ceil with a small guard against floating-point spill when the step
  // divides the extent exactly.
  const int nx = static_cast<int>(std::ceil(w / scenario.grid_step_m - 1e-9));
  const int ny = static_cast<int>(std::ceil(h / scenario.grid_step_m - 1e-9));
  // The requested step is an upper bound; cells tile the area exactly,
  // so the effective step per axis may be slightly finer.
  const double sx = w / nx;
  const double sy = h / ny;

  Grid grid;
  grid.step = scenario.grid_step_m;
  grid.nx = nx;
  grid.ny = ny;
  grid.cells.resize(2, static_cast<Eigen::Index>(nx) * ny);
  Eigen::Index idx = 0;
  for (int j = 0; j < ny; ++j) {
    const double y = scenario.area.y_min + (j + 0.5) * sy;
    for (int i = 0; i < nx; ++i, ++idx) {
      grid.cells(0, idx) = scenario.area.x_min + (i + 0.5) * sx;
      grid.cells(1, idx) = y;
    }
  }
  return grid;
}

}  // namespace ssbjt
