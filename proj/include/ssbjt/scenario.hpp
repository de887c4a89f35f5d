#pragma once

#include <Eigen/Dense>
#include <json.hpp>

namespace ssbjt {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

/// dBm -> linear milliwatts.
double dbm_to_mw(double dbm);
/// Linear milliwatts -> dBm.
double mw_to_dbm(double mw);
/// dB ratio -> linear ratio.
double db_to_lin(double db);
/// Linear ratio -> dB. Returns -inf for zero.
double lin_to_db(double lin);

/// Axis-aligned rectangle, meters.
struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
};

/// Geometry, radio constants and discretization parameters defining one
/// simulation world. Immutable after construction; safe to share across
/// threads.
struct NetworkScenario {
  Eigen::Matrix2Xd bs_positions;   // 2 x B, meters
  Eigen::VectorXd bs_powers_dbm;   // per-BS transmit power, dBm
  int num_antennas = 4;            // ULA elements per BS
  double carrier_freq_hz = 7.5e9;
  double wavelength_scale = 100.0; // fringe-visualization scaling of lambda
  double noise_power_dbm = -95.0;
  Rect area;
  double grid_step_m = 0.0;        // spatial sampling step
  double antenna_spacing_wavelengths = 0.5;
  Eigen::VectorXd bs_boresight;    // array broadside direction, radians
  double min_distance_m = 1.0;     // BS-UE distance clamp
  bool exact_element_phases = false;

  int num_bs() const { return static_cast<int>(bs_positions.cols()); }
  /// Wavelength after visualization scaling: wavelength_scale * c / f.
  double scaled_wavelength() const {
    return wavelength_scale * kSpeedOfLight / carrier_freq_hz;
  }
  double noise_power_mw() const { return dbm_to_mw(noise_power_dbm); }
  Eigen::VectorXd bs_powers_mw() const;

  /// Throws InvalidValueError if any invariant is violated.
  void validate() const;
};

/// Cell centers tiling the scenario area, row-major: index = row*nx + col
/// with rows along y and columns along x.
struct Grid {
  Eigen::Matrix2Xd cells;  // 2 x |G| cell centers, meters
  double step = 0.0;       // requested step (cells may be slightly finer)
  int nx = 0;
  int ny = 0;

  Eigen::Index size() const { return cells.cols(); }
};

/// Builds and validates a scenario from a parsed JSON config. Required
/// keys: bs_positions, area. All other keys default (see README).
/// Throws MissingFieldError / InvalidValueError.
NetworkScenario build_scenario(const nlohmann::json& config);

/// Canonical serialization; build_scenario(to_json(s)) reproduces s exactly.
nlohmann::json to_json(const NetworkScenario& s);

/// Four base stations at the corners of a 100x100 m area, 0 dBm each,
/// 4-element arrays at 7.5 GHz, 1 m grid. The default demo world.
NetworkScenario four_corner_scenario();

Grid make_grid(const NetworkScenario& scenario);

}  // namespace ssbjt
