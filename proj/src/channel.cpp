#include "ssbjt/channel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ssbjt/errors.hpp"

namespace ssbjt {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ChannelVector los_channel(const NetworkScenario& scenario, int bs_index,
                          const Eigen::Vector2d& location) {
  const int b = scenario.num_bs();
  if (bs_index < 0 || bs_index >= b)
    throw OutOfRangeError("bs_index " + std::to_string(bs_index) +
                          " outside [0, " + std::to_string(b) + ")");
  if (!scenario.area.contains(location.x(), location.y()))
    throw LocationOutsideAreaError(
        "location (" + std::to_string(location.x()) + ", " +
        std::to_string(location.y()) + ") outside the scenario area");

  const double lambda = scenario.scaled_wavelength();
  const double spacing_m = scenario.antenna_spacing_wavelengths * lambda;
  const Eigen::Vector2d bs = scenario.bs_positions.col(bs_index);
  const Eigen::Vector2d diff = location - bs;
  const double d = std::max(diff.norm(), scenario.min_distance_m);
  const double boresight = scenario.bs_boresight[bs_index];
  const double amp = lambda / (4.0 * kPi * d);  // sqrt of free-space gain

  ChannelVector ch;
  ch.bs_index = bs_index;
  ch.location = location;
  ch.coeffs.resize(scenario.num_antennas);

  if (scenario.exact_element_phases) {
    // Element n sits at bs + n * spacing * u, u along the array axis.
    const Eigen::Vector2d axis(-std::sin(boresight), std::cos(boresight));
    for (int n = 0; n < scenario.num_antennas; ++n) {
      const Eigen::Vector2d elem = bs + n * spacing_m * axis;
      const double dn =
          std::max((location - elem).norm(), scenario.min_distance_m);
      ch.coeffs[n] = std::polar(amp, -2.0 * kPi * dn / lambda);
    }
  } else {
    const double phi = std::atan2(diff.y(), diff.x()) - boresight;
    const double sin_phi = std::sin(phi);
    for (int n = 0; n < scenario.num_antennas; ++n) {
      const double dn = d - n * spacing_m * sin_phi;
      ch.coeffs[n] = std::polar(amp, -2.0 * kPi * dn / lambda);
    }
  }
  return ch;
}

ChannelField channel_field(const NetworkScenario& scenario, const Grid& grid,
                           std::size_t max_bytes) {
  const std::size_t entries = static_cast<std::size_t>(scenario.num_bs()) *
                              scenario.num_antennas * grid.size();
  const std::size_t bytes = entries * sizeof(std::complex<double>);
  if (bytes > max_bytes)
    throw ResourceLimitError("channel field needs " + std::to_string(bytes) +
                             " bytes, budget is " + std::to_string(max_bytes));

  ChannelField field;
  field.per_bs.resize(scenario.num_bs());
  for (int b = 0; b < scenario.num_bs(); ++b) {
    Eigen::MatrixXcd& h = field.per_bs[b];
    h.resize(scenario.num_antennas, grid.size());
#pragma omp parallel for schedule(static)
    for (Eigen::Index g = 0; g < grid.size(); ++g)
      h.col(g) = los_channel(scenario, b, grid.cells.col(g)).coeffs;
  }
  return field;
}

BeamPowerField beam_power_field(const NetworkScenario& scenario,
                                const Grid& grid,
                                const BeamCodebook& codebook) {
  if (codebook.rows() != scenario.num_antennas)
    throw DimensionMismatchError("codebook rows must equal num_antennas");
  const Eigen::VectorXd powers = scenario.bs_powers_mw();

  BeamPowerField field;
  field.per_bs.resize(scenario.num_bs());
  for (int b = 0; b < scenario.num_bs(); ++b) {
    Eigen::MatrixXd& p = field.per_bs[b];
    p.resize(codebook.cols(), grid.size());
    // Blocked over cells to keep the intermediate channel matrix small.
    constexpr Eigen::Index kBlock = 8192;
#pragma omp parallel for schedule(static)
    for (Eigen::Index start = 0; start < grid.size(); start += kBlock) {
      const Eigen::Index len = std::min(kBlock, grid.size() - start);
      Eigen::MatrixXcd h(scenario.num_antennas, len);
      for (Eigen::Index g = 0; g < len; ++g)
        h.col(g) = los_channel(scenario, b, grid.cells.col(start + g)).coeffs;
      p.middleCols(start, len) =
          (codebook.adjoint() * h).cwiseAbs2() * powers[b];
    }
  }
  return field;
}

Eigen::VectorXi closest_bs(const NetworkScenario& scenario, const Grid& grid) {
  Eigen::VectorXi closest(grid.size());
#pragma omp parallel for schedule(static)
  for (Eigen::Index g = 0; g < grid.size(); ++g) {
    int best = 0;
    double best_d2 = (grid.cells.col(g) - scenario.bs_positions.col(0))
                         .squaredNorm();
    for (int b = 1; b < scenario.num_bs(); ++b) {
      const double d2 =
          (grid.cells.col(g) - scenario.bs_positions.col(b)).squaredNorm();
      if (d2 < best_d2) {  // strict: ties keep the lowest BS index
        best_d2 = d2;
        best = b;
      }
    }
    closest[g] = best;
  }
  return closest;
}

}  // namespace ssbjt
