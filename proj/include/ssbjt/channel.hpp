#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "ssbjt/phasebook.hpp"
#include "ssbjt/scenario.hpp"

namespace ssbjt {

/// LoS channel from one BS to one location.
struct ChannelVector {
  Eigen::VectorXcd coeffs;   // length num_antennas
  int bs_index = 0;          // 0-based
  Eigen::Vector2d location;  // meters
};

/// Free-space LoS channel under the far-field ULA approximation:
///   h[n] = sqrt(g(d)) * exp(-i 2 pi d_n / lambda'),
///   d_n  = d - n * spacing * lambda' * sin(phi),
///   g(d) = (lambda' / (4 pi d))^2,
/// with d the (min-distance-clamped) distance to the array reference
/// element and phi the bearing relative to the array broadside. When
/// scenario.exact_element_phases is set, d_n is the exact per-element
/// distance instead.
ChannelVector los_channel(const NetworkScenario& scenario, int bs_index,
                          const Eigen::Vector2d& location);

/// Precomputed channels for every (BS, cell) pair; per_bs[b] is
/// num_antennas x |G| with one column per grid cell.
struct ChannelField {
  std::vector<Eigen::MatrixXcd> per_bs;
};

inline constexpr std::size_t kDefaultChannelBudgetBytes =
    std::size_t{1} << 30;

/// Throws ResourceLimitError when B * N * |G| complex entries exceed
/// max_bytes; callers then fall back to on-the-fly evaluation.
ChannelField channel_field(const NetworkScenario& scenario, const Grid& grid,
                           std::size_t max_bytes = kDefaultChannelBudgetBytes);

/// Per-BS beamformed receive power rho_b * |h_b^H f_m|^2 in linear mW;
/// per_bs[b] is num_antennas x |G| (row m = beam m). This is the one table
/// every SNR expression downstream is built from.
struct BeamPowerField {
  std::vector<Eigen::MatrixXd> per_bs;

  int num_bs() const { return static_cast<int>(per_bs.size()); }
  Eigen::Index num_cells() const {
    return per_bs.empty() ? 0 : per_bs.front().cols();
  }
  int num_beams() const {
    return per_bs.empty() ? 0 : static_cast<int>(per_bs.front().rows());
  }
};

BeamPowerField beam_power_field(const NetworkScenario& scenario,
                                const Grid& grid,
                                const BeamCodebook& codebook);

/// Index of the closest BS per cell, ties broken by lowest BS index.
Eigen::VectorXi closest_bs(const NetworkScenario& scenario, const Grid& grid);

}  // namespace ssbjt
