// Brute-force reference implementations used to cross-check the library.
// Everything here is plain scalar arithmetic on std containers and shares
// no code with the library under test.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cx = std::complex<double>;

std::vector<cx> dft_beam(int num_antennas, int beam);

/// |sum_b sqrt(rho_b) h_b^H f_{m_b} e^{i theta_b}|^2 / noise, elementwise.
double snr_joint(const std::vector<std::vector<cx>>& channels,
                 const std::vector<double>& powers_mw,
                 const std::vector<int>& beam_indices,
                 const std::vector<double>& phases, double noise_mw);

/// Sum of snr_joint over the phase rows.
double snr_combined(const std::vector<std::vector<cx>>& channels,
                    const std::vector<double>& powers_mw,
                    const std::vector<int>& beam_indices,
                    const std::vector<std::vector<double>>& phase_rows,
                    double noise_mw);

/// Exhaustive maximum-coverage pick over every beam tuple.
/// power[b][m][g] holds the per-BS beamformed power; a cell counts as
/// covered when sum_b power[b][m_b][g] >= threshold_mw and eligible[g].
/// Ties resolve to the lexicographically smallest tuple.
struct BestTuple {
  std::vector<int> tuple;
  long covered = 0;
};
BestTuple best_coverage_tuple(
    const std::vector<std::vector<std::vector<double>>>& power,
    const std::vector<char>& eligible, double threshold_mw);

/// Received power of two coherent isotropic sources with free-space
/// amplitudes lambda/(4 pi d) and phases -2 pi d / lambda.
double two_ray_power(double d1, double d2, double lambda);

}  // namespace oracle
