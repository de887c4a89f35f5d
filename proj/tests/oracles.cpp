#include "oracles.hpp"

#include <cmath>

namespace oracle {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<cx> dft_beam(int num_antennas, int beam) {
  std::vector<cx> f(num_antennas);
  const double scale = 1.0 / std::sqrt(static_cast<double>(num_antennas));
  for (int k = 0; k < num_antennas; ++k) {
    const double phase = 2.0 * kPi * k * beam / num_antennas;
    f[k] = cx(scale * std::cos(phase), scale * std::sin(phase));
  }
  return f;
}

double snr_joint(const std::vector<std::vector<cx>>& channels,
                 const std::vector<double>& powers_mw,
                 const std::vector<int>& beam_indices,
                 const std::vector<double>& phases, double noise_mw) {
  cx total(0.0, 0.0);
  for (std::size_t b = 0; b < channels.size(); ++b) {
    const std::vector<cx> f =
        dft_beam(static_cast<int>(channels[b].size()), beam_indices[b]);
    cx gain(0.0, 0.0);
    for (std::size_t n = 0; n < channels[b].size(); ++n)
      gain += std::conj(channels[b][n]) * f[n];
    const cx rot(std::cos(phases[b]), std::sin(phases[b]));
    total += std::sqrt(powers_mw[b]) * gain * rot;
  }
  return (total.real() * total.real() + total.imag() * total.imag()) /
         noise_mw;
}

double snr_combined(const std::vector<std::vector<cx>>& channels,
                    const std::vector<double>& powers_mw,
                    const std::vector<int>& beam_indices,
                    const std::vector<std::vector<double>>& phase_rows,
                    double noise_mw) {
  double total = 0.0;
  for (const std::vector<double>& row : phase_rows)
    total += snr_joint(channels, powers_mw, beam_indices, row, noise_mw);
  return total;
}

BestTuple best_coverage_tuple(
    const std::vector<std::vector<std::vector<double>>>& power,
    const std::vector<char>& eligible, double threshold_mw) {
  const int num_bs = static_cast<int>(power.size());
  const int num_beams = static_cast<int>(power[0].size());
  const std::size_t num_cells = power[0][0].size();

  BestTuple best;
  best.covered = -1;
  std::vector<int> tuple(num_bs, 0);
  while (true) {
    long covered = 0;
    for (std::size_t g = 0; g < num_cells; ++g) {
      if (!eligible[g]) continue;
      double s = 0.0;
      for (int b = 0; b < num_bs; ++b) s += power[b][tuple[b]][g];
      if (s >= threshold_mw) ++covered;
    }
    if (covered > best.covered) {
      best.covered = covered;
      best.tuple = tuple;
    }
    // next tuple in lexicographic order
    int b = num_bs - 1;
    while (b >= 0 && tuple[b] == num_beams - 1) tuple[b--] = 0;
    if (b < 0) break;
    ++tuple[b];
  }
  return best;
}

double two_ray_power(double d1, double d2, double lambda) {
  const double a1 = lambda / (4.0 * kPi * d1);
  const double a2 = lambda / (4.0 * kPi * d2);
  const double phase = 2.0 * kPi * (d2 - d1) / lambda;
  return a1 * a1 + a2 * a2 + 2.0 * a1 * a2 * std::cos(phase);
}

}  // namespace oracle
