#include "ssbjt/snr.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "ssbjt/errors.hpp"

namespace ssbjt {

ResourceBudget ResourceBudget::matched(int num_bs, int n_ind, int n_joint) {
  if (num_bs < 1 || n_ind < 1 || n_joint < 1)
    throw InvalidValueError("budget", "counts must be >= 1");
  const long total = static_cast<long>(num_bs) * n_joint;
  if (total % n_ind != 0)
    throw InvalidValueError(
        "budget", "B * n_joint = " + std::to_string(total) +
                      " is not divisible by n_ind = " + std::to_string(n_ind));
  return ResourceBudget{n_ind, n_joint, static_cast<int>(total / n_ind)};
}

namespace {

void check_dims(const Eigen::MatrixXcd& channels,
                const Eigen::VectorXd& powers_mw,
                const BeamCodebook& codebook,
                const std::vector<int>& beam_indices) {
  const auto b = channels.cols();
  if (powers_mw.size() != b)
    throw DimensionMismatchError("powers length must equal number of BSs");
  if (static_cast<Eigen::Index>(beam_indices.size()) != b)
    throw DimensionMismatchError("one beam index per BS required");
  if (codebook.rows() != channels.rows())
    throw DimensionMismatchError("codebook rows must equal channel length");
  for (int m : beam_indices)
    if (m < 0 || m >= codebook.cols())
      throw OutOfRangeError("beam index " + std::to_string(m) +
                            " outside the codebook");
}

// Per-BS complex amplitude sqrt(rho_b) h_b^H f_{m_b}.
Eigen::VectorXcd bs_amplitudes(const Eigen::MatrixXcd& channels,
                               const Eigen::VectorXd& powers_mw,
                               const BeamCodebook& codebook,
                               const std::vector<int>& beam_indices) {
  Eigen::VectorXcd amps(channels.cols());
  for (Eigen::Index b = 0; b < channels.cols(); ++b) {
    const std::complex<double> gain =
        channels.col(b).adjoint() * codebook.col(beam_indices[b]);
    amps[b] = std::sqrt(powers_mw[b]) * gain;
  }
  return amps;
}

}  // namespace

double snr_joint(const Eigen::MatrixXcd& channels,
                 const Eigen::VectorXd& powers_mw,
                 const BeamCodebook& codebook, const JointConfig& config,
                 double noise_mw) {
  check_dims(channels, powers_mw, codebook, config.beam_indices);
  if (config.phase_row.size() != channels.cols())
    throw DimensionMismatchError("one phase per BS required");
  const Eigen::VectorXcd amps =
      bs_amplitudes(channels, powers_mw, codebook, config.beam_indices);
  std::complex<double> sum = 0.0;
  for (Eigen::Index b = 0; b < amps.size(); ++b)
    sum += amps[b] * std::polar(1.0, config.phase_row[b]);
  return std::norm(sum) / noise_mw;
}

double snr_joint_combined(const Eigen::MatrixXcd& channels,
                          const Eigen::VectorXd& powers_mw,
                          const BeamCodebook& codebook,
                          const std::vector<int>& beam_indices,
                          const PhaseBook& phase_book, double noise_mw) {
  check_dims(channels, powers_mw, codebook, beam_indices);
  if (phase_book.width() != channels.cols())
    throw DimensionMismatchError("phase book width must equal number of BSs");
  const Eigen::VectorXcd amps =
      bs_amplitudes(channels, powers_mw, codebook, beam_indices);
  double total = 0.0;
  for (int r = 0; r < phase_book.rows(); ++r) {
    std::complex<double> sum = 0.0;
    for (Eigen::Index b = 0; b < amps.size(); ++b)
      sum += amps[b] * std::polar(1.0, phase_book.phases(r, b));
    total += std::norm(sum);
  }
  return total / noise_mw;
}

double snr_joint_closed(const Eigen::MatrixXcd& channels,
                        const Eigen::VectorXd& powers_mw,
                        const BeamCodebook& codebook,
                        const std::vector<int>& beam_indices, int rows_used,
                        double noise_mw) {
  check_dims(channels, powers_mw, codebook, beam_indices);
  if (rows_used < 1)
    throw InvalidValueError("rows_used", "must be >= 1");
  const Eigen::VectorXcd amps =
      bs_amplitudes(channels, powers_mw, codebook, beam_indices);
  return rows_used * amps.squaredNorm() / noise_mw;
}

double snr_independent(const Eigen::VectorXcd& channel, double power_mw,
                       const Eigen::VectorXcd& beam, int repetitions,
                       double noise_mw) {
  if (channel.size() != beam.size())
    throw DimensionMismatchError("beam length must equal channel length");
  if (repetitions < 1)
    throw InvalidValueError("repetitions", "must be >= 1");
  const std::complex<double> gain = channel.adjoint() * beam;
  return repetitions * power_mw * std::norm(gain) / noise_mw;
}

int best_beam_index(const Eigen::VectorXcd& channel,
                    const BeamCodebook& codebook) {
  if (codebook.rows() != channel.size())
    throw DimensionMismatchError("codebook rows must equal channel length");
  int best = 0;
  double best_gain = std::norm(std::complex<double>(
      channel.adjoint() * codebook.col(0)));
  for (int m = 1; m < codebook.cols(); ++m) {
    const double gain =
        std::norm(std::complex<double>(channel.adjoint() * codebook.col(m)));
    if (gain > best_gain) {  // strict: ties keep the lowest beam index
      best_gain = gain;
      best = m;
    }
  }
  return best;
}

double delta_snr(const Eigen::VectorXd& joint_terms_mw, int closest_index,
                 const ResourceBudget& budget) {
  if (closest_index < 0 || closest_index >= joint_terms_mw.size())
    throw OutOfRangeError("closest_index outside the term vector");
  const double term_k = joint_terms_mw[closest_index];
  if (term_k <= 0.0) return std::numeric_limits<double>::infinity();
  const double others = joint_terms_mw.sum() - term_k;
  return 10.0 * std::log10(1.0 + others / term_k) +
         10.0 * std::log10(static_cast<double>(budget.n_ind) /
                           budget.n_joint);
}

}  // namespace ssbjt
