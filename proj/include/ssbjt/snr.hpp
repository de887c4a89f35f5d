#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ssbjt/phasebook.hpp"

namespace ssbjt {

/// One joint SSB configuration: a beam index per BS plus a phase per BS.
struct JointConfig {
  std::vector<int> beam_indices;
  Eigen::VectorXd phase_row;  // radians, length B
};

/// Transmission-resource accounting for the joint/independent comparison.
/// Matched budgets repeat the independent transmission
/// R = B * n_joint / n_ind times.
struct ResourceBudget {
  int n_ind = 1;            // beams swept per BS independently
  int n_joint = 1;          // selected joint beam tuples
  int repetitions_ind = 1;  // R

  static ResourceBudget matched(int num_bs, int n_ind, int n_joint);
};

/// Joint SNR for fixed beamformers and phases:
///   (1/N0) |sum_b sqrt(rho_b) h_b^H f_{m_b} e^{i theta_b}|^2.
/// channels is num_antennas x B (column b = h_b), powers in linear mW.
double snr_joint(const Eigen::MatrixXcd& channels,
                 const Eigen::VectorXd& powers_mw,
                 const BeamCodebook& codebook, const JointConfig& config,
                 double noise_mw);

/// SNR after the receiver coherently combines one transmission per phase
/// book row (same beams, different phases):
///   (1/N0) sum_rows |sum_b sqrt(rho_b) h_b^H f_{m_b} e^{i theta_b}|^2.
double snr_joint_combined(const Eigen::MatrixXcd& channels,
                          const Eigen::VectorXd& powers_mw,
                          const BeamCodebook& codebook,
                          const std::vector<int>& beam_indices,
                          const PhaseBook& phase_book, double noise_mw);

/// Closed form of the combined SNR for a complementary phase set:
///   rows_used * sum_b rho_b |h_b^H f_{m_b}|^2 / N0.
double snr_joint_closed(const Eigen::MatrixXcd& channels,
                        const Eigen::VectorXd& powers_mw,
                        const BeamCodebook& codebook,
                        const std::vector<int>& beam_indices, int rows_used,
                        double noise_mw);

/// Independent transmission from the closest BS, repeated:
///   repetitions * rho_k |h_k^H f|^2 / N0.
double snr_independent(const Eigen::VectorXcd& channel, double power_mw,
                       const Eigen::VectorXcd& beam, int repetitions,
                       double noise_mw);

/// Codebook beam maximizing |h^H f|, ties broken by lowest index.
int best_beam_index(const Eigen::VectorXcd& channel,
                    const BeamCodebook& codebook);

/// Relative SNR gain of joint over independent transmission in dB:
///   10 log10(1 + sum_{b != k} term_b / term_k) + 10 log10(n_ind / n_joint).
/// joint_terms are the per-BS linear powers rho_b |h_b^H f_b|^2 and k the
/// closest BS. Returns +inf when term_k is zero (degenerate closest).
double delta_snr(const Eigen::VectorXd& joint_terms_mw, int closest_index,
                 const ResourceBudget& budget);

}  // namespace ssbjt
