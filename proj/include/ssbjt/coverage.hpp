#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ssbjt/channel.hpp"
#include "ssbjt/selection.hpp"
#include "ssbjt/snr.hpp"

namespace ssbjt {

enum class Scheme { independent, joint_fixed, joint_enhanced };

std::string scheme_name(Scheme scheme);

/// Per-cell SNR in dB, ordered as Grid.cells.
struct SnrField {
  Scheme scheme = Scheme::independent;
  Eigen::VectorXd values_db;
  ResourceBudget budget;
};

/// Coverage fractions per scheme over a threshold sweep.
struct CoverageReport {
  std::vector<double> thresholds_db;
  std::vector<std::string> schemes;
  std::vector<std::vector<double>> coverage;  // [scheme][threshold]
};

/// Evaluates a scheme over the grid.
///  - independent: best beam of the closest BS, repeated R times for a
///    fixed plan or matched per serving region for an enhanced plan.
///  - joint_fixed: max over plan tuples of the closed-form combined SNR
///    with num_bs repetitions.
///  - joint_enhanced: the serving tuple's closed form restricted to the
///    cell's dominant BSs, with that tuple's repetition count.
SnrField snr_field(const NetworkScenario& scenario, const Grid& grid,
                   const BeamPowerField& powers, const JointBeamPlan& plan,
                   Scheme scheme);

/// Fraction of cells with SNR >= gamma_ref_db (step function, u(0) = 1).
double coverage_probability(const SnrField& field, double gamma_ref_db);

/// Element-wise joint minus independent, dB. Throws GridMismatchError on
/// size or budget mismatch.
Eigen::VectorXd delta_field(const SnrField& joint, const SnrField& independent);

/// Per-scheme coverage curves; fractions are nonincreasing in threshold.
CoverageReport threshold_sweep(const std::vector<SnrField>& fields,
                               const std::vector<double>& thresholds_db);

/// Global dB shift placing the field's 100%-coverage knee (its minimum)
/// at knee_db. Absolute SNR levels depend on under-determined channel
/// constants; presentation layers shift by this single offset.
double knee_offset_db(const SnrField& independent, double knee_db = 5.0);

}  // namespace ssbjt
