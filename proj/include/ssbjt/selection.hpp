#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ssbjt/channel.hpp"
#include "ssbjt/scenario.hpp"

namespace ssbjt {

enum class PlanKind { fixed, enhanced };

/// Selected joint beam tuples plus per-tuple repetition counts. In the
/// fixed scheme every tuple is repeated num_bs times (full complementary
/// phase set over all BSs); the enhanced scheme lowers reps_per_tuple to
/// the largest dominant-set size in the tuple's serving region and keeps
/// only the union of dominant BSs in the phase design.
struct JointBeamPlan {
  std::vector<std::vector<int>> tuples;     // n_joint x B beam indices
  std::vector<int> reps_per_tuple;
  std::vector<std::vector<int>> active_bs;  // sorted, per tuple
  std::vector<long> gains;                  // greedy marginal gains (cells)
  PlanKind kind = PlanKind::fixed;
  double alpha = 1.0;                       // dominance threshold (enhanced)

  int n_joint() const { return static_cast<int>(tuples.size()); }
  int total_transmissions() const;
};

/// BSs contributing at least alpha times the strongest per-BS power.
struct DominantSet {
  std::vector<int> members;  // sorted BS indices
  double alpha = 1.0;
};

/// Greedy maximum-coverage selection of n_select joint beam tuples out of
/// the N^B products of the per-BS codebooks. At each iteration every
/// remaining tuple is scored by the number of still-uncovered cells whose
/// combined closed-form SNR meets gamma_ref_db, and the maximizer is
/// taken (ties -> lexicographically smallest tuple). Runs for exactly
/// n_select iterations even when marginal gains reach zero.
JointBeamPlan greedy_select(const NetworkScenario& scenario, const Grid& grid,
                            const BeamPowerField& powers, double gamma_ref_db,
                            int n_select);

/// Throws InvalidValueError for alpha outside (0,1], AllZeroTermsError
/// when no term is positive.
DominantSet dominant_set(const Eigen::VectorXd& terms_mw, double alpha);

/// Serving tuple per cell: argmax over plan tuples of the fixed
/// closed-form SNR, ties broken by lowest tuple index.
Eigen::VectorXi serving_tuple(const NetworkScenario& scenario,
                              const BeamPowerField& powers,
                              const JointBeamPlan& plan);

/// Dominant-BS reduction of a fixed plan: per tuple, repetitions drop to
/// the largest per-cell dominant-set size over the cells it serves, and
/// only the union of dominant BSs stays in the phase design. Tuples that
/// serve no cell keep a single repetition.
JointBeamPlan enhanced_plan(const NetworkScenario& scenario, const Grid& grid,
                            const BeamPowerField& powers,
                            const JointBeamPlan& base_plan, double alpha);

/// Text table, one row per tuple: beam indices per BS (1-based, matching
/// the beam-matrix convention), repetitions, active BSs and phase rows.
std::string format_plan(const JointBeamPlan& plan);

}  // namespace ssbjt
