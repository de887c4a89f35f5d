#include "ssbjt/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssbjt/errors.hpp"

namespace ssbjt {

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::independent:
      return "independent";
    case Scheme::joint_fixed:
      return "joint_fixed";
    case Scheme::joint_enhanced:
      return "joint_enhanced";
  }
  return "unknown";
}

namespace {

double tuple_power(const BeamPowerField& powers, const std::vector<int>& tuple,
                   Eigen::Index cell) {
  double s = 0.0;
  for (int b = 0; b < static_cast<int>(tuple.size()); ++b)
    s += powers.per_bs[b](tuple[b], cell);
  return s;
}

// Best beam of the closest BS per cell, rho_k |h_k^H f|^2 in mW.
Eigen::VectorXd independent_best_term(const NetworkScenario& scenario,
                                      const Grid& grid,
                                      const BeamPowerField& powers) {
  const Eigen::VectorXi closest = closest_bs(scenario, grid);
  Eigen::VectorXd best(powers.num_cells());
#pragma omp parallel for schedule(static)
  for (Eigen::Index g = 0; g < powers.num_cells(); ++g)
    best[g] = powers.per_bs[closest[g]].col(g).maxCoeff();
  return best;
}

}  // namespace

SnrField snr_field(const NetworkScenario& scenario, const Grid& grid,
                   const BeamPowerField& powers, const JointBeamPlan& plan,
                   Scheme scheme) {
  if (powers.num_cells() != grid.size())
    throw GridMismatchError("beam power field does not match grid");
  if (plan.tuples.empty()) throw EmptyInputError("plan has no tuples");
  const double noise = scenario.noise_power_mw();

  SnrField field;
  field.scheme = scheme;
  field.budget = ResourceBudget::matched(scenario.num_bs(),
                                         powers.num_beams(), plan.n_joint());
  field.values_db.resize(grid.size());

  switch (scheme) {
    case Scheme::independent: {
      const Eigen::VectorXd best =
          independent_best_term(scenario, grid, powers);
      if (plan.kind == PlanKind::fixed) {
        const double reps = field.budget.repetitions_ind;
#pragma omp parallel for schedule(static)
        for (Eigen::Index g = 0; g < grid.size(); ++g)
          field.values_db[g] = lin_to_db(reps * best[g] / noise);
      } else {
        // Enhanced comparison: repetitions match the serving tuple's.
        const Eigen::VectorXi serving = serving_tuple(scenario, powers, plan);
#pragma omp parallel for schedule(static)
        for (Eigen::Index g = 0; g < grid.size(); ++g) {
          const double reps = plan.reps_per_tuple[serving[g]];
          field.values_db[g] = lin_to_db(reps * best[g] / noise);
        }
      }
      break;
    }
    case Scheme::joint_fixed: {
#pragma omp parallel for schedule(static)
      for (Eigen::Index g = 0; g < grid.size(); ++g) {
        double best = 0.0;
        for (int i = 0; i < plan.n_joint(); ++i) {
          const double snr = plan.reps_per_tuple[i] *
                             tuple_power(powers, plan.tuples[i], g) / noise;
          best = std::max(best, snr);
        }
        field.values_db[g] = lin_to_db(best);
      }
      break;
    }
    case Scheme::joint_enhanced: {
      if (plan.kind != PlanKind::enhanced)
        throw InvalidValueError("plan", "enhanced scheme needs enhanced plan");
      const Eigen::VectorXi serving = serving_tuple(scenario, powers, plan);
      const int num_bs = scenario.num_bs();
#pragma omp parallel for schedule(static)
      for (Eigen::Index g = 0; g < grid.size(); ++g) {
        const int i = serving[g];
        Eigen::VectorXd terms(num_bs);
        for (int b = 0; b < num_bs; ++b)
          terms[b] = powers.per_bs[b](plan.tuples[i][b], g);
        // Only the cell's dominant BSs combine coherently; the rest are
        // outside the phase design and contribute nothing here.
        const double cutoff = plan.alpha * terms.maxCoeff();
        double sum = 0.0;
        for (int b = 0; b < num_bs; ++b)
          if (terms[b] >= cutoff) sum += terms[b];
        field.values_db[g] =
            lin_to_db(plan.reps_per_tuple[i] * sum / noise);
      }
      break;
    }
  }
  return field;
}

double coverage_probability(const SnrField& field, double gamma_ref_db) {
  if (field.values_db.size() == 0) throw EmptyInputError("empty SNR field");
  const Eigen::Index covered =
      (field.values_db.array() >= gamma_ref_db).count();
  return static_cast<double>(covered) / field.values_db.size();
}

Eigen::VectorXd delta_field(const SnrField& joint,
                            const SnrField& independent) {
  if (joint.values_db.size() != independent.values_db.size())
    throw GridMismatchError("SNR fields cover different grids");
  if (joint.budget.n_ind != independent.budget.n_ind ||
      joint.budget.n_joint != independent.budget.n_joint)
    throw GridMismatchError("SNR fields use different resource budgets");
  return joint.values_db - independent.values_db;
}

CoverageReport threshold_sweep(const std::vector<SnrField>& fields,
                               const std::vector<double>& thresholds_db) {
  if (fields.empty()) throw EmptyInputError("no SNR fields");
  if (thresholds_db.empty()) throw EmptyInputError("no thresholds");
  CoverageReport report;
  report.thresholds_db = thresholds_db;
  for (const SnrField& field : fields) {
    report.schemes.push_back(scheme_name(field.scheme));
    std::vector<double> curve;
    curve.reserve(thresholds_db.size());
    for (double t : thresholds_db)
      curve.push_back(coverage_probability(field, t));
    report.coverage.push_back(std::move(curve));
  }
  return report;
}

double knee_offset_db(const SnrField& independent, double knee_db) {
  if (independent.values_db.size() == 0)
    throw EmptyInputError("empty SNR field");
  return knee_db - independent.values_db.minCoeff();
}

}  // namespace ssbjt
