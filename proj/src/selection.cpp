#include "ssbjt/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "ssbjt/csv.hpp"
#include "ssbjt/errors.hpp"
#include "ssbjt/phasebook.hpp"

namespace ssbjt {

int JointBeamPlan::total_transmissions() const {
  return std::accumulate(reps_per_tuple.begin(), reps_per_tuple.end(), 0);
}

namespace {

std::vector<int> tuple_from_index(long index, int num_bs, int num_beams) {
  std::vector<int> tuple(num_bs);
  for (int b = num_bs - 1; b >= 0; --b) {
    tuple[b] = static_cast<int>(index % num_beams);
    index /= num_beams;
  }
  return tuple;  // index order == lexicographic tuple order
}

// sum_b rho_b |h_b^H f_{m_b}|^2 at one cell.
double tuple_power(const BeamPowerField& powers, const std::vector<int>& tuple,
                   Eigen::Index cell) {
  double s = 0.0;
  for (int b = 0; b < static_cast<int>(tuple.size()); ++b)
    s += powers.per_bs[b](tuple[b], cell);
  return s;
}

}  // namespace

JointBeamPlan greedy_select(const NetworkScenario& scenario, const Grid& grid,
                            const BeamPowerField& powers, double gamma_ref_db,
                            int n_select) {
  const int num_bs = scenario.num_bs();
  const int num_beams = powers.num_beams();
  if (powers.num_bs() != num_bs)
    throw DimensionMismatchError("beam power field does not match scenario");
  if (powers.num_cells() != grid.size())
    throw GridMismatchError("beam power field does not match grid");
  if (!std::isfinite(gamma_ref_db))
    throw InvalidValueError("gamma_ref_db", "must be finite");
  const double total_tuples_f = std::pow(num_beams, num_bs);
  if (n_select < 1 || static_cast<double>(n_select) > total_tuples_f)
    throw InvalidValueError("n_select",
                            "must be in [1, num_beams^num_bs]");
  const long total_tuples = static_cast<long>(total_tuples_f);

  // Covered when the full complementary combining meets the threshold:
  // num_bs * sum_b term_b / N0 >= gamma_ref.
  const double thr_mw =
      db_to_lin(gamma_ref_db) * scenario.noise_power_mw() / num_bs;

  std::vector<Eigen::Index> uncovered(grid.size());
  std::iota(uncovered.begin(), uncovered.end(), Eigen::Index{0});
  std::vector<char> taken(total_tuples, 0);

  JointBeamPlan plan;
  for (int pick = 0; pick < n_select; ++pick) {
    std::vector<long> counts(total_tuples, -1);
#pragma omp parallel for schedule(static)
    for (long t = 0; t < total_tuples; ++t) {
      if (taken[t]) continue;
      const std::vector<int> tuple = tuple_from_index(t, num_bs, num_beams);
      long covered = 0;
      for (Eigen::Index cell : uncovered)
        if (tuple_power(powers, tuple, cell) >= thr_mw) ++covered;
      counts[t] = covered;
    }
    // Serial argmax in tuple order: ties resolve to the lexicographically
    // smallest tuple regardless of thread count.
    long best = -1;
    long best_count = -1;
    for (long t = 0; t < total_tuples; ++t) {
      if (counts[t] > best_count) {
        best_count = counts[t];
        best = t;
      }
    }
    taken[best] = 1;
    const std::vector<int> tuple = tuple_from_index(best, num_bs, num_beams);
    plan.tuples.push_back(tuple);
    plan.gains.push_back(best_count);

    std::vector<Eigen::Index> remaining;
    remaining.reserve(uncovered.size());
    for (Eigen::Index cell : uncovered)
      if (tuple_power(powers, tuple, cell) < thr_mw)
        remaining.push_back(cell);
    uncovered = std::move(remaining);
  }

  plan.reps_per_tuple.assign(plan.tuples.size(), num_bs);
  std::vector<int> all_bs(num_bs);
  std::iota(all_bs.begin(), all_bs.end(), 0);
  plan.active_bs.assign(plan.tuples.size(), all_bs);
  plan.kind = PlanKind::fixed;
  return plan;
}

DominantSet dominant_set(const Eigen::VectorXd& terms_mw, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidValueError("alpha", "must be in (0, 1]");
  if (terms_mw.size() == 0 || terms_mw.maxCoeff() <= 0.0)
    throw AllZeroTermsError("no positive per-BS power term");
  const double cutoff = alpha * terms_mw.maxCoeff();
  DominantSet set;
  set.alpha = alpha;
  for (Eigen::Index b = 0; b < terms_mw.size(); ++b)
    if (terms_mw[b] >= cutoff) set.members.push_back(static_cast<int>(b));
  return set;
}

Eigen::VectorXi serving_tuple(const NetworkScenario& scenario,
                              const BeamPowerField& powers,
                              const JointBeamPlan& plan) {
  if (plan.tuples.empty()) throw EmptyInputError("plan has no tuples");
  Eigen::VectorXi serving(powers.num_cells());
#pragma omp parallel for schedule(static)
  for (Eigen::Index g = 0; g < powers.num_cells(); ++g) {
    int best = 0;
    double best_power = tuple_power(powers, plan.tuples[0], g);
    for (int i = 1; i < plan.n_joint(); ++i) {
      const double p = tuple_power(powers, plan.tuples[i], g);
      if (p > best_power) {  // strict: ties keep the lowest tuple index
        best_power = p;
        best = i;
      }
    }
    serving[g] = best;
  }
  return serving;
}

JointBeamPlan enhanced_plan(const NetworkScenario& scenario, const Grid& grid,
                            const BeamPowerField& powers,
                            const JointBeamPlan& base_plan, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InvalidValueError("alpha", "must be in (0, 1]");
  if (base_plan.tuples.empty()) throw EmptyInputError("plan has no tuples");
  if (powers.num_cells() != grid.size())
    throw GridMismatchError("beam power field does not match grid");
  const int num_bs = scenario.num_bs();

  const Eigen::VectorXi serving = serving_tuple(scenario, powers, base_plan);

  JointBeamPlan plan = base_plan;
  plan.kind = PlanKind::enhanced;
  plan.alpha = alpha;
  plan.gains.clear();

  Eigen::VectorXd terms(num_bs);
  for (int i = 0; i < plan.n_joint(); ++i) {
    int max_dominant = 0;
    std::set<int> active;
    for (Eigen::Index g = 0; g < powers.num_cells(); ++g) {
      if (serving[g] != i) continue;
      for (int b = 0; b < num_bs; ++b)
        terms[b] = powers.per_bs[b](plan.tuples[i][b], g);
      const DominantSet dom = dominant_set(terms, alpha);
      max_dominant =
          std::max(max_dominant, static_cast<int>(dom.members.size()));
      active.insert(dom.members.begin(), dom.members.end());
    }
    if (max_dominant == 0) {
      // Tuple serves no cell; keep a single repetition.
      plan.reps_per_tuple[i] = 1;
      plan.active_bs[i].clear();
    } else {
      plan.reps_per_tuple[i] = max_dominant;
      plan.active_bs[i].assign(active.begin(), active.end());
    }
  }
  return plan;
}

std::string format_plan(const JointBeamPlan& plan) {
  std::ostringstream out;
  const int n = plan.n_joint();
  const int num_bs = n > 0 ? static_cast<int>(plan.tuples[0].size()) : 0;
  out << "# joint beam plan ("
      << (plan.kind == PlanKind::fixed ? "fixed" : "enhanced") << ")\n";
  out << "n_joint " << n << "\n";
  out << "total_transmissions " << plan.total_transmissions() << "\n";
  if (plan.kind == PlanKind::enhanced)
    out << "alpha " << fmt_g6(plan.alpha) << "\n";
  out << "# beam matrix: row = joint beam, column = BS, 1-based beam index\n";
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < num_bs; ++b)
      out << (b ? " " : "") << plan.tuples[i][b] + 1;
    out << "\n";
  }
  out << "# per tuple: repetitions | active BSs (1-based) | phase rows (rad)\n";
  for (int i = 0; i < n; ++i) {
    out << "tuple " << i + 1 << " | reps " << plan.reps_per_tuple[i]
        << " | active";
    if (plan.active_bs[i].empty()) out << " -";
    for (int b : plan.active_bs[i]) out << " " << b + 1;
    out << " | phases";
    const PhaseBook book = make_phase_book(plan.reps_per_tuple[i]);
    for (int r = 0; r < book.rows(); ++r) {
      out << " [";
      for (int c = 0; c < book.width(); ++c)
        out << (c ? " " : "") << fmt_g6(book.phases(r, c));
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ssbjt
