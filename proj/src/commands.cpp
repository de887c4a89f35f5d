#include "ssbjt/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ssbjt/csv.hpp"
#include "ssbjt/errors.hpp"
#include "ssbjt/manifest.hpp"
#include "ssbjt/phasebook.hpp"
#include "ssbjt/snr.hpp"

namespace ssbjt {

namespace {

nlohmann::json load_config(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open config file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min(e.byte, text.size());
    const long line =
        1 + std::count(text.begin(), text.begin() + upto, '\n');
    throw InvalidValueError("config", path.string() + ":" +
                                          std::to_string(line) + ": " +
                                          e.what());
  }
}

void apply_thread_cap(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::filesystem::path ensure_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());
  return dir;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

// Everything the subcommands share: the world, the beam powers, the
// independent baseline and the calibration offset derived from it.
struct Pipeline {
  NetworkScenario scenario;
  Grid grid;
  BeamCodebook codebook;
  BeamPowerField powers;
  SnrField independent;  // fixed-budget baseline
  JointBeamPlan plan;
  double offset_db = 0.0;
  int n_select = 0;

  double raw_gamma(double calibrated_db) const {
    return calibrated_db - offset_db;
  }
};

Pipeline build_pipeline(const RunOptions& options) {
  apply_thread_cap(options.threads);
  Pipeline p;
  p.scenario = build_scenario(load_config(options.config_path));
  p.grid = make_grid(p.scenario);
  p.codebook = dft_codebook(p.scenario.num_antennas);
  p.powers = beam_power_field(p.scenario, p.grid, p.codebook);
  p.n_select =
      options.n_select > 0 ? options.n_select : p.scenario.num_antennas;

  // The repetition budget and the greedy threshold need a plan size and
  // the baseline respectively, so run the baseline first with a
  // placeholder plan of the right length, then select.
  JointBeamPlan budget_plan;
  budget_plan.tuples.assign(p.n_select,
                            std::vector<int>(p.scenario.num_bs(), 0));
  budget_plan.reps_per_tuple.assign(p.n_select, p.scenario.num_bs());
  budget_plan.active_bs.assign(p.n_select, {});
  p.independent = snr_field(p.scenario, p.grid, p.powers, budget_plan,
                            Scheme::independent);
  p.offset_db = options.calibrate
                    ? knee_offset_db(p.independent, options.knee_db)
                    : 0.0;
  p.plan = greedy_select(p.scenario, p.grid, p.powers,
                         p.raw_gamma(options.gamma_ref_db), p.n_select);
  return p;
}

void write_cell_csv(const std::filesystem::path& path, const Grid& grid,
                    const Eigen::VectorXd& values_db, const char* value_name,
                    double offset_db) {
  std::ofstream f = open_output(path);
  f << "x_m,y_m," << value_name << "\n";
  for (Eigen::Index g = 0; g < grid.size(); ++g)
    f << fmt_g6(grid.cells(0, g)) << "," << fmt_g6(grid.cells(1, g)) << ","
      << fmt_g6(values_db[g] + offset_db) << "\n";
}

nlohmann::json base_parameters(const RunOptions& options, const Pipeline& p) {
  nlohmann::json j;
  j["config"] = options.config_path.string();
  j["threads"] = options.threads;
  j["calibrate"] = options.calibrate;
  j["knee_db"] = options.knee_db;
  j["offset_db"] = p.offset_db;
  j["gamma_ref_db"] = options.gamma_ref_db;
  j["n_select"] = p.n_select;
  return j;
}

std::vector<std::filesystem::path> finish(const std::filesystem::path& out_dir,
                                          RunManifest manifest,
                                          std::vector<std::filesystem::path>
                                              files) {
  for (const auto& f : files) manifest.outputs.push_back(f.filename().string());
  manifest.timestamp = run_timestamp();
  files.push_back(write_manifest(manifest, out_dir));
  return files;
}

}  // namespace

std::vector<double> parse_thresholds(const std::string& spec) {
  if (spec.empty()) throw InvalidValueError("thresholds", "empty spec");
  std::vector<double> values;
  if (spec.find(':') != std::string::npos) {
    double start = 0.0, step = 0.0, stop = 0.0;
    char extra = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &step, &stop,
                    &extra) != 3)
      throw InvalidValueError("thresholds",
                              "expected start:step:stop, got '" + spec + "'");
    if (!std::isfinite(start) || !std::isfinite(step) || !std::isfinite(stop))
      throw InvalidValueError("thresholds", "values must be finite");
    if (step <= 0.0)
      throw InvalidValueError("thresholds", "step must be positive");
    if (stop < start)
      throw InvalidValueError("thresholds", "stop must be >= start");
    const long count =
        static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    values.reserve(count);
    for (long k = 0; k < count; ++k) values.push_back(start + k * step);
    return values;
  }
  // Comma-separated explicit list.
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v))
        throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      throw InvalidValueError("thresholds", "bad number '" + item + "'");
    }
  }
  if (values.empty()) throw InvalidValueError("thresholds", "empty spec");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1])
      throw InvalidValueError("thresholds", "must be strictly increasing");
  return values;
}

std::vector<std::filesystem::path> cmd_field(const RunOptions& options,
                                             Scheme scheme) {
  const Pipeline p = build_pipeline(options);
  const std::filesystem::path out = ensure_out_dir(options.out_dir);

  SnrField field;
  switch (scheme) {
    case Scheme::independent:
      field = p.independent;
      break;
    case Scheme::joint_fixed:
      field = snr_field(p.scenario, p.grid, p.powers, p.plan, scheme);
      break;
    case Scheme::joint_enhanced: {
      const double alpha = std::isnan(options.alpha) ? 0.1 : options.alpha;
      const JointBeamPlan enhanced =
          enhanced_plan(p.scenario, p.grid, p.powers, p.plan, alpha);
      field = snr_field(p.scenario, p.grid, p.powers, enhanced, scheme);
      break;
    }
  }

  const std::filesystem::path csv =
      out / ("snr_" + scheme_name(scheme) + ".csv");
  write_cell_csv(csv, p.grid, field.values_db, "snr_db", p.offset_db);

  RunManifest manifest;
  manifest.command = "field";
  manifest.scenario_hash = fnv1a64(to_json(p.scenario).dump());
  manifest.parameters = base_parameters(options, p);
  manifest.parameters["scheme"] = scheme_name(scheme);
  if (scheme == Scheme::joint_enhanced)
    manifest.parameters["alpha"] =
        std::isnan(options.alpha) ? 0.1 : options.alpha;
  return finish(out, std::move(manifest), {csv});
}

std::vector<std::filesystem::path> cmd_compare(const RunOptions& options) {
  const Pipeline p = build_pipeline(options);
  const std::filesystem::path out = ensure_out_dir(options.out_dir);
  const double raw_ref = p.raw_gamma(options.gamma_ref_db);

  const SnrField joint =
      snr_field(p.scenario, p.grid, p.powers, p.plan, Scheme::joint_fixed);
  const Eigen::VectorXd delta_fixed = delta_field(joint, p.independent);

  std::vector<std::filesystem::path> files;
  const std::filesystem::path delta_fixed_csv = out / "delta_fixed.csv";
  write_cell_csv(delta_fixed_csv, p.grid, delta_fixed, "delta_db", 0.0);
  files.push_back(delta_fixed_csv);

  nlohmann::json summary;
  summary["offset_db"] = p.offset_db;
  summary["gamma_ref_db"] = options.gamma_ref_db;
  summary["coverage_independent"] =
      coverage_probability(p.independent, raw_ref);
  summary["coverage_joint_fixed"] = coverage_probability(joint, raw_ref);
  summary["total_transmissions_independent"] =
      p.independent.budget.repetitions_ind * p.independent.budget.n_ind;
  summary["total_transmissions_joint_fixed"] = p.plan.total_transmissions();
  summary["delta_fixed_max_db"] = delta_fixed.maxCoeff();
  summary["delta_fixed_min_db"] = delta_fixed.minCoeff();

  std::string plan_text = format_plan(p.plan);

  if (!std::isnan(options.alpha)) {
    const JointBeamPlan enhanced =
        enhanced_plan(p.scenario, p.grid, p.powers, p.plan, options.alpha);
    const SnrField joint_e = snr_field(p.scenario, p.grid, p.powers, enhanced,
                                       Scheme::joint_enhanced);
    const SnrField ind_matched = snr_field(p.scenario, p.grid, p.powers,
                                           enhanced, Scheme::independent);
    const Eigen::VectorXd delta_enhanced = delta_field(joint_e, ind_matched);
    const std::filesystem::path delta_enhanced_csv =
        out / "delta_enhanced.csv";
    write_cell_csv(delta_enhanced_csv, p.grid, delta_enhanced, "delta_db",
                   0.0);
    files.push_back(delta_enhanced_csv);

    summary["alpha"] = options.alpha;
    summary["coverage_joint_enhanced"] =
        coverage_probability(joint_e, raw_ref);
    summary["total_transmissions_joint_enhanced"] =
        enhanced.total_transmissions();
    summary["delta_enhanced_max_db"] = delta_enhanced.maxCoeff();
    summary["delta_enhanced_min_db"] = delta_enhanced.minCoeff();
    plan_text += format_plan(enhanced);
  }

  const std::filesystem::path plan_path = out / "plan.txt";
  open_output(plan_path) << plan_text;
  files.push_back(plan_path);

  const std::filesystem::path summary_path = out / "summary.json";
  open_output(summary_path) << summary.dump(2) << "\n";
  files.push_back(summary_path);

  RunManifest manifest;
  manifest.command = "compare";
  manifest.scenario_hash = fnv1a64(to_json(p.scenario).dump());
  manifest.parameters = base_parameters(options, p);
  if (!std::isnan(options.alpha)) manifest.parameters["alpha"] = options.alpha;
  return finish(out, std::move(manifest), std::move(files));
}

std::vector<std::filesystem::path> cmd_coverage(const RunOptions& options) {
  const std::vector<double> thresholds = parse_thresholds(options.thresholds);
  const Pipeline p = build_pipeline(options);
  const std::filesystem::path out = ensure_out_dir(options.out_dir);

  std::vector<SnrField> fields{
      p.independent,
      snr_field(p.scenario, p.grid, p.powers, p.plan, Scheme::joint_fixed)};
  if (!std::isnan(options.alpha)) {
    const JointBeamPlan enhanced =
        enhanced_plan(p.scenario, p.grid, p.powers, p.plan, options.alpha);
    fields.push_back(snr_field(p.scenario, p.grid, p.powers, enhanced,
                               Scheme::joint_enhanced));
  }

  // Thresholds are calibrated; the fields stay raw, so sweep shifted.
  std::vector<double> raw(thresholds.size());
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    raw[i] = p.raw_gamma(thresholds[i]);
  const CoverageReport report = threshold_sweep(fields, raw);

  const std::filesystem::path csv = out / "coverage.csv";
  std::ofstream f = open_output(csv);
  f << "threshold_db,cov_independent,cov_joint";
  if (fields.size() > 2) f << ",cov_enhanced";
  f << "\n";
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    f << fmt_g6(thresholds[i]);
    for (std::size_t s = 0; s < report.coverage.size(); ++s)
      f << "," << fmt_g6(report.coverage[s][i]);
    f << "\n";
  }
  f.close();

  RunManifest manifest;
  manifest.command = "coverage";
  manifest.scenario_hash = fnv1a64(to_json(p.scenario).dump());
  manifest.parameters = base_parameters(options, p);
  manifest.parameters["thresholds"] = options.thresholds;
  if (!std::isnan(options.alpha)) manifest.parameters["alpha"] = options.alpha;
  return finish(out, std::move(manifest), {csv});
}

std::vector<std::filesystem::path> cmd_fringe(const RunOptions& options) {
  apply_thread_cap(options.threads);
  const NetworkScenario scenario =
      build_scenario(load_config(options.config_path));
  if (scenario.num_bs() != 2)
    throw InvalidValueError("bs_positions",
                            "fringe needs exactly 2 base stations, got " +
                                std::to_string(scenario.num_bs()));
  const Eigen::Vector2d a = scenario.bs_positions.col(0);
  const Eigen::Vector2d b = scenario.bs_positions.col(1);
  const double length = (b - a).norm();
  if (length == 0.0)
    throw InvalidValueError("bs_positions",
                            "fringe needs distinct BS positions");
  const std::filesystem::path out = ensure_out_dir(options.out_dir);

  const BeamCodebook codebook = dft_codebook(scenario.num_antennas);
  const PhaseBook book = make_phase_book(2);
  const std::vector<int> beams{0, 0};  // broadside beam at both BSs
  const Eigen::VectorXd powers = scenario.bs_powers_mw();
  const double noise = scenario.noise_power_mw();

  // Dense enough to resolve the lambda/2 fades along the line.
  const double step = scenario.scaled_wavelength() / 64.0;
  const long count = static_cast<long>(std::floor(length / step));
  const Eigen::Vector2d dir = (b - a) / length;

  const std::filesystem::path csv = out / "fringe.csv";
  std::ofstream f = open_output(csv);
  f << "position_m,snr_phase0_db,snr_phase1_db,snr_combined_db\n";
  for (long k = 0; k < count; ++k) {
    const double pos = (k + 0.5) * step;
    const Eigen::Vector2d point = a + pos * dir;
    Eigen::MatrixXcd channels(scenario.num_antennas, 2);
    channels.col(0) = los_channel(scenario, 0, point).coeffs;
    channels.col(1) = los_channel(scenario, 1, point).coeffs;
    JointConfig config{beams, book.phases.row(0).transpose()};
    const double snr0 = snr_joint(channels, powers, codebook, config, noise);
    config.phase_row = book.phases.row(1).transpose();
    const double snr1 = snr_joint(channels, powers, codebook, config, noise);
    const double combined =
        snr_joint_combined(channels, powers, codebook, beams, book, noise);
    f << fmt_g6(pos) << "," << fmt_g6(lin_to_db(snr0)) << ","
      << fmt_g6(lin_to_db(snr1)) << "," << fmt_g6(lin_to_db(combined))
      << "\n";
  }
  f.close();

  RunManifest manifest;
  manifest.command = "fringe";
  manifest.scenario_hash = fnv1a64(to_json(scenario).dump());
  manifest.parameters["config"] = options.config_path.string();
  manifest.parameters["threads"] = options.threads;
  return finish(out, std::move(manifest), {csv});
}

std::vector<std::filesystem::path> cmd_select(const RunOptions& options) {
  const Pipeline p = build_pipeline(options);
  const std::filesystem::path out = ensure_out_dir(options.out_dir);
  const double raw_ref = p.raw_gamma(options.gamma_ref_db);

  const SnrField joint =
      snr_field(p.scenario, p.grid, p.powers, p.plan, Scheme::joint_fixed);

  std::string plan_text = format_plan(p.plan);
  nlohmann::json summary;
  summary["offset_db"] = p.offset_db;
  summary["gamma_ref_db"] = options.gamma_ref_db;
  summary["coverage_joint_fixed"] = coverage_probability(joint, raw_ref);
  summary["total_transmissions_joint_fixed"] = p.plan.total_transmissions();
  summary["greedy_gains"] = p.plan.gains;

  if (!std::isnan(options.alpha)) {
    const JointBeamPlan enhanced =
        enhanced_plan(p.scenario, p.grid, p.powers, p.plan, options.alpha);
    summary["alpha"] = options.alpha;
    summary["total_transmissions_joint_enhanced"] =
        enhanced.total_transmissions();
    plan_text += format_plan(enhanced);
  }

  const std::filesystem::path plan_path = out / "plan.txt";
  open_output(plan_path) << plan_text;
  const std::filesystem::path summary_path = out / "summary.json";
  open_output(summary_path) << summary.dump(2) << "\n";

  RunManifest manifest;
  manifest.command = "select";
  manifest.scenario_hash = fnv1a64(to_json(p.scenario).dump());
  manifest.parameters = base_parameters(options, p);
  if (!std::isnan(options.alpha)) manifest.parameters["alpha"] = options.alpha;
  return finish(out, std::move(manifest), {plan_path, summary_path});
}

}  // namespace ssbjt
