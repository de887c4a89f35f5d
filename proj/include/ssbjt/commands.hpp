#pragma once

#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "ssbjt/coverage.hpp"

namespace ssbjt {

/// Options shared by the CLI subcommands. SNR thresholds and emitted SNR
/// values are expressed on a calibrated dB scale whose 100%-coverage knee
/// sits at knee_db (a single global offset; see README); set calibrate to
/// false for raw link-budget values.
struct RunOptions {
  std::filesystem::path config_path;
  std::filesystem::path out_dir;
  int threads = 0;  // 0 = library default
  double gamma_ref_db = 10.0;
  double alpha = std::numeric_limits<double>::quiet_NaN();  // NaN = fixed only
  std::string thresholds = "0:0.5:20";
  double knee_db = 5.0;
  bool calibrate = true;
  int n_select = 0;  // 0 = one tuple per codebook beam
};

/// "start:step:stop", inclusive. Throws InvalidValueError when malformed
/// or not strictly increasing.
std::vector<double> parse_thresholds(const std::string& spec);

/// Per-cell SNR map for one scheme -> snr_<scheme>.csv (x_m,y_m,snr_db).
std::vector<std::filesystem::path> cmd_field(const RunOptions& options,
                                             Scheme scheme);

/// Greedy selection, fixed (and with --alpha, enhanced) joint schemes
/// against the matched independent baseline -> delta_fixed.csv,
/// delta_enhanced.csv, plan.txt, summary.json.
std::vector<std::filesystem::path> cmd_compare(const RunOptions& options);

/// Coverage-vs-threshold curves -> coverage.csv.
std::vector<std::filesystem::path> cmd_coverage(const RunOptions& options);

/// Two-BS interference pattern along the connecting line -> fringe.csv
/// (position_m,snr_phase0_db,snr_phase1_db,snr_combined_db).
std::vector<std::filesystem::path> cmd_fringe(const RunOptions& options);

/// Greedy selection only -> plan.txt, summary.json.
std::vector<std::filesystem::path> cmd_select(const RunOptions& options);

}  // namespace ssbjt
