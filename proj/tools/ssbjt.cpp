// ssbjt: SSB joint-transmission coverage simulator CLI.
//
// Subcommands: field, compare, coverage, fringe, select. Each reads a
// JSON scenario config and writes deterministic CSV/text outputs plus a
// manifest.json into the output directory.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ssbjt/commands.hpp"
#include "ssbjt/errors.hpp"
#include "ssbjt/manifest.hpp"

namespace {

std::string default_out_dir() {
  if (const char* env = std::getenv("SSBJT_OUT_DIR")) return env;
  return "out";
}

void add_common(CLI::App* cmd, ssbjt::RunOptions& options,
                std::string& config, std::string& out) {
  cmd->add_option("--config", config, "scenario config file (JSON)")
      ->required();
  cmd->add_option("--out", out, "output directory");
  cmd->add_option("--threads", options.threads,
                  "cap on parallel workers (0 = default)");
  cmd->add_option("--knee", options.knee_db,
                  "calibrated dB level of the coverage knee");
  cmd->add_flag("!--raw", options.calibrate,
                "emit raw link-budget dB instead of calibrated values");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SSB joint-transmission coverage simulator"};
  app.require_subcommand(1);

  ssbjt::RunOptions options;
  std::string config;
  std::string out = default_out_dir();
  std::string scheme = "joint_fixed";

  CLI::App* field = app.add_subcommand(
      "field", "per-cell SNR map for one scheme (snr_<scheme>.csv)");
  add_common(field, options, config, out);
  field->add_option("--scheme", scheme,
                    "independent | joint_fixed | joint_enhanced");
  field->add_option("--gamma-ref", options.gamma_ref_db,
                    "coverage threshold used for beam selection, dB");
  field->add_option("--alpha", options.alpha, "dominance threshold (0,1]");
  field->add_option("--n-select", options.n_select,
                    "joint beam tuples to select (0 = one per beam)");

  CLI::App* compare = app.add_subcommand(
      "compare",
      "joint vs independent SNR gain maps (delta_*.csv, plan.txt, summary)");
  add_common(compare, options, config, out);
  compare->add_option("--gamma-ref", options.gamma_ref_db,
                      "coverage threshold used for beam selection, dB");
  compare->add_option("--alpha", options.alpha,
                      "also run the enhanced scheme with this threshold");
  compare->add_option("--n-select", options.n_select,
                      "joint beam tuples to select (0 = one per beam)");

  CLI::App* coverage = app.add_subcommand(
      "coverage", "coverage fraction vs threshold sweep (coverage.csv)");
  add_common(coverage, options, config, out);
  coverage->add_option("--thresholds", options.thresholds,
                       "sweep as start:step:stop or comma list, dB");
  coverage->add_option("--gamma-ref", options.gamma_ref_db,
                       "coverage threshold used for beam selection, dB");
  coverage->add_option("--alpha", options.alpha,
                       "also sweep the enhanced scheme");
  coverage->add_option("--n-select", options.n_select,
                       "joint beam tuples to select (0 = one per beam)");

  CLI::App* fringe = app.add_subcommand(
      "fringe", "two-BS interference pattern along the BS-BS line");
  add_common(fringe, options, config, out);

  CLI::App* select = app.add_subcommand(
      "select", "greedy joint beam selection only (plan.txt, summary)");
  add_common(select, options, config, out);
  select->add_option("--gamma-ref", options.gamma_ref_db,
                     "coverage threshold used for beam selection, dB");
  select->add_option("--alpha", options.alpha,
                     "also report the enhanced plan");
  select->add_option("--n-select", options.n_select,
                     "joint beam tuples to select (0 = one per beam)");

  CLI11_PARSE(app, argc, argv);

  options.config_path = config;
  options.out_dir = out;

  try {
    if (*field) {
      ssbjt::Scheme s;
      if (scheme == "independent")
        s = ssbjt::Scheme::independent;
      else if (scheme == "joint_fixed")
        s = ssbjt::Scheme::joint_fixed;
      else if (scheme == "joint_enhanced")
        s = ssbjt::Scheme::joint_enhanced;
      else
        throw ssbjt::InvalidValueError("scheme", "unknown scheme " + scheme);
      ssbjt::cmd_field(options, s);
    } else if (*compare) {
      ssbjt::cmd_compare(options);
    } else if (*coverage) {
      ssbjt::cmd_coverage(options);
    } else if (*fringe) {
      ssbjt::cmd_fringe(options);
    } else if (*select) {
      ssbjt::cmd_select(options);
    }
  } catch (const ssbjt::MissingFieldError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ssbjt::InvalidValueError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ssbjt::SimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
