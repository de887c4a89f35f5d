#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ssbjt {

inline constexpr char kToolVersion[] = "0.1.0";

std::uint64_t fnv1a64(std::string_view data);

/// UTC timestamp, RFC 3339. Honors SOURCE_DATE_EPOCH for reproducible
/// runs.
std::string run_timestamp();

/// Record of one CLI invocation; written as manifest.json next to the
/// data files so a run can be traced back to its exact inputs.
struct RunManifest {
  std::string command;
  std::uint64_t scenario_hash = 0;
  nlohmann::json parameters;
  std::vector<std::string> outputs;  // file names relative to out dir
  std::string tool_version = kToolVersion;
  std::string timestamp;
};

std::filesystem::path write_manifest(const RunManifest& manifest,
                                     const std::filesystem::path& out_dir);

}  // namespace ssbjt
