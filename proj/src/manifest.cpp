#include "ssbjt/manifest.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>

#include "ssbjt/errors.hpp"

namespace ssbjt {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string run_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
    now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path write_manifest(const RunManifest& manifest,
                                     const std::filesystem::path& out_dir) {
  nlohmann::json j;
  j["command"] = manifest.command;
  j["scenario_hash"] = manifest.scenario_hash;
  j["parameters"] = manifest.parameters;
  j["outputs"] = manifest.outputs;
  j["tool_version"] = manifest.tool_version;
  j["timestamp"] = manifest.timestamp;

  const std::filesystem::path path = out_dir / "manifest.json";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << j.dump(2) << "\n";
  return path;
}

}  // namespace ssbjt
