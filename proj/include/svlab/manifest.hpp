#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace svlab {

inline constexpr const char* kSoftwareVersion = "0.1.0";

// Stable FNV-1a over the canonical config dump; identifies a run config
// across builds (std::hash is implementation-defined, so not used here).
uint64_t config_hash(const nlohmann::json& config);

// Every run directory gets a resolved-config snapshot (config.json, byte
// stable) and a manifest (manifest.json, includes timings).
class RunManifest {
 public:
  RunManifest(std::string subcommand, nlohmann::json resolved_config);

  void add_artifact(const std::string& path);
  void set_timing_ms(double ms);

  // Writes config.json + manifest.json into `dir` (must exist).
  void write(const std::string& dir) const;

  uint64_t hash() const { return hash_; }

 private:
  std::string subcommand_;
  nlohmann::json config_;
  uint64_t hash_;
  std::vector<std::string> artifacts_;
  double timing_ms_ = 0.0;
};

// Creates the directory (and parents); errors if a previous run already
// wrote outputs there (runs are write-once).
void prepare_run_dir(const std::string& dir);

}  // namespace svlab
