#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kinspec/scenarios.hpp"

namespace kinspec {

/// Everything needed to reproduce a run.
struct RunManifest {
  ScenarioConfig config;
  /// Checkpoint to resume from; empty starts from the initial data.
  std::string resume;
  /// Accept a checkpoint whose manifest hash differs.
  bool force_resume = false;
};

/// Command line values that override the configuration file.
struct ConfigOverrides {
  std::optional<std::string> scenario;
  std::optional<std::string> config_file;
  std::optional<double> epsilon;
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<int> nv;
  std::optional<double> dt;
  std::optional<double> t_final;
  std::optional<std::string> kernel;
  std::optional<std::string> mode;
  std::optional<std::string> out;
  std::optional<int> threads;
  std::optional<double> checkpoint_every;
  std::optional<std::string> resume;
  bool force_resume = false;
};

/// JSON text of a configuration (every field, stable key order).
std::string config_to_json(const ScenarioConfig& config, int indent = 2);

/// Parses a JSON configuration. Keys left out keep the values of `base`, or of the
/// preset named by the "scenario" key when `base` is not given (a name that is not
/// a preset labels a custom run). Throws ConfigError with line/column for syntax
/// errors and with the key path for unknown keys and wrong types. Value checks are
/// left to ScenarioConfig::validate so that flags can still complete the file.
ScenarioConfig config_from_json(std::string_view text, const std::optional<ScenarioConfig>& base = std::nullopt);

/// Hash of the fields that determine the solution (output policy, thread count and
/// t_final are excluded so that a run can be resumed and extended).
std::uint64_t manifest_hash(const ScenarioConfig& config);

/// Preset, then configuration file, then flags. The result is validated.
RunManifest parse_config(const ConfigOverrides& overrides);

}  // namespace kinspec
