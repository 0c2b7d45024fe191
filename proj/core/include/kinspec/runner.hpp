#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "kinspec/collision.hpp"
#include "kinspec/manifest.hpp"

namespace kinspec {

/// Process exit codes of the driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitNumeric = 3,
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::string message;
  std::uint64_t steps = 0;
  double time = 0.0;
};

/// Collision operator selected by config.solver (tables go through the kernel cache).
std::shared_ptr<const CollisionOperator> make_collision(const ScenarioConfig& config,
                                                        std::shared_ptr<const VelocityGrid> grid);

/// Profile file text: manifest as a comment block, a header line, one row per cell.
std::string profile_text(const DistributionField& f, const SpatialMesh& mesh, const ScenarioConfig& config);

/// Runs the manifest and writes, under config.output.dir:
///   manifest.json, entropy.dat (t Hg Hl Hh), audit.dat (t mass px py [pz] energy),
///   profile_final.dat and profile_<step>.dat, checkpoint.bin, run.log.
/// Every file is written through a temporary and renamed into place.
RunOutcome run(const RunManifest& manifest, std::ostream& log);

}  // namespace kinspec
