#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>

#include "kinspec/mesh.hpp"

namespace kinspec {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointState {
  DistributionField field;
  std::uint64_t step = 0;
  std::uint64_t manifest_hash = 0;
};

/// Layout: "KSCK", u32 version, u64 manifest hash, velocity grid (d, n, L, R),
/// mesh (dim, cells, lo, hi), u64 step, f64 time, u64 count, count doubles,
/// u64 FNV-1a of everything before it. Written atomically.
void save_checkpoint(const std::filesystem::path& path, const DistributionField& field, const SpatialMesh& mesh,
                     std::uint64_t manifest_hash, std::uint64_t step);

/// Throws FormatError on a bad magic, version or checksum, a truncated file, a grid
/// or mesh that differs from the given ones, and a manifest hash other than
/// `expected_hash` unless `force` is set.
CheckpointState load_checkpoint(const std::filesystem::path& path, std::shared_ptr<const VelocityGrid> grid,
                                const SpatialMesh& mesh, std::uint64_t expected_hash, bool force = false);

}  // namespace kinspec
