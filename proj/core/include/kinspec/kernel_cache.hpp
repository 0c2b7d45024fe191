#pragma once

#include <filesystem>
#include <memory>

#include "kinspec/kernel_modes.hpp"

namespace kinspec {

/// Directory named by KINSPEC_KERNEL_CACHE, or empty when caching is off.
std::filesystem::path kernel_cache_dir();

/// Binary container: "KSBT", u32 version, u32 kind, i32 d, i32 n, f64 L,
/// f64 R, kind-specific parameters, u64 count, count doubles (per array).
void save_table(const std::filesystem::path& path, const ClassicalModeTable& table);
void save_table(const std::filesystem::path& path, const FastModeTable& table);

/// Returns null when the file is missing or its header does not match.
std::shared_ptr<const ClassicalModeTable> load_classical_table(const std::filesystem::path& path,
                                                               const VelocityGrid& grid,
                                                               const ClassicalKernelParams& params);
std::shared_ptr<const FastModeTable> load_fast_table(const std::filesystem::path& path, const VelocityGrid& grid,
                                                     const FastKernelParams& params);

/// Cached construction; `dir` empty disables the cache.
std::shared_ptr<const ClassicalModeTable> classical_table(const VelocityGrid& grid,
                                                          const ClassicalKernelParams& params,
                                                          const std::filesystem::path& dir = kernel_cache_dir());
std::shared_ptr<const FastModeTable> fast_table(const VelocityGrid& grid, const FastKernelParams& params,
                                                const std::filesystem::path& dir = kernel_cache_dir());

}  // namespace kinspec
