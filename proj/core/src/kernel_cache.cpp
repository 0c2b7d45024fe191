#include "kinspec/kernel_cache.hpp"

#include <cstdlib>
#include <cstring>

#include "kinspec/error.hpp"
#include "kinspec/io.hpp"

namespace kinspec {

namespace {

constexpr char kMagic[4] = {'K', 'S', 'B', 'T'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kClassical = 1;
constexpr std::uint32_t kFast = 2;

std::string header(std::uint32_t kind, const VelocityGrid& grid) {
  ByteWriter w;
  w.put_bytes(kMagic, 4);
  w.put(kVersion);
  w.put(kind);
  w.put(static_cast<std::int32_t>(grid.dim()));
  w.put(static_cast<std::int32_t>(grid.nodes_per_axis()));
  w.put(grid.half_width());
  w.put(grid.truncation_radius());
  return w.bytes();
}

std::string params_bytes(const ClassicalKernelParams& p) {
  ByteWriter w;
  w.put(p.gamma);
  w.put(p.constant);
  w.put(static_cast<std::int32_t>(p.radial_points));
  w.put(static_cast<std::int32_t>(p.angular_points));
  return w.bytes();
}

std::string params_bytes(const FastKernelParams& p) {
  ByteWriter w;
  w.put(static_cast<std::int32_t>(p.angles));
  w.put(static_cast<std::int32_t>(p.azimuth));
  w.put(static_cast<std::int32_t>(p.psi_points));
  w.put(p.constant);
  return w.bytes();
}

void put_array(ByteWriter& w, std::span<const double> v) {
  w.put(static_cast<std::uint64_t>(v.size()));
  w.put_bytes(v.data(), v.size() * sizeof(double));
}

std::vector<double> get_array(ByteReader& r) {
  const auto count = r.get<std::uint64_t>();
  if (count > r.remaining() / sizeof(double)) throw FormatError("kernel table: truncated file");
  std::vector<double> v(count);
  r.get_bytes(v.data(), count * sizeof(double));
  return v;
}

// Header and parameter prefix must match byte for byte.
bool strip_prefix(const std::string& bytes, const std::string& prefix) {
  return bytes.size() >= prefix.size() && std::memcmp(bytes.data(), prefix.data(), prefix.size()) == 0;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& prefix) {
  return dir / ("kernel_" + hex64(fnv1a(prefix)) + ".ksbt");
}

}  // namespace

std::filesystem::path kernel_cache_dir() {
  const char* env = std::getenv("KINSPEC_KERNEL_CACHE");
  return env ? std::filesystem::path(env) : std::filesystem::path();
}

void save_table(const std::filesystem::path& path, const ClassicalModeTable& table) {
  const VelocityGrid grid(2, table.nodes_per_axis(), table.half_width(), table.radius());
  ByteWriter w;
  const std::string prefix = header(kClassical, grid) + params_bytes(table.params());
  w.put_bytes(prefix.data(), prefix.size());
  put_array(w, table.raw());
  atomic_write(path, w.bytes());
}

void save_table(const std::filesystem::path& path, const FastModeTable& table) {
  const VelocityGrid grid(table.dim(), table.nodes_per_axis(), table.half_width(), table.radius());
  ByteWriter w;
  const std::string prefix = header(kFast, grid) + params_bytes(table.params());
  w.put_bytes(prefix.data(), prefix.size());
  put_array(w, table.raw_alpha_prime());
  put_array(w, table.raw_alpha());
  atomic_write(path, w.bytes());
}

std::shared_ptr<const ClassicalModeTable> load_classical_table(const std::filesystem::path& path,
                                                               const VelocityGrid& grid,
                                                               const ClassicalKernelParams& params) {
  if (!std::filesystem::exists(path)) return nullptr;
  const std::string bytes = read_file(path);
  const std::string prefix = header(kClassical, grid) + params_bytes(params);
  if (!strip_prefix(bytes, prefix)) return nullptr;
  ByteReader r(std::string_view(bytes).substr(prefix.size()), path.string());
  auto beta = get_array(r);
  return std::make_shared<const ClassicalModeTable>(ClassicalModeTable::from_raw(grid, params, std::move(beta)));
}

std::shared_ptr<const FastModeTable> load_fast_table(const std::filesystem::path& path, const VelocityGrid& grid,
                                                     const FastKernelParams& params) {
  if (!std::filesystem::exists(path)) return nullptr;
  const std::string bytes = read_file(path);
  const std::string prefix = header(kFast, grid) + params_bytes(params);
  if (!strip_prefix(bytes, prefix)) return nullptr;
  ByteReader r(std::string_view(bytes).substr(prefix.size()), path.string());
  auto ap = get_array(r);
  auto a = get_array(r);
  return std::make_shared<const FastModeTable>(FastModeTable::from_raw(grid, params, std::move(ap), std::move(a)));
}

std::shared_ptr<const ClassicalModeTable> classical_table(const VelocityGrid& grid,
                                                          const ClassicalKernelParams& params,
                                                          const std::filesystem::path& dir) {
  if (dir.empty()) return std::make_shared<const ClassicalModeTable>(ClassicalModeTable::build(grid, params));
  const auto path = cache_file(dir, header(kClassical, grid) + params_bytes(params));
  try {
    if (auto t = load_classical_table(path, grid, params)) return t;
  } catch (const FormatError&) {
    // corrupt entry: rebuild below
  }
  auto t = std::make_shared<const ClassicalModeTable>(ClassicalModeTable::build(grid, params));
  std::filesystem::create_directories(dir);
  save_table(path, *t);
  return t;
}

std::shared_ptr<const FastModeTable> fast_table(const VelocityGrid& grid, const FastKernelParams& params,
                                                const std::filesystem::path& dir) {
  if (dir.empty()) return std::make_shared<const FastModeTable>(FastModeTable::build(grid, params));
  const auto path = cache_file(dir, header(kFast, grid) + params_bytes(params));
  try {
    if (auto t = load_fast_table(path, grid, params)) return t;
  } catch (const FormatError&) {
  }
  auto t = std::make_shared<const FastModeTable>(FastModeTable::build(grid, params));
  std::filesystem::create_directories(dir);
  save_table(path, *t);
  return t;
}

}  // namespace kinspec
