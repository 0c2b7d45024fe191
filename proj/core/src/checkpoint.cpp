#include "kinspec/checkpoint.hpp"

#include <cstring>

#include "kinspec/error.hpp"
#include "kinspec/io.hpp"

namespace kinspec {

namespace {

constexpr char kMagic[4] = {'K', 'S', 'C', 'K'};

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const DistributionField& field, const SpatialMesh& mesh,
                     std::uint64_t manifest_hash, std::uint64_t step) {
  const VelocityGrid& g = *field.grid;
  ByteWriter w;
  w.put_bytes(kMagic, 4);
  w.put(kCheckpointVersion);
  w.put(manifest_hash);
  w.put(static_cast<std::int32_t>(g.dim()));
  w.put(static_cast<std::int32_t>(g.nodes_per_axis()));
  w.put(g.half_width());
  w.put(g.truncation_radius());
  w.put(static_cast<std::int32_t>(mesh.dim()));
  for (int a = 0; a < 2; ++a) w.put(static_cast<std::int32_t>(mesh.cells(a)));
  for (int a = 0; a < 2; ++a) w.put(mesh.lo(a));
  for (int a = 0; a < 2; ++a) w.put(mesh.hi(a));
  w.put(step);
  w.put(field.time);
  w.put(static_cast<std::uint64_t>(field.values.size()));
  w.put_bytes(field.values.data(), field.values.size() * sizeof(double));
  w.put(fnv1a(w.bytes()));
  atomic_write(path, w.bytes());
}

CheckpointState load_checkpoint(const std::filesystem::path& path, std::shared_ptr<const VelocityGrid> grid,
                                const SpatialMesh& mesh, std::uint64_t expected_hash, bool force) {
  const std::string bytes = read_file(path);
  const std::string what = path.string();
  ByteReader r(bytes, what);
  char magic[4];
  r.get_bytes(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) throw FormatError(what + ": not a checkpoint file");
  const auto version = r.get<std::uint32_t>();
  if (version != kCheckpointVersion)
    throw FormatError(what + ": checkpoint version " + std::to_string(version) + ", expected " +
                      std::to_string(kCheckpointVersion));
  CheckpointState s;
  s.manifest_hash = r.get<std::uint64_t>();
  const int d = r.get<std::int32_t>();
  const int n = r.get<std::int32_t>();
  const double L = r.get<double>();
  const double R = r.get<double>();
  const int sdim = r.get<std::int32_t>();
  std::array<int, 2> cells{};
  std::array<double, 2> lo{}, hi{};
  for (auto& c : cells) c = r.get<std::int32_t>();
  for (auto& x : lo) x = r.get<double>();
  for (auto& x : hi) x = r.get<double>();
  s.step = r.get<std::uint64_t>();
  const double time = r.get<double>();
  const auto count = r.get<std::uint64_t>();
  if (count > r.remaining() / sizeof(double)) throw FormatError(what + ": truncated file");
  std::vector<double> values(count);
  r.get_bytes(values.data(), count * sizeof(double));
  const std::size_t body = bytes.size() - r.remaining();
  const auto checksum = r.get<std::uint64_t>();
  if (checksum != fnv1a(std::string_view(bytes).substr(0, body))) throw FormatError(what + ": checksum mismatch");

  if (d != grid->dim() || n != grid->nodes_per_axis() || L != grid->half_width() || R != grid->truncation_radius())
    throw FormatError(what + ": velocity grid mismatch (file d=" + std::to_string(d) + " n=" + std::to_string(n) +
                      ", run d=" + std::to_string(grid->dim()) + " n=" + std::to_string(grid->nodes_per_axis()) + ")");
  bool same_mesh = sdim == mesh.dim();
  for (int a = 0; a < 2; ++a) {
    const auto k = static_cast<std::size_t>(a);
    same_mesh = same_mesh && cells[k] == mesh.cells(a) && lo[k] == mesh.lo(a) && hi[k] == mesh.hi(a);
  }
  if (!same_mesh)
    throw FormatError(what + ": spatial mesh mismatch (file " + std::to_string(cells[0]) + "x" +
                      std::to_string(cells[1]) + ", run " + std::to_string(mesh.cells(0)) + "x" +
                      std::to_string(mesh.cells(1)) + ")");
  if (count != mesh.size() * grid->size()) throw FormatError(what + ": payload size mismatch");
  if (s.manifest_hash != expected_hash && !force)
    throw FormatError(what + ": manifest hash mismatch (checkpoint " + hex64(s.manifest_hash) + ", run " +
                      hex64(expected_hash) + "); pass --force-resume to load anyway");
  s.field = DistributionField(std::move(grid), mesh.size());
  s.field.values = std::move(values);
  s.field.time = time;
  return s;
}

}  // namespace kinspec
