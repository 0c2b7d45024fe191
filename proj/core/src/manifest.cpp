#include "kinspec/manifest.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "kinspec/error.hpp"
#include "kinspec/io.hpp"

namespace kinspec {

using nlohmann::json;

namespace {

const char* const kWallNames[4] = {"x_lo", "x_hi", "y_lo", "y_hi"};

json vec3(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json wall_json(const BoundarySpec& b) {
  return json{{"kind", to_string(b.kind)}, {"alpha", b.alpha},
              {"T_w", b.T_w},              {"T_w_amplitude", b.T_w_amplitude},
              {"T_w_period", b.T_w_period}, {"u_w", vec3(b.u_w)}};
}

json config_json(const ScenarioConfig& c) {
  json j;
  j["scenario"] = c.scenario;
  json space;
  space["dim"] = c.space_dim;
  json lo = json::array(), hi = json::array(), cells = json::array();
  for (int a = 0; a < c.space_dim; ++a) {
    lo.push_back(c.lo[static_cast<std::size_t>(a)]);
    hi.push_back(c.hi[static_cast<std::size_t>(a)]);
    cells.push_back(c.cells[static_cast<std::size_t>(a)]);
  }
  space["lo"] = lo;
  space["hi"] = hi;
  space["cells"] = cells;
  j["space"] = space;
  j["velocity"] = {{"dim", c.velocity_dim}, {"nodes", c.nv}, {"half_width", c.half_width}, {"radius", c.radius}};
  j["physics"] = {{"epsilon", c.epsilon}, {"force", c.force}, {"force_axis", c.force_axis}};
  j["time"] = {{"dt", c.dt}, {"t_final", c.t_final}};
  json walls;
  for (int w = 0; w < 2 * c.space_dim; ++w) walls[kWallNames[w]] = wall_json(c.walls[static_cast<std::size_t>(w)]);
  j["boundaries"] = walls;
  const InitialData& i = c.initial;
  j["initial"] = {{"kind", to_string(i.kind)},
                  {"amplitude", i.amplitude},
                  {"drift", vec3(i.drift)},
                  {"temperature", i.temperature},
                  {"temperature_modulation", i.temperature_modulation},
                  {"normalize", i.normalize},
                  {"density", i.density},
                  {"velocity", vec3(i.velocity)},
                  {"temperature_lo", i.temperature_lo},
                  {"temperature_hi", i.temperature_hi}};
  const SolverSettings& s = c.solver;
  j["solver"] = {{"collision", s.collision},
                 {"angles", s.angles},
                 {"azimuth", s.azimuth},
                 {"padding", s.padding},
                 {"gamma", s.gamma},
                 {"mode", to_string(s.mode)},
                 {"lambda_scale", s.lambda_scale},
                 {"cfl_max", s.cfl_max},
                 {"stiffness_factor", s.stiffness_factor},
                 {"heun", s.heun},
                 {"strang", s.strang},
                 {"limiter", to_string(s.limiter)},
                 {"force_scheme", to_string(s.force_scheme)},
                 {"threads", s.threads}};
  const OutputPolicy& o = c.output;
  j["output"] = {{"dir", o.dir},
                 {"diagnostics_every", o.diagnostics_every},
                 {"profile_every", o.profile_every},
                 {"checkpoint_every", o.checkpoint_every}};
  j["long_running"] = c.long_running;
  return j;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset; ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Walks one JSON object, reading known keys and rejecting the rest.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path, std::string_view text) : j_(j), path_(std::move(path)), text_(text) {
    if (!j_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  template <class T>
  void read(const std::string& key, T& out) {
    if (!has(key)) return;
    const std::string p = join(key);
    try {
      const json& v = j_.at(key);
      if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) fail(p, "expected a boolean");
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) fail(p, "expected an integer");
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) fail(p, "expected a number");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) fail(p, "expected a string");
      }
      out = v.get<T>();
    } catch (const json::exception& e) {
      fail(p, e.what());
    }
  }

  template <class T, std::size_t N>
  void read_array(const std::string& key, std::array<T, N>& out, std::size_t count) {
    if (!has(key)) return;
    const std::string p = join(key);
    const json& v = j_.at(key);
    if (!v.is_array() || v.size() != count) fail(p, "expected an array of " + std::to_string(count) + " numbers");
    for (std::size_t k = 0; k < count; ++k) {
      if (!v[k].is_number() || (std::is_integral_v<T> && !v[k].is_number_integer()))
        fail(p + "[" + std::to_string(k) + "]", std::is_integral_v<T> ? "expected an integer" : "expected a number");
      out[k] = v[k].get<T>();
    }
  }

  void read_vec3(const std::string& key, Vec3& out) {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_array() || v.empty() || v.size() > 3) fail(join(key), "expected an array of 1 to 3 numbers");
    Vec3 r{};
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_number()) fail(join(key) + "[" + std::to_string(k) + "]", "expected a number");
      r[k] = v[k].get<double>();
    }
    out = r;
  }

  template <class F>
  void read_enum(const std::string& key, F parse) {
    if (!has(key)) return;
    std::string s;
    read(key, s);
    try {
      parse(s);
    } catch (const InvalidArgument& e) {
      fail(join(key), e.what());
    }
  }

  ObjectReader child(const std::string& key) {
    seen_.insert(key);
    return ObjectReader(j_.at(key), join(key), text_);
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (seen_.count(it.key())) continue;
      std::string where;
      const std::size_t pos = text_.find("\"" + it.key() + "\"");
      if (pos != std::string_view::npos) {
        const auto [line, col] = line_column(text_, pos);
        where = " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
      }
      throw ConfigError(join(it.key()) + ": unknown key" + where);
    }
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
  }

  std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const json& j_;
  std::string path_;
  std::string_view text_;
  std::set<std::string> seen_;
};

void read_wall(ObjectReader r, BoundarySpec& b) {
  r.read_enum("kind", [&](const std::string& s) { b.kind = boundary_kind_from_string(s); });
  r.read("alpha", b.alpha);
  r.read("T_w", b.T_w);
  r.read("T_w_amplitude", b.T_w_amplitude);
  r.read("T_w_period", b.T_w_period);
  r.read_vec3("u_w", b.u_w);
  r.finish();
}

void read_config(const json& j, std::string_view text, ScenarioConfig& c) {
  ObjectReader r(j, "", text);
  r.read("scenario", c.scenario);
  if (r.has("space")) {
    ObjectReader s = r.child("space");
    s.read("dim", c.space_dim);
    if (c.space_dim != 1 && c.space_dim != 2) ObjectReader::fail("space.dim", "must be 1 or 2");
    const auto n = static_cast<std::size_t>(c.space_dim);
    s.read_array("lo", c.lo, n);
    s.read_array("hi", c.hi, n);
    s.read_array("cells", c.cells, n);
    s.finish();
  }
  if (r.has("velocity")) {
    ObjectReader v = r.child("velocity");
    v.read("dim", c.velocity_dim);
    v.read("nodes", c.nv);
    v.read("half_width", c.half_width);
    v.read("radius", c.radius);
    v.finish();
  }
  if (r.has("physics")) {
    ObjectReader p = r.child("physics");
    p.read("epsilon", c.epsilon);
    p.read("force", c.force);
    p.read("force_axis", c.force_axis);
    p.finish();
  }
  if (r.has("time")) {
    ObjectReader t = r.child("time");
    t.read("dt", c.dt);
    t.read("t_final", c.t_final);
    t.finish();
  }
  if (r.has("boundaries")) {
    ObjectReader b = r.child("boundaries");
    for (int w = 0; w < 4; ++w) {
      if (b.has(kWallNames[w])) {
        if (w >= 2 && c.space_dim == 1) ObjectReader::fail(std::string("boundaries.") + kWallNames[w], "no y walls in 1D");
        read_wall(b.child(kWallNames[w]), c.walls[static_cast<std::size_t>(w)]);
      }
    }
    b.finish();
  }
  if (r.has("initial")) {
    ObjectReader i = r.child("initial");
    InitialData& d = c.initial;
    i.read_enum("kind", [&](const std::string& s) { d.kind = initial_kind_from_string(s); });
    i.read("amplitude", d.amplitude);
    i.read_vec3("drift", d.drift);
    i.read("temperature", d.temperature);
    i.read("temperature_modulation", d.temperature_modulation);
    i.read("normalize", d.normalize);
    i.read("density", d.density);
    i.read_vec3("velocity", d.velocity);
    i.read("temperature_lo", d.temperature_lo);
    i.read("temperature_hi", d.temperature_hi);
    i.finish();
  }
  if (r.has("solver")) {
    ObjectReader s = r.child("solver");
    SolverSettings& v = c.solver;
    s.read("collision", v.collision);
    s.read("angles", v.angles);
    s.read("azimuth", v.azimuth);
    s.read("padding", v.padding);
    s.read("gamma", v.gamma);
    s.read_enum("mode", [&](const std::string& m) { v.mode = step_mode_from_string(m); });
    s.read("lambda_scale", v.lambda_scale);
    s.read("cfl_max", v.cfl_max);
    s.read("stiffness_factor", v.stiffness_factor);
    s.read("heun", v.heun);
    s.read("strang", v.strang);
    s.read_enum("limiter", [&](const std::string& m) { v.limiter = limiter_from_string(m); });
    s.read_enum("force_scheme", [&](const std::string& m) { v.force_scheme = force_scheme_from_string(m); });
    s.read("threads", v.threads);
    s.finish();
  }
  if (r.has("output")) {
    ObjectReader o = r.child("output");
    o.read("dir", c.output.dir);
    o.read("diagnostics_every", c.output.diagnostics_every);
    o.read("profile_every", c.output.profile_every);
    o.read("checkpoint_every", c.output.checkpoint_every);
    o.finish();
  }
  r.read("long_running", c.long_running);
  r.finish();
}

bool is_preset(const std::string& name) {
  const auto names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

std::string config_to_json(const ScenarioConfig& config, int indent) { return config_json(config).dump(indent); }

ScenarioConfig config_from_json(std::string_view text, const std::optional<ScenarioConfig>& base) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, col] = line_column(text, offset);
    throw ConfigError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                      e.what());
  }
  if (!j.is_object()) throw ConfigError("<root>: expected an object");
  ScenarioConfig c;
  if (base) {
    c = *base;
  } else if (j.contains("scenario") && j["scenario"].is_string() && is_preset(j["scenario"].get<std::string>())) {
    c = preset(j["scenario"].get<std::string>());
  }
  read_config(j, text, c);
  if (c.space_dim == 1) {
    c.lo[1] = 0.0;
    c.hi[1] = 1.0;
    c.cells[1] = 1;
    c.walls[2] = BoundarySpec::periodic();
    c.walls[3] = BoundarySpec::periodic();
  }
  return c;
}

std::uint64_t manifest_hash(const ScenarioConfig& config) {
  json j = config_json(config);
  j.erase("output");
  j["solver"].erase("threads");
  j["time"].erase("t_final");
  return fnv1a(j.dump());
}

RunManifest parse_config(const ConfigOverrides& o) {
  RunManifest m;
  ScenarioConfig& c = m.config;
  std::optional<ScenarioConfig> base;
  if (o.scenario) base = preset(*o.scenario, o.epsilon.value_or(0.0));
  if (o.config_file) {
    c = config_from_json(read_file(*o.config_file), base);
  } else if (base) {
    c = *base;
  } else {
    throw ConfigError("scenario: no --scenario or --config given");
  }
  if (o.epsilon) {
    // presets couple the wall velocity of the ghost case to epsilon
    for (auto& w : c.walls)
      if (w.u_w[0] != 0.0 && c.scenario.rfind("ghost", 0) == 0) w.u_w[0] = *o.epsilon;
    c.epsilon = *o.epsilon;
  }
  if (o.nx) c.cells[0] = *o.nx;
  if (o.ny) {
    if (c.space_dim == 1) throw ConfigError("space.cells[1]: --ny needs a 2D domain");
    c.cells[1] = *o.ny;
  }
  if (o.nv) c.nv = *o.nv;
  if (o.dt) c.dt = *o.dt;
  if (o.t_final) c.t_final = *o.t_final;
  if (o.kernel) c.solver.collision = *o.kernel;
  if (o.mode) {
    try {
      c.solver.mode = step_mode_from_string(*o.mode);
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("solver.mode: ") + e.what());
    }
  }
  if (o.out) c.output.dir = *o.out;
  if (o.threads) c.solver.threads = *o.threads;
  if (o.checkpoint_every) c.output.checkpoint_every = *o.checkpoint_every;
  if (o.resume) m.resume = *o.resume;
  m.force_resume = o.force_resume;
  c.validate();
  return m;
}

}  // namespace kinspec
