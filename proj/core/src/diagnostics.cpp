#include "kinspec/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kinspec/error.hpp"

namespace kinspec {

Totals totals(const DistributionField& f, const SpatialMesh& mesh) {
  const VelocityGrid& g = *f.grid;
  const int d = g.dim();
  Totals t;
  const double w = mesh.cell_measure() * g.cell_volume();
  for (std::size_t i = 0; i < f.cells; ++i) {
    const auto s = f.slice(i);
    double m = 0.0, e = 0.0;
    Vec3 p{};
    for (std::size_t j = 0; j < s.size(); ++j) {
      m += s[j];
      double v2 = 0.0;
      for (int a = 0; a < d; ++a) {
        const double v = g.component(a)[j];
        p[static_cast<std::size_t>(a)] += v * s[j];
        v2 += v * v;
      }
      e += 0.5 * v2 * s[j];
    }
    t.mass += w * m;
    t.energy += w * e;
    for (int a = 0; a < d; ++a) t.momentum[static_cast<std::size_t>(a)] += w * p[static_cast<std::size_t>(a)];
  }
  return t;
}

std::vector<Moments> cell_moments(const DistributionField& f, const SpatialMesh& mesh, double rho_floor) {
  (void)mesh;
  std::vector<Moments> out(f.cells);
  for (std::size_t i = 0; i < f.cells; ++i) {
    try {
      out[i] = moments(*f.grid, f.slice(i), rho_floor);
    } catch (const DegenerateState& e) {
      throw DegenerateState("cell " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

Moments global_moments(const Totals& t, const SpatialMesh& mesh, int d) {
  Moments g;
  g.dim = d;
  const double volume = mesh.cell_measure() * static_cast<double>(mesh.size());
  if (!(t.mass > 0.0)) throw DegenerateState("total mass is not positive");
  g.rho = t.mass / volume;
  double u2 = 0.0;
  for (int a = 0; a < d; ++a) {
    if (a < mesh.dim() && !mesh.periodic(a)) continue;
    g.u[static_cast<std::size_t>(a)] = t.momentum[static_cast<std::size_t>(a)] / t.mass;
    u2 += g.u[static_cast<std::size_t>(a)] * g.u[static_cast<std::size_t>(a)];
  }
  g.T = (2.0 * t.energy / t.mass - u2) / d;
  g.p = g.rho * g.T;
  if (!(g.T > 0.0)) throw DegenerateState("global temperature is not positive");
  return g;
}

EntropyTriple entropies(const DistributionField& f, const SpatialMesh& mesh, double rho_floor, double f_floor) {
  const VelocityGrid& g = *f.grid;
  const int d = g.dim();
  const Totals tot = totals(f, mesh);
  const Moments gm = global_moments(tot, mesh, d);
  const auto mg = maxwellian(g, gm);
  std::vector<double> log_mg(mg.size());
  for (std::size_t j = 0; j < mg.size(); ++j) log_mg[j] = std::log(std::max(mg[j], f_floor));

  EntropyTriple h;
  std::vector<double> ml(g.size());
  const double w = mesh.cell_measure() * g.cell_volume();
  double hydro = 0.0;
  for (std::size_t i = 0; i < f.cells; ++i) {
    const auto s = f.slice(i);
    Moments m;
    try {
      m = moments(g, s, rho_floor);
    } catch (const DegenerateState& e) {
      throw DegenerateState("cell " + std::to_string(i) + ": " + e.what());
    }
    maxwellian_into(g, m.rho, m.u, m.T, ml);
    double hg = 0.0, hl = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const double c = std::max(s[j], f_floor);
      const double lc = std::log(c);
      hg += c * (lc - log_mg[j]);
      hl += c * (lc - std::log(std::max(ml[j], f_floor)));
    }
    h.Hg += w * hg;
    h.Hl += w * hl;
    hydro += mesh.cell_measure() * m.rho * std::log(m.rho / std::pow(m.T, 0.5 * d));
  }
  h.Hh = hydro - tot.mass * std::log(gm.rho / std::pow(gm.T, 0.5 * d));
  return h;
}

double l1_distance(const DistributionField& f, const DistributionField& g, const SpatialMesh& mesh) {
  if (f.values.size() != g.values.size()) throw InvalidArgument("fields differ in size");
  double s = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k) s += std::abs(f.values[k] - g.values[k]);
  return s * mesh.cell_measure() * f.grid->cell_volume();
}

double distance_to_local_maxwellian(const DistributionField& f, const SpatialMesh& mesh, double rho_floor) {
  const VelocityGrid& g = *f.grid;
  std::vector<double> ml(g.size());
  double s = 0.0;
  for (std::size_t i = 0; i < f.cells; ++i) {
    const auto sl = f.slice(i);
    const Moments m = moments(g, sl, rho_floor);
    maxwellian_into(g, m.rho, m.u, m.T, ml);
    for (std::size_t j = 0; j < sl.size(); ++j) s += std::abs(sl[j] - ml[j]);
  }
  return s * mesh.cell_measure() * g.cell_volume();
}

}  // namespace kinspec
