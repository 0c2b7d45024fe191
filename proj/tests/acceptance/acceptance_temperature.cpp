// Criterion 9: temperature-gradient flow between diffuse walls at 0.56 and 1,
// n_x = 60, t = 25, for eps in {0.1, 0.05, 0.025}.
#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include "kinspec/scenarios.hpp"
#include "report.hpp"
#include "series.hpp"

using namespace kinspec;
using acceptance::fmt;

namespace {

struct Steady {
  bool ok = false;
  double change = 0.0;   // max relative change of T and p between t = 20 and 25
  double spread = 0.0;   // (max - min) / mean of p beyond 3 eps from the walls
  double width = 0.0;    // mean wall-layer width
};

// Innermost distance from the wall of a cell whose pressure departs from the
// bulk linear fit (|x| < 0.25) by more than 0.1%.
double layer_width(const std::vector<double>& x, const std::vector<double>& p, double lo, double hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) >= 0.25) continue;
    sx += x[i];
    sy += p[i];
    sxx += x[i] * x[i];
    sxy += x[i] * p[i];
    n += 1;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / n;
  const double dx = x[1] - x[0];
  double w_lo = 0.0, w_hi = 0.0;
  const double mid = 0.5 * (lo + hi);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fit = icpt + slope * x[i];
    if (std::abs(p[i] - fit) <= 1e-3 * std::abs(fit)) continue;
    if (x[i] < mid) {
      w_lo = std::max(w_lo, x[i] - lo + 0.5 * dx);
    } else {
      w_hi = std::max(w_hi, hi - x[i] + 0.5 * dx);
    }
  }
  return 0.5 * (w_lo + w_hi);
}

Steady run_case(double epsilon) {
  ScenarioConfig c = preset("temperature_gradient", epsilon);
  c.cells = {60, 1};
  c.t_final = 25.0;
  c.output.profile_every = 5.0;
  c.output.diagnostics_every = 100;
  const auto dir = acceptance::scratch_dir("temperature_" + fmt("%g", epsilon));
  std::ostringstream log;
  const RunOutcome r = acceptance::run_into(c, dir, log);
  Steady s;
  if (r.exit_code != kExitOk) {
    std::cerr << "temperature gradient eps = " << epsilon << ": " << r.message << "\n";
    return s;
  }
  auto fin = acceptance::read_table(dir / "profile_final.dat");
  auto mid = acceptance::read_table(dir / "profile_00020000.dat");
  const auto& x = fin["x"];
  const auto& p = fin["p"];
  for (const char* key : {"T", "p"})
    for (std::size_t i = 0; i < x.size(); ++i)
      s.change = std::max(s.change, std::abs(fin[key][i] - mid[key][i]) / std::abs(fin[key][i]));
  double pmin = 1e300, pmax = -1e300, psum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < c.lo[0] + 3 * epsilon || x[i] > c.hi[0] - 3 * epsilon) continue;
    pmin = std::min(pmin, p[i]);
    pmax = std::max(pmax, p[i]);
    psum += p[i];
    ++count;
  }
  s.spread = (pmax - pmin) / (psum / count);
  s.width = layer_width(x, p, c.lo[0], c.hi[0]);
  s.ok = true;
  return s;
}

}  // namespace

int main() {
  acceptance::Report rep;
  const std::vector<double> eps{0.1, 0.05, 0.025};
  std::vector<Steady> res;
  for (double e : eps) res.push_back(run_case(e));
  bool all = true;
  for (const auto& s : res) all = all && s.ok;
  if (!all) {
    rep.line("9", false, "temperature-gradient runs did not complete");
    return rep.exit_code();
  }
  double worst_change = 0.0, worst_spread = 0.0;
  for (const auto& s : res) {
    worst_change = std::max(worst_change, s.change);
    worst_spread = std::max(worst_spread, s.spread);
  }
  rep.line("9a", worst_change <= 1e-4,
           fmt("steady by t = 25: max relative change of T, p from t = 20: %.2e %.2e %.2e (limit 1e-4)", res[0].change,
               res[1].change, res[2].change));
  rep.line("9b", worst_spread <= 1e-2,
           fmt("bulk pressure spread beyond 3 eps of the walls: %.3f%% %.3f%% %.3f%% (limit 1%%)",
               100 * res[0].spread, 100 * res[1].spread, 100 * res[2].spread));
  rep.line("9c", res[0].width > res[1].width && res[1].width > res[2].width,
           fmt("wall-layer width (0.1%% departure from the bulk pressure fit) at eps = 0.1, 0.05, 0.025: %.3f %.3f "
               "%.3f (shrinking)",
               res[0].width, res[1].width, res[2].width));
  return rep.exit_code();
}
