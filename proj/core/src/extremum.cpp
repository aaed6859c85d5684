#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "nuent/sweep.hpp"

namespace nuent {

ExtremumKind parse_extremum_kind(std::string_view text) {
  if (text == "max") return ExtremumKind::max;
  if (text == "min") return ExtremumKind::min;
  throw std::invalid_argument("unknown extremum kind '" + std::string(text) + "' (expected max or min)");
}

std::string_view extremum_kind_name(ExtremumKind k) { return k == ExtremumKind::max ? "max" : "min"; }

ExtremumRecord find_extremum(const SweepConfig& config, Measure measure, ExtremumKind kind,
                             double window_lo, double window_hi) {
  config.validate();
  if (!std::isfinite(window_lo) || !std::isfinite(window_hi) || !(window_lo < window_hi)) {
    throw ConfigError("window", "expected finite bounds with lo < hi");
  }
  if (window_lo < config.le_min || window_hi > config.le_max) {
    throw ConfigError("window", "must lie inside [le_min, le_max]");
  }

  SweepConfig scan = config;
  scan.le_min = window_lo;
  scan.le_max = window_hi;
  if (scan.scale == GridScale::log && !(window_lo > 0.0)) scan.scale = GridScale::linear;
  const std::vector<double> grid = sweep_grid(scan);

  const MixingMatrix u = build_pmns(config.params);
  const EvalPath path = config.path == SweepPath::generic ? EvalPath::generic : EvalPath::closed_form;
  const double sign = kind == ExtremumKind::max ? -1.0 : 1.0;
  // Objective to minimise.
  auto objective = [&](double le) {
    return sign * report(u, config.params, config.initial, le, path).value(measure);
  };

  std::size_t best = 0;
  double best_value = objective(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = objective(grid[i]);
    if (v < best_value) {
      best = i;
      best_value = v;
    }
  }

  ExtremumRecord rec;
  rec.kind = kind;
  rec.measure = measure;

  if (best == 0 || best + 1 == grid.size()) {
    rec.at_boundary = true;
    rec.le = grid[best];
    rec.bracket_lo = rec.bracket_hi = grid[best];
    rec.value = sign * best_value;
    return rec;
  }

  // Golden-section refinement inside the neighbouring grid cells.
  const double tol = 1e-6 * (grid.back() - grid.front());
  const double inv_phi = std::numbers::phi - 1.0;
  double a = grid[best - 1];
  double b = grid[best + 1];
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }

  double le = 0.5 * (a + b);
  double value = objective(le);
  if (best_value < value) {
    le = grid[best];
    value = best_value;
  }
  rec.le = le;
  rec.value = sign * value;
  rec.bracket_lo = a;
  rec.bracket_hi = b;
  return rec;
}

std::string format_extremum(const ExtremumRecord& r) {
  std::ostringstream out;
  out << extremum_kind_name(r.kind) << ' ' << measure_name(r.measure) << " = "
      << format_number(r.value) << " at L/E = " << format_number(r.le) << " km/GeV";
  if (r.at_boundary) {
    out << " (boundary: no interior extremum in window)";
  } else {
    out << " (bracket " << format_number(r.bracket_lo) << " .. " << format_number(r.bracket_hi)
        << ")";
  }
  out << '\n';
  return out.str();
}

std::string extremum_json(const ExtremumRecord& r) {
  nlohmann::ordered_json j;
  j["kind"] = extremum_kind_name(r.kind);
  j["measure"] = measure_name(r.measure);
  j["le_km_per_GeV"] = r.le;
  j["value"] = r.value;
  j["bracket"] = {r.bracket_lo, r.bracket_hi};
  j["at_boundary"] = r.at_boundary;
  return j.dump();
}

}  // namespace nuent
