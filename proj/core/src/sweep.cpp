#include "nuent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "nuent/params_io.hpp"

namespace nuent {

namespace {

constexpr std::size_t kChunk = 128;

template <typename Parse>
auto parse_field(const std::string& field, std::string_view text, Parse parse) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

double max_field_difference(const MeasureReport& a, const MeasureReport& b) {
  const std::array<double, 10> diffs{
      std::abs(a.probabilities.p_e - b.probabilities.p_e),
      std::abs(a.probabilities.p_mu - b.probabilities.p_mu),
      std::abs(a.probabilities.p_tau - b.probabilities.p_tau),
      std::abs(a.ggm - b.ggm),
      std::abs(a.three_pi - b.three_pi),
      std::abs(a.gmc - b.gmc),
      std::abs(a.fill - b.fill),
      std::abs(a.triangle.edge_a - b.triangle.edge_a),
      std::abs(a.triangle.edge_b - b.triangle.edge_b),
      std::abs(a.triangle.edge_c - b.triangle.edge_c)};
  return *std::max_element(diffs.begin(), diffs.end());
}

int argmin_edge(const ConcurrenceTriangle& t) {
  const std::array<double, 3> e{t.edge_a, t.edge_b, t.edge_c};
  return static_cast<int>(std::min_element(e.begin(), e.end()) - e.begin());
}

int argmax_schmidt(const ProbabilityTriple& p) {
  std::array<double, 3> lambda{};
  for (int i = 0; i < 3; ++i) lambda[i] = std::max(p[i], 1.0 - p[i]);
  return static_cast<int>(std::max_element(lambda.begin(), lambda.end()) - lambda.begin());
}

}  // namespace

LeUnit parse_unit(std::string_view text) {
  if (text == "km/MeV") return LeUnit::km_per_MeV;
  if (text == "km/GeV") return LeUnit::km_per_GeV;
  throw std::invalid_argument("unknown unit '" + std::string(text) + "' (expected km/MeV or km/GeV)");
}

std::string_view unit_name(LeUnit u) { return u == LeUnit::km_per_MeV ? "km/MeV" : "km/GeV"; }

GridScale parse_scale(std::string_view text) {
  if (text == "linear") return GridScale::linear;
  if (text == "log") return GridScale::log;
  throw std::invalid_argument("unknown scale '" + std::string(text) + "' (expected linear or log)");
}

std::string_view scale_name(GridScale s) { return s == GridScale::linear ? "linear" : "log"; }

SweepPath parse_sweep_path(std::string_view text) {
  if (text == "closed-form") return SweepPath::closed_form;
  if (text == "generic") return SweepPath::generic;
  if (text == "both") return SweepPath::both;
  throw std::invalid_argument("unknown path '" + std::string(text) +
                              "' (expected closed-form, generic or both)");
}

std::string_view sweep_path_name(SweepPath p) {
  switch (p) {
    case SweepPath::closed_form: return "closed-form";
    case SweepPath::generic: return "generic";
    case SweepPath::both: return "both";
  }
  return "?";
}

double to_km_per_gev(double value, LeUnit unit) {
  return unit == LeUnit::km_per_MeV ? value * 1000.0 : value;
}

void SweepConfig::validate() const {
  if (!std::isfinite(le_min)) throw ConfigError("le_min", "must be finite");
  if (!std::isfinite(le_max)) throw ConfigError("le_max", "must be finite");
  if (le_min < 0.0) throw ConfigError("le_min", "must be non-negative");
  if (!(le_min < le_max)) throw ConfigError("le_max", "must be greater than le_min");
  if (scale == GridScale::log && !(le_min > 0.0)) {
    throw ConfigError("le_min", "log scale requires le_min > 0");
  }
  if (points < 2) throw ConfigError("points", "must be at least 2");
  if (points > kMaxSweepPoints) throw ConfigError("points", "must not exceed 10^7");
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("params", e.what());
  }
}

SweepConfig sweep_config_from_json(std::string_view text, SweepConfig base) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");

  auto str = [](const json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError(key, "expected a string");
    return v.get<std::string>();
  };
  auto num = [](const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    return v.get<double>();
  };

  SweepConfig c = base;
  for (const auto& [key, value] : doc.items()) {
    if (key == "initial") c.initial = parse_field(key, str(value, key), parse_flavor);
    else if (key == "le_min") c.le_min = num(value, key);
    else if (key == "le_max") c.le_max = num(value, key);
    else if (key == "unit") c.unit = parse_field(key, str(value, key), parse_unit);
    else if (key == "scale") c.scale = parse_field(key, str(value, key), parse_scale);
    else if (key == "path") c.path = parse_field(key, str(value, key), parse_sweep_path);
    else if (key == "points") {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ConfigError(key, "expected a non-negative integer");
      }
      c.points = value.get<std::size_t>();
    } else if (key == "workers") {
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ConfigError(key, "expected a non-negative integer");
      }
      c.workers = value.get<unsigned>();
    } else if (key == "params_file") c.params_file = str(value, key);
    else if (key == "params") c.params = params_from_json(value.dump(), c.params);
    else if (key == "description") continue;
    else throw ConfigError(key, "unknown configuration key");
  }
  return c;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read configuration file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  SweepConfig c = sweep_config_from_json(buf.str());
  if (c.params_file && c.params_file->is_relative()) {
    c.params_file = path.parent_path() / *c.params_file;
  }
  if (c.params_file) c.params = load_params(*c.params_file, c.params);
  return c;
}

std::vector<double> sweep_grid(const SweepConfig& config) {
  config.validate();
  const double lo = to_km_per_gev(config.le_min, config.unit);
  const double hi = to_km_per_gev(config.le_max, config.unit);
  const std::size_t n = config.points;
  const double last = static_cast<double>(n - 1);

  std::vector<double> grid(n);
  if (config.scale == GridScale::linear) {
    for (std::size_t i = 0; i < n; ++i) grid[i] = lo + (hi - lo) * (static_cast<double>(i) / last);
  } else {
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = std::exp(log_lo + (log_hi - log_lo) * (static_cast<double>(i) / last));
    }
  }
  grid.front() = lo;
  grid.back() = hi;
  for (std::size_t i = 1; i < n; ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ConfigError("points", "grid spacing is below double precision resolution");
    }
  }
  return grid;
}

SweepResult run_sweep(const SweepConfig& config) {
  const std::vector<double> grid = sweep_grid(config);
  const MixingMatrix u = build_pmns(config.params);

  auto evaluate = [&](double le) {
    SweepRow row;
    switch (config.path) {
      case SweepPath::closed_form:
        row.primary = report(u, config.params, config.initial, le, EvalPath::closed_form);
        break;
      case SweepPath::generic:
        row.primary = report(u, config.params, config.initial, le, EvalPath::generic);
        break;
      case SweepPath::both:
        row.primary = report(u, config.params, config.initial, le, EvalPath::closed_form);
        row.secondary = report(u, config.params, config.initial, le, EvalPath::generic);
        row.path_discrepancy = max_field_difference(row.primary, *row.secondary);
        break;
    }
    return row;
  };

  std::vector<SweepRow> rows(grid.size());
  unsigned workers = config.workers != 0 ? config.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u,
                                 static_cast<unsigned>((grid.size() + kChunk - 1) / kChunk));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned id) {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= grid.size()) break;
        const std::size_t end = std::min(begin + kChunk, grid.size());
        for (std::size_t i = begin; i < end; ++i) rows[i] = evaluate(grid[i]);
      }
    } catch (...) {
      failures[id] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SweepResult result;
  result.summary = summarize(rows);
  result.rows = std::move(rows);
  return result;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.rows = rows.size();
  if (rows.empty()) return s;

  constexpr std::array<Measure, 4> kMeasures{Measure::ggm, Measure::three_pi, Measure::gmc,
                                             Measure::fill};
  for (std::size_t m = 0; m < kMeasures.size(); ++m) {
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
      const double prev = rows[i - 1].primary.value(kMeasures[m]);
      const double cur = rows[i].primary.value(kMeasures[m]);
      const double nxt = rows[i + 1].primary.value(kMeasures[m]);
      if (cur < prev && cur < nxt) ++s.local_minima[m];
      if (cur > prev && cur > nxt) ++s.local_maxima[m];
    }
  }

  // Degenerate rows (all edges zero) have no meaningful argmin.
  std::optional<int> last_edge, last_schmidt;
  for (const SweepRow& row : rows) {
    if (row.primary.triangle.shortest() <= 0.0 && row.primary.gmc == 0.0 &&
        row.primary.ggm == 0.0) {
      continue;
    }
    const int edge = argmin_edge(row.primary.triangle);
    const int schmidt = argmax_schmidt(row.primary.probabilities);
    if (last_edge && *last_edge != edge) ++s.gmc_kinks;
    if (last_schmidt && *last_schmidt != schmidt) ++s.ggm_kinks;
    last_edge = edge;
    last_schmidt = schmidt;
  }

  s.min_fill_minus_gmc = rows.front().primary.fill - rows.front().primary.gmc;
  s.le_at_min_fill_minus_gmc = rows.front().primary.le;
  double max_discrepancy = 0.0;
  bool have_secondary = false;
  for (const SweepRow& row : rows) {
    const double diff = row.primary.fill - row.primary.gmc;
    if (diff < s.min_fill_minus_gmc) {
      s.min_fill_minus_gmc = diff;
      s.le_at_min_fill_minus_gmc = row.primary.le;
    }
    s.max_probability_sum_error =
        std::max(s.max_probability_sum_error, std::abs(row.primary.probabilities.sum() - 1.0));
    if (row.secondary) {
      have_secondary = true;
      max_discrepancy = std::max(max_discrepancy, row.path_discrepancy);
      s.max_probability_sum_error =
          std::max(s.max_probability_sum_error, std::abs(row.secondary->probabilities.sum() - 1.0));
    }
  }
  if (have_secondary) s.max_path_discrepancy = max_discrepancy;
  return s;
}

}  // namespace nuent
