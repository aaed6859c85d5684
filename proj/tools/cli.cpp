#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nuent/params_io.hpp"
#include "nuent/sweep.hpp"

namespace nuent::cli {

namespace {

struct SweepFlags {
  std::string config_file;
  std::string flavor;
  double le_min = 0.0;
  double le_max = 0.0;
  std::string unit;
  std::size_t points = 0;
  std::string scale;
  std::string path;
  std::string params_file;
  std::string output;
  unsigned workers = 0;
  bool slopes = false;
  bool quiet = false;

  CLI::Option* le_min_opt = nullptr;
  CLI::Option* le_max_opt = nullptr;
  CLI::Option* points_opt = nullptr;
  CLI::Option* workers_opt = nullptr;
};

void add_sweep_flags(CLI::App& cmd, SweepFlags& f) {
  cmd.add_option("--config", f.config_file, "JSON sweep preset; other flags override it");
  cmd.add_option("--flavor,--initial", f.flavor, "initial flavour: e or mu");
  f.le_min_opt = cmd.add_option("--le-min", f.le_min, "lower L/E bound in --unit");
  f.le_max_opt = cmd.add_option("--le-max", f.le_max, "upper L/E bound in --unit");
  cmd.add_option("--unit", f.unit, "km/MeV or km/GeV");
  f.points_opt = cmd.add_option("--points", f.points, "number of grid points (>= 2)");
  cmd.add_option("--scale", f.scale, "linear or log");
  cmd.add_option("--path", f.path, "closed-form, generic or both");
  cmd.add_option("--params", f.params_file, "JSON physics parameter overrides");
  cmd.add_option("--output,-o", f.output, "output file (default: standard output)");
  f.workers_opt = cmd.add_option("--workers", f.workers, "worker threads (0 = all cores)");
}

template <typename Parse>
auto parse_flag(const char* field, const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

SweepConfig resolve_config(const SweepFlags& f) {
  SweepConfig c = f.config_file.empty() ? SweepConfig{} : load_sweep_config(f.config_file);
  if (!f.flavor.empty()) c.initial = parse_flag("flavor", f.flavor, parse_flavor);
  if (f.le_min_opt->count() > 0) c.le_min = f.le_min;
  if (f.le_max_opt->count() > 0) c.le_max = f.le_max;
  if (!f.unit.empty()) c.unit = parse_flag("unit", f.unit, parse_unit);
  if (f.points_opt->count() > 0) c.points = f.points;
  if (!f.scale.empty()) c.scale = parse_flag("scale", f.scale, parse_scale);
  if (!f.path.empty()) c.path = parse_flag("path", f.path, parse_sweep_path);
  if (!f.params_file.empty()) {
    c.params_file = f.params_file;
    c.params = load_params(f.params_file);
  }
  if (!f.output.empty()) c.output = f.output;
  if (f.workers_opt->count() > 0) c.workers = f.workers;
  c.slopes = f.slopes;
  c.validate();
  return c;
}

void warn_on_splittings(const OscillationParams& p, std::ostream& err) {
  if (p.splitting_mismatch() > kSplittingTolerance) {
    err << "warning: dm2_31 differs from dm2_21 + dm2_32 by " << p.splitting_mismatch()
        << " eV^2\n";
  }
}

// Writes `text` to the file at `path`, or to `out` when no path is given.
void emit(const std::optional<std::filesystem::path>& path, std::ostream& out,
          const std::string& text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + path->string() + "'");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing output file '" + path->string() + "'");
}

int run_sweep_command(const SweepFlags& f, std::ostream& out, std::ostream& err) {
  const SweepConfig config = resolve_config(f);
  warn_on_splittings(config.params, err);
  const SweepResult result = run_sweep(config);
  std::ostringstream csv;
  write_csv(csv, result, config.slopes);
  emit(config.output, out, csv.str());
  if (!f.quiet) err << format_summary(result.summary);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-flavour neutrino oscillations and tripartite entanglement measures", "nuent"};
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "evaluate all measures along an L/E grid, CSV output");
  add_sweep_flags(*sweep, sweep_flags);
  sweep->add_flag("--slopes", sweep_flags.slopes, "append finite-difference slope columns");
  sweep->add_flag("--quiet,-q", sweep_flags.quiet, "suppress the run summary");

  SweepFlags ext_flags;
  std::string measure = "fill";
  std::string kind = "max";
  std::vector<double> window;
  bool ext_json = false;
  auto* extremum = app.add_subcommand("extremum", "locate a maximum or minimum of one measure");
  add_sweep_flags(*extremum, ext_flags);
  extremum->add_option("--measure", measure, "ggm, three_pi, gmc or fill");
  extremum->add_option("--kind", kind, "max or min");
  extremum->add_option("--window", window, "search window LO HI in --unit")->expected(2);
  extremum->add_flag("--json", ext_json, "emit a JSON record instead of text");

  std::string tri_flavor = "e";
  double tri_le = 0.0;
  std::string tri_unit = "km/GeV";
  std::string tri_params;
  std::string tri_output;
  bool tri_json = false;
  auto* triangle = app.add_subcommand("triangle", "concurrence-triangle report at one L/E");
  triangle->add_option("--flavor,--initial", tri_flavor, "initial flavour: e or mu");
  triangle->add_option("--le", tri_le, "L/E in --unit")->required();
  triangle->add_option("--unit", tri_unit, "km/MeV or km/GeV");
  triangle->add_option("--params", tri_params, "JSON physics parameter overrides");
  triangle->add_option("--output,-o", tri_output, "output file (default: standard output)");
  triangle->add_flag("--json", tri_json, "append a JSON record after the text block");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(sweep->parsed() ? "sweep" : "");
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out;
    const int code = app.exit(e, msg_out, err);
    out << msg_out.str();
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    if (sweep->parsed()) return run_sweep_command(sweep_flags, out, err);

    if (extremum->parsed()) {
      SweepConfig config = resolve_config(ext_flags);
      warn_on_splittings(config.params, err);
      const Measure m = parse_flag("measure", measure, parse_measure);
      const ExtremumKind k = parse_flag("kind", kind, parse_extremum_kind);
      const double lo = window.empty() ? config.le_min : window[0];
      const double hi = window.empty() ? config.le_max : window[1];
      const ExtremumRecord rec = find_extremum(config, m, k, lo, hi);
      emit(config.output, out, ext_json ? extremum_json(rec) + "\n" : format_extremum(rec));
      return kSuccess;
    }

    if (triangle->parsed()) {
      const Flavor flavor = parse_flag("flavor", tri_flavor, parse_flavor);
      const LeUnit unit = parse_flag("unit", tri_unit, parse_unit);
      if (!std::isfinite(tri_le) || tri_le < 0.0) throw ConfigError("le", "must be non-negative");
      OscillationParams params;
      if (!tri_params.empty()) params = load_params(tri_params);
      warn_on_splittings(params, err);
      const TriangleRecord rec = triangle_report(params, flavor, to_km_per_gev(tri_le, unit));
      std::string text = format_triangle(rec);
      if (tri_json) text += triangle_json(rec) + "\n";
      std::optional<std::filesystem::path> path;
      if (!tri_output.empty()) path = tri_output;
      emit(path, out, text);
      return kSuccess;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kConfigError;
}

}  // namespace nuent::cli
