#pragma once

// L/E sweeps, extremum search and concurrence-triangle reports.

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuent/errors.hpp"
#include "nuent/measures.hpp"
#include "nuent/oscillation.hpp"

namespace nuent {

enum class LeUnit { km_per_MeV, km_per_GeV };
enum class GridScale { linear, log };
enum class SweepPath { closed_form, generic, both };

LeUnit parse_unit(std::string_view text);
std::string_view unit_name(LeUnit u);
GridScale parse_scale(std::string_view text);
std::string_view scale_name(GridScale s);
SweepPath parse_sweep_path(std::string_view text);
std::string_view sweep_path_name(SweepPath p);

/// Converts an L/E value in `unit` to km/GeV.
double to_km_per_gev(double value, LeUnit unit);

inline constexpr std::size_t kMaxSweepPoints = 10'000'000;

struct SweepConfig {
  Flavor initial = Flavor::electron;
  double le_min = 0.0;  // in `unit`
  double le_max = 40.0;
  LeUnit unit = LeUnit::km_per_MeV;
  std::size_t points = 4001;
  GridScale scale = GridScale::linear;
  SweepPath path = SweepPath::closed_form;
  OscillationParams params;
  std::optional<std::filesystem::path> params_file;
  std::optional<std::filesystem::path> output;  // standard output when empty
  unsigned workers = 0;                          // 0 selects hardware concurrency
  bool slopes = false;                           // append finite-difference columns

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Reads a sweep configuration (preset) file. Keys mirror the SweepConfig
/// fields; "initial", "unit", "scale" and "path" take their CLI spellings.
/// A relative "params_file" is resolved against the preset's directory.
SweepConfig load_sweep_config(const std::filesystem::path& path);
SweepConfig sweep_config_from_json(std::string_view text, SweepConfig base = {});

/// Grid points in km/GeV, strictly increasing, endpoints exact.
std::vector<double> sweep_grid(const SweepConfig& config);

struct SweepRow {
  MeasureReport primary;                  // closed-form when path is both
  std::optional<MeasureReport> secondary;  // generic when path is both
  double path_discrepancy = 0.0;           // max |closed-form - generic| over all fields
};

struct SweepSummary {
  std::size_t rows = 0;
  std::optional<double> max_path_discrepancy;
  /// Grid-level strict local extrema per measure (ggm, three_pi, gmc, fill).
  std::array<int, 4> local_minima{};
  std::array<int, 4> local_maxima{};
  /// Grid steps where the minimising bipartition changes (non-analytic points).
  int ggm_kinks = 0;
  int gmc_kinks = 0;
  double min_fill_minus_gmc = 0.0;
  double le_at_min_fill_minus_gmc = 0.0;
  double max_probability_sum_error = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

/// Grid points are evaluated by a pool of `config.workers` threads; rows are
/// always assembled in grid order.
SweepResult run_sweep(const SweepConfig& config);

/// Writes the CSV table. The first eleven columns are fixed:
/// le_km_per_GeV,p_e,p_mu,p_tau,ggm,three_pi,gmc,fill,edge_a,edge_b,edge_c
void write_csv(std::ostream& out, const SweepResult& result, bool slopes = false);
std::string format_summary(const SweepSummary& summary);

/// Differences sampled across a sweep: counts of grid-local extrema and kinks.
SweepSummary summarize(const std::vector<SweepRow>& rows);

// Extremum search -------------------------------------------------------------

enum class ExtremumKind { max, min };
ExtremumKind parse_extremum_kind(std::string_view text);
std::string_view extremum_kind_name(ExtremumKind k);

struct ExtremumRecord {
  ExtremumKind kind = ExtremumKind::max;
  Measure measure = Measure::fill;
  double le = 0.0;  // km/GeV
  double value = 0.0;
  double bracket_lo = 0.0;  // km/GeV
  double bracket_hi = 0.0;
  bool at_boundary = false;
};

/// Coarse scan of the window with `config.points` samples followed by
/// golden-section refinement to 1e-6 of the window width. Window bounds are in
/// `config.unit` and must lie inside [le_min, le_max].
ExtremumRecord find_extremum(const SweepConfig& config, Measure measure, ExtremumKind kind,
                             double window_lo, double window_hi);

std::string format_extremum(const ExtremumRecord& record);
std::string extremum_json(const ExtremumRecord& record);

// Concurrence triangle --------------------------------------------------------

struct TriangleRecord {
  Flavor initial = Flavor::electron;
  double le = 0.0;  // km/GeV
  ProbabilityTriple probabilities;
  ConcurrenceTriangle triangle;
  double sqrt_area = 0.0;      // concurrence fill
  double shortest_edge = 0.0;  // GMC
  double fill_minus_gmc = 0.0;
};

TriangleRecord triangle_report(const OscillationParams& params, Flavor initial, double le);
std::string format_triangle(const TriangleRecord& record);
std::string triangle_json(const TriangleRecord& record);

// Number formatting -------------------------------------------------------------

/// 12 significant digits; lowercase scientific notation when 0 < |x| < 1e-4.
std::string format_number(double x);

}  // namespace nuent
