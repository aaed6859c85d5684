#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "nuent/sweep.hpp"

namespace nuent {

std::string format_number(double x) {
  if (x == 0.0) return "0";
  if (std::isnan(x)) return "nan";
  char buf[64];
  if (std::abs(x) < 1e-4) {
    std::snprintf(buf, sizeof buf, "%.11e", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g", x);
  }
  return buf;
}

namespace {

constexpr std::array<Measure, 4> kMeasures{Measure::ggm, Measure::three_pi, Measure::gmc,
                                           Measure::fill};

// Central difference in le; one-sided at the ends.
double slope(const std::vector<SweepRow>& rows, std::size_t i, Measure m) {
  const std::size_t lo = i == 0 ? 0 : i - 1;
  const std::size_t hi = i + 1 == rows.size() ? i : i + 1;
  const double dx = rows[hi].primary.le - rows[lo].primary.le;
  return (rows[hi].primary.value(m) - rows[lo].primary.value(m)) / dx;
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result, bool slopes) {
  const bool both = !result.rows.empty() && result.rows.front().secondary.has_value();

  out << "le_km_per_GeV,p_e,p_mu,p_tau,ggm,three_pi,gmc,fill,edge_a,edge_b,edge_c";
  if (both) out << ",ggm_generic,three_pi_generic,gmc_generic,fill_generic,path_max_diff";
  if (slopes) out << ",d_ggm,d_three_pi,d_gmc,d_fill";
  out << '\n';

  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& row = result.rows[i];
    const MeasureReport& r = row.primary;
    out << format_number(r.le) << ',' << format_number(r.probabilities.p_e) << ','
        << format_number(r.probabilities.p_mu) << ',' << format_number(r.probabilities.p_tau) << ','
        << format_number(r.ggm) << ',' << format_number(r.three_pi) << ','
        << format_number(r.gmc) << ',' << format_number(r.fill) << ','
        << format_number(r.triangle.edge_a) << ',' << format_number(r.triangle.edge_b) << ','
        << format_number(r.triangle.edge_c);
    if (both) {
      const MeasureReport& g = *row.secondary;
      out << ',' << format_number(g.ggm) << ',' << format_number(g.three_pi) << ','
          << format_number(g.gmc) << ',' << format_number(g.fill) << ','
          << format_number(row.path_discrepancy);
    }
    if (slopes) {
      for (Measure m : kMeasures) out << ',' << format_number(slope(result.rows, i, m));
    }
    out << '\n';
  }
  if (!out) throw IoError("failed while writing CSV output");
}

std::string format_summary(const SweepSummary& s) {
  std::ostringstream out;
  out << "rows: " << s.rows << '\n';
  if (s.max_path_discrepancy) {
    out << "max |closed-form - generic|: " << format_number(*s.max_path_discrepancy) << '\n';
  }
  out << "grid-local minima (ggm three_pi gmc fill): " << s.local_minima[0] << ' '
      << s.local_minima[1] << ' ' << s.local_minima[2] << ' ' << s.local_minima[3] << '\n';
  out << "grid-local maxima (ggm three_pi gmc fill): " << s.local_maxima[0] << ' '
      << s.local_maxima[1] << ' ' << s.local_maxima[2] << ' ' << s.local_maxima[3] << '\n';
  out << "non-analytic switches: ggm " << s.ggm_kinks << ", gmc " << s.gmc_kinks << '\n';
  out << "min (fill - gmc): " << format_number(s.min_fill_minus_gmc) << " at L/E "
      << format_number(s.le_at_min_fill_minus_gmc) << " km/GeV\n";
  out << "max |sum(p) - 1|: " << format_number(s.max_probability_sum_error) << '\n';
  return out.str();
}

}  // namespace nuent
