#include <sstream>

#include "json.hpp"
#include "nuent/sweep.hpp"

namespace nuent {

TriangleRecord triangle_report(const OscillationParams& params, Flavor initial, double le) {
  const MeasureReport r = report(params, initial, le, EvalPath::closed_form);
  TriangleRecord t;
  t.initial = initial;
  t.le = le;
  t.probabilities = r.probabilities;
  t.triangle = r.triangle;
  t.sqrt_area = r.fill;
  t.shortest_edge = r.gmc;
  t.fill_minus_gmc = r.fill - r.gmc;
  return t;
}

std::string format_triangle(const TriangleRecord& t) {
  std::ostringstream out;
  out << "concurrence triangle: initial " << flavor_name(t.initial) << ", L/E = "
      << format_number(t.le) << " km/GeV\n"
      << "  probabilities   p_e = " << format_number(t.probabilities.p_e)
      << ", p_mu = " << format_number(t.probabilities.p_mu)
      << ", p_tau = " << format_number(t.probabilities.p_tau) << '\n'
      << "  edges           a = " << format_number(t.triangle.edge_a)
      << ", b = " << format_number(t.triangle.edge_b)
      << ", c = " << format_number(t.triangle.edge_c) << '\n'
      << "  half-perimeter  " << format_number(t.triangle.half_perimeter) << '\n'
      << "  sqrt(area)      " << format_number(t.sqrt_area) << "  (concurrence fill)\n"
      << "  shortest edge   " << format_number(t.shortest_edge) << "  (GMC)\n"
      << "  fill - gmc      " << format_number(t.fill_minus_gmc) << '\n';
  return out.str();
}

std::string triangle_json(const TriangleRecord& t) {
  nlohmann::ordered_json j;
  j["initial"] = flavor_name(t.initial);
  j["le_km_per_GeV"] = t.le;
  j["probabilities"] = {t.probabilities.p_e, t.probabilities.p_mu, t.probabilities.p_tau};
  j["edges"] = {t.triangle.edge_a, t.triangle.edge_b, t.triangle.edge_c};
  j["half_perimeter"] = t.triangle.half_perimeter;
  j["sqrt_area"] = t.sqrt_area;
  j["shortest_edge"] = t.shortest_edge;
  j["fill_minus_gmc"] = t.fill_minus_gmc;
  return j.dump();
}

}  // namespace nuent
