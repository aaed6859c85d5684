#include "nuent/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nuent {

namespace {

constexpr double kPsdTolerance = 1e-10;

double finalize(double value, double upper) {
  if (std::abs(value) < kMeasureZeroSnap) return 0.0;
  return std::clamp(value, 0.0, upper);
}

double squared_concurrence(const ComplexMatrix& rho_one) {
  return 2.0 * (1.0 - trace_of_square(rho_one).real());
}

struct Reductions {
  ComplexMatrix a, b, c;
  ComplexMatrix ab, ac, bc;
};

Reductions reductions_of(const TripartiteState& state) {
  const DensityMatrix8 rho = density(state);
  return {reduce(rho, {Qubit::A}),           reduce(rho, {Qubit::B}),
          reduce(rho, {Qubit::C}),           reduce(rho, {Qubit::A, Qubit::B}),
          reduce(rho, {Qubit::A, Qubit::C}), reduce(rho, {Qubit::B, Qubit::C})};
}

ConcurrenceTriangle triangle_of(const Reductions& r) {
  return ConcurrenceTriangle::from_edges(squared_concurrence(r.a), squared_concurrence(r.b),
                                         squared_concurrence(r.c));
}

double ggm_of(const Reductions& r) {
  double largest = 0.0;
  for (const ComplexMatrix* m : {&r.a, &r.b, &r.c}) {
    largest = std::max(largest, hermitian_eigenvalues(*m).back());
  }
  return finalize(1.0 - largest, 0.5);
}

ResidualEntanglement residual_of(const Reductions& r, const ConcurrenceTriangle& t) {
  auto n2 = [](const ComplexMatrix& rho, PairQubit on) {
    const double n = negativity(rho, on);
    return n * n;
  };
  ResidualEntanglement out;
  out.pi_a = t.edge_a - n2(r.ab, PairQubit::first) - n2(r.ac, PairQubit::first);
  out.pi_b = t.edge_b - n2(r.ab, PairQubit::second) - n2(r.bc, PairQubit::first);
  out.pi_c = t.edge_c - n2(r.ac, PairQubit::second) - n2(r.bc, PairQubit::second);
  return out;
}

ProbabilityTriple snap_small(const ProbabilityTriple& p) {
  auto z = [](double x) { return x < closed_form::kZeroProbability ? 0.0 : x; };
  return {z(p.p_e), z(p.p_mu), z(p.p_tau)};
}

}  // namespace

ConcurrenceTriangle ConcurrenceTriangle::from_edges(double a, double b, double c) {
  return {a, b, c, (a + b + c) / 2.0};
}

double ConcurrenceTriangle::shortest() const { return std::min({edge_a, edge_b, edge_c}); }

double ConcurrenceTriangle::heron_product() const {
  const double q = half_perimeter;
  return q * std::max(q - edge_a, 0.0) * std::max(q - edge_b, 0.0) * std::max(q - edge_c, 0.0);
}

double ConcurrenceTriangle::inequality_excess() const {
  return std::max({edge_a - edge_b - edge_c, edge_b - edge_a - edge_c, edge_c - edge_a - edge_b});
}

EvalPath parse_eval_path(std::string_view text) {
  if (text == "closed-form") return EvalPath::closed_form;
  if (text == "generic") return EvalPath::generic;
  throw std::invalid_argument("unknown path '" + std::string(text) +
                              "' (expected closed-form or generic)");
}

std::string_view eval_path_name(EvalPath p) {
  return p == EvalPath::closed_form ? "closed-form" : "generic";
}

Measure parse_measure(std::string_view text) {
  if (text == "ggm") return Measure::ggm;
  if (text == "three_pi" || text == "three-pi") return Measure::three_pi;
  if (text == "gmc") return Measure::gmc;
  if (text == "fill") return Measure::fill;
  throw std::invalid_argument("unknown measure '" + std::string(text) +
                              "' (expected ggm, three_pi, gmc or fill)");
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::ggm: return "ggm";
    case Measure::three_pi: return "three_pi";
    case Measure::gmc: return "gmc";
    case Measure::fill: return "fill";
  }
  return "?";
}

double MeasureReport::value(Measure m) const {
  switch (m) {
    case Measure::ggm: return ggm;
    case Measure::three_pi: return three_pi;
    case Measure::gmc: return gmc;
    case Measure::fill: return fill;
  }
  return 0.0;
}

ConcurrenceTriangle one_to_other_concurrences(const TripartiteState& state) {
  return triangle_of(reductions_of(state));
}

double ggm(const TripartiteState& state) { return ggm_of(reductions_of(state)); }

double negativity(const ComplexMatrix& rho, PairQubit on) {
  const auto spectrum = hermitian_eigenvalues(rho);
  if (spectrum.front() < -kPsdTolerance) {
    std::ostringstream msg;
    msg << "negativity: input is not positive semidefinite (min eigenvalue " << spectrum.front()
        << ")";
    throw std::invalid_argument(msg.str());
  }
  double negative_sum = 0.0;
  for (double v : hermitian_eigenvalues(partial_transpose(rho, on))) {
    if (v < 0.0) negative_sum -= v;
  }
  return 2.0 * negative_sum;
}

ResidualEntanglement residual_entanglement(const TripartiteState& state) {
  const Reductions r = reductions_of(state);
  return residual_of(r, triangle_of(r));
}

double three_pi(const TripartiteState& state) {
  return finalize(residual_entanglement(state).average(), 1.0);
}

double gmc(const TripartiteState& state) {
  return finalize(one_to_other_concurrences(state).shortest(), 1.0);
}

double concurrence_fill(const ConcurrenceTriangle& triangle) {
  return finalize(std::pow(16.0 / 3.0 * triangle.heron_product(), 0.25), 1.0);
}

double concurrence_fill(const TripartiteState& state) {
  return concurrence_fill(one_to_other_concurrences(state));
}

namespace closed_form {

ConcurrenceTriangle triangle(const ProbabilityTriple& raw) {
  const ProbabilityTriple p = snap_small(raw);
  return ConcurrenceTriangle::from_edges(4.0 * p.p_e * (p.p_mu + p.p_tau),
                                         4.0 * p.p_mu * (p.p_e + p.p_tau),
                                         4.0 * p.p_tau * (p.p_e + p.p_mu));
}

double ggm(const ProbabilityTriple& raw) {
  const ProbabilityTriple p = snap_small(raw);
  const double lambda_a = std::max(p.p_tau + p.p_mu, p.p_e);
  const double lambda_b = std::max(p.p_e + p.p_tau, p.p_mu);
  const double lambda_c = std::max(p.p_e + p.p_mu, p.p_tau);
  return finalize(1.0 - std::max({lambda_a, lambda_b, lambda_c}), 0.5);
}

double three_pi(const ProbabilityTriple& raw) {
  const ProbabilityTriple p = snap_small(raw);
  const double e = p.p_e, m = p.p_mu, t = p.p_tau;
  const double value = 4.0 / 3.0 *
                       (-e * e - m * m - t * t + e * std::sqrt(e * e + 4.0 * m * t) +
                        m * std::sqrt(m * m + 4.0 * e * t) + t * std::sqrt(t * t + 4.0 * e * m));
  return finalize(value, 1.0);
}

double gmc(const ProbabilityTriple& p) { return finalize(triangle(p).shortest(), 1.0); }

double fill(const ProbabilityTriple& raw) {
  const ProbabilityTriple p = snap_small(raw);
  const double e = p.p_e, m = p.p_mu, t = p.p_tau;
  const double inner = e * e * m * m * t * t * (t * m + e * (m + t)) / 3.0;
  return finalize(8.0 * std::pow(std::max(inner, 0.0), 0.25), 1.0);
}

}  // namespace closed_form

MeasureReport measures_generic(const TripartiteState& state) {
  const Reductions r = reductions_of(state);
  MeasureReport out;
  out.path = EvalPath::generic;
  out.probabilities = state.occupations();
  out.triangle = triangle_of(r);
  out.ggm = ggm_of(r);
  out.three_pi = finalize(residual_of(r, out.triangle).average(), 1.0);
  out.gmc = finalize(out.triangle.shortest(), 1.0);
  out.fill = concurrence_fill(out.triangle);
  return out;
}

MeasureReport measures_closed_form(const ProbabilityTriple& p) {
  MeasureReport out;
  out.path = EvalPath::closed_form;
  out.probabilities = p;
  out.triangle = closed_form::triangle(p);
  out.ggm = closed_form::ggm(p);
  out.three_pi = closed_form::three_pi(p);
  out.gmc = closed_form::gmc(p);
  out.fill = closed_form::fill(p);
  return out;
}

MeasureReport report(const OscillationParams& params, Flavor initial, double le, EvalPath path) {
  return report(build_pmns(params), params, initial, le, path);
}

MeasureReport report(const MixingMatrix& u, const OscillationParams& params, Flavor initial,
                     double le, EvalPath path) {
  // The closed-form route reads the interference expansion; the generic route
  // carries |amplitude|^2 from the state it was built from.
  MeasureReport out = path == EvalPath::closed_form
                          ? measures_closed_form(probabilities(u, params, initial, le))
                          : measures_generic(make_state(amplitudes(u, params, initial, le)));
  out.le = le;
  return out;
}

}  // namespace nuent
