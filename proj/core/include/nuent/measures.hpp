#pragma once

// Genuine tripartite entanglement measures of a three-qubit pure state:
// generalized geometric measure (GGM), three-pi, genuinely multipartite
// concurrence (GMC) and concurrence fill.
//
// Two evaluation routes are provided. The generic route works on the 8x8
// density matrix (reductions, partial transposes, Jacobi eigensolves) and
// accepts any complex amplitudes. The closed-form route takes only the three
// occupation probabilities of a W-class state. Both must agree to 1e-10.
//
// Conventions:
//  * Triangle edges are squared one-to-other concurrences, 2[1 - Tr rho_X^2].
//  * GMC is the shortest edge, with no final square root.
//  * Negativity is ||rho^T||_1 - 1, i.e. twice the sum of |negative eigenvalues|
//    of the partial transpose. This is the normalisation under which
//    N_{X(YZ)} equals the one-to-other concurrence for pure states; see
//    docs/negativity.md.

#include <string_view>

#include "nuent/linalg.hpp"
#include "nuent/oscillation.hpp"
#include "nuent/tristate.hpp"

namespace nuent {

/// Edge lengths of the concurrence triangle plus its half-perimeter.
struct ConcurrenceTriangle {
  double edge_a = 0.0;  // C^2_{A(BC)}
  double edge_b = 0.0;  // C^2_{B(AC)}
  double edge_c = 0.0;  // C^2_{C(AB)}
  double half_perimeter = 0.0;

  static ConcurrenceTriangle from_edges(double a, double b, double c);

  double shortest() const;
  /// Q (Q - a)(Q - b)(Q - c) with each (Q - edge) factor clamped at 0.
  double heron_product() const;
  /// max(edge - sum of the other two); <= 1e-10 for a genuine triangle.
  double inequality_excess() const;
};

enum class EvalPath { closed_form, generic };

EvalPath parse_eval_path(std::string_view text);
std::string_view eval_path_name(EvalPath p);

enum class Measure { ggm, three_pi, gmc, fill };

Measure parse_measure(std::string_view text);
std::string_view measure_name(Measure m);

struct MeasureReport {
  double le = 0.0;  // km/GeV
  ProbabilityTriple probabilities;
  double ggm = 0.0;
  double three_pi = 0.0;
  double gmc = 0.0;
  double fill = 0.0;
  ConcurrenceTriangle triangle;
  EvalPath path = EvalPath::closed_form;

  double value(Measure m) const;
};

// Generic route -------------------------------------------------------------

ConcurrenceTriangle one_to_other_concurrences(const TripartiteState& state);
/// 1 - max over the three one-vs-rest bipartitions of the largest Schmidt weight.
double ggm(const TripartiteState& state);
/// Throws std::invalid_argument if rho has an eigenvalue below -1e-10.
double negativity(const ComplexMatrix& rho, PairQubit on);
double three_pi(const TripartiteState& state);
double gmc(const TripartiteState& state);
double concurrence_fill(const TripartiteState& state);

/// [(16/3) Q (Q-a)(Q-b)(Q-c)]^{1/4}; collinear triangles give 0.
double concurrence_fill(const ConcurrenceTriangle& triangle);

/// Residual negativity pi_X for each focus qubit.
struct ResidualEntanglement {
  double pi_a = 0.0;
  double pi_b = 0.0;
  double pi_c = 0.0;
  double average() const { return (pi_a + pi_b + pi_c) / 3.0; }
};
ResidualEntanglement residual_entanglement(const TripartiteState& state);

// Closed-form route for W-class states ----------------------------------------

namespace closed_form {

/// Probabilities below this are treated as exact zeros.
inline constexpr double kZeroProbability = 1e-15;

ConcurrenceTriangle triangle(const ProbabilityTriple& p);
double ggm(const ProbabilityTriple& p);
double three_pi(const ProbabilityTriple& p);
double gmc(const ProbabilityTriple& p);
double fill(const ProbabilityTriple& p);

}  // namespace closed_form

/// Measure values below this magnitude are reported as exactly zero.
inline constexpr double kMeasureZeroSnap = 1e-13;

MeasureReport measures_generic(const TripartiteState& state);
MeasureReport measures_closed_form(const ProbabilityTriple& p);

MeasureReport report(const OscillationParams& params, Flavor initial, double le, EvalPath path);
MeasureReport report(const MixingMatrix& u, const OscillationParams& params, Flavor initial,
                     double le, EvalPath path);

}  // namespace nuent
