#include "nuent/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nuent {

namespace {

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

void check_angle(const char* name, double deg) {
  if (!std::isfinite(deg) || deg < 0.0 || deg >= 90.0) {
    throw std::invalid_argument(std::string("oscillation params: ") + name + " = " +
                                std::to_string(deg) + " deg is outside [0, 90)");
  }
}

void check_le(double le) {
  if (!std::isfinite(le) || le < 0.0) {
    throw std::invalid_argument("L/E must be finite and non-negative, got " + std::to_string(le));
  }
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

Flavor parse_flavor(std::string_view text) {
  if (text == "e" || text == "electron") return Flavor::electron;
  if (text == "mu" || text == "muon") return Flavor::muon;
  if (text == "tau") return Flavor::tau;
  throw std::invalid_argument("unknown flavour '" + std::string(text) + "' (expected e, mu or tau)");
}

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::electron: return "e";
    case Flavor::muon: return "mu";
    case Flavor::tau: return "tau";
  }
  return "?";
}

void OscillationParams::validate() const {
  check_angle("theta12", theta12);
  check_angle("theta23", theta23);
  check_angle("theta13", theta13);
  if (!std::isfinite(delta_cp)) throw std::invalid_argument("oscillation params: delta_cp is not finite");
  for (double dm2 : {dm2_21, dm2_31, dm2_32}) {
    if (!std::isfinite(dm2)) throw std::invalid_argument("oscillation params: non-finite splitting");
  }
}

double OscillationParams::splitting_mismatch() const { return std::abs(dm2_31 - (dm2_21 + dm2_32)); }

double MixingMatrix::unitarity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += u[i][k] * std::conj(u[j][k]);
      worst = std::max(worst, std::abs(sum - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

MixingMatrix build_pmns(const OscillationParams& params) {
  params.validate();
  const double t12 = deg_to_rad(params.theta12);
  const double t23 = deg_to_rad(params.theta23);
  const double t13 = deg_to_rad(params.theta13);
  const double c12 = std::cos(t12), s12 = std::sin(t12);
  const double c23 = std::cos(t23), s23 = std::sin(t23);
  const double c13 = std::cos(t13), s13 = std::sin(t13);
  const cplx e_pos = std::polar(1.0, deg_to_rad(params.delta_cp));
  const cplx e_neg = std::conj(e_pos);

  MixingMatrix m;
  m.u[0] = {c12 * c13, s12 * c13, s13 * e_neg};
  m.u[1] = {-s12 * c23 - c12 * s13 * s23 * e_pos, c12 * c23 - s12 * s13 * s23 * e_pos, c13 * s23};
  m.u[2] = {s12 * s23 - c12 * s13 * c23 * e_pos, -c12 * s23 - s12 * s13 * c23 * e_pos, c13 * c23};
  return m;
}

double FlavorAmplitudes::norm_squared() const {
  return std::norm(amp[0]) + std::norm(amp[1]) + std::norm(amp[2]);
}

FlavorAmplitudes amplitudes(const OscillationParams& params, Flavor initial, double le) {
  return amplitudes(build_pmns(params), params, initial, le);
}

FlavorAmplitudes amplitudes(const MixingMatrix& u, const OscillationParams& params, Flavor initial,
                            double le) {
  check_le(le);
  // Phases relative to mass state 1.
  const std::array<double, 3> dm2_k1{0.0, params.dm2_21, params.dm2_31};
  std::array<cplx, 3> evolve{};
  for (int k = 0; k < 3; ++k) evolve[k] = std::polar(1.0, -2.0 * kPhaseConstant * dm2_k1[k] * le);

  FlavorAmplitudes out;
  out.initial = initial;
  out.le = le;
  const int alpha = static_cast<int>(initial);
  for (int beta = 0; beta < 3; ++beta) {
    cplx sum = 0.0;
    for (int k = 0; k < 3; ++k) sum += u.u[alpha][k] * evolve[k] * std::conj(u.u[beta][k]);
    out.amp[beta] = sum;
  }
  return out;
}

ProbabilityTriple probabilities(const OscillationParams& params, Flavor initial, double le) {
  return probabilities(build_pmns(params), params, initial, le);
}

ProbabilityTriple probabilities(const MixingMatrix& u, const OscillationParams& params,
                                Flavor initial, double le) {
  check_le(le);
  struct Pair {
    int k, l;
    double dm2;
  };
  const std::array<Pair, 3> pairs{{{1, 0, params.dm2_21}, {2, 0, params.dm2_31}, {2, 1, params.dm2_32}}};

  const int alpha = static_cast<int>(initial);
  std::array<double, 3> p{};
  for (int beta = 0; beta < 3; ++beta) {
    double value = alpha == beta ? 1.0 : 0.0;
    for (const Pair& pr : pairs) {
      // Quartic product in the ordering that matches the amplitude convention
      // a_beta = sum_k U_{alpha k} e^{-i phi_k} U*_{beta k}.
      const cplx quartic = u.u[alpha][pr.k] * std::conj(u.u[beta][pr.k]) *
                           std::conj(u.u[alpha][pr.l]) * u.u[beta][pr.l];
      const double half_phase = kPhaseConstant * pr.dm2 * le;
      const double s = std::sin(half_phase);
      value += -4.0 * quartic.real() * s * s + 2.0 * quartic.imag() * std::sin(2.0 * half_phase);
    }
    p[beta] = clamp_probability(value);
  }
  return {p[0], p[1], p[2]};
}

ProbabilityTriple probabilities_from_amplitudes(const FlavorAmplitudes& a) {
  return {clamp_probability(std::norm(a.amp[0])), clamp_probability(std::norm(a.amp[1])),
          clamp_probability(std::norm(a.amp[2]))};
}

}  // namespace nuent
