#pragma once

// Three-flavour vacuum oscillations: PMNS mixing matrix, flavour amplitudes
// and transition probabilities as functions of L/E.
//
// The canonical L/E unit throughout the library is km/GeV.

#include <array>
#include <string>
#include <string_view>

#include "nuent/linalg.hpp"

namespace nuent {

/// 1.27 * dm2[eV^2] * L[km] / E[GeV] is half the relative oscillation phase.
inline constexpr double kPhaseConstant = 1.27;

enum class Flavor { electron = 0, muon = 1, tau = 2 };

/// Accepts "e", "mu", "tau" (and the spelled-out names).
Flavor parse_flavor(std::string_view text);
std::string_view flavor_name(Flavor f);

enum class MassOrdering { normal, custom };

struct OscillationParams {
  // Mixing angles and CP phase in degrees.
  double theta12 = 33.48;
  double theta23 = 42.3;
  double theta13 = 8.50;
  double delta_cp = 0.0;
  // Mass-squared splittings in eV^2 (normal ordering).
  double dm2_21 = 7.50e-5;
  double dm2_31 = 2.457e-3;
  double dm2_32 = 2.382e-3;
  MassOrdering ordering = MassOrdering::normal;

  /// Throws std::invalid_argument if any angle is non-finite or outside [0, 90).
  void validate() const;
  /// |dm2_31 - (dm2_21 + dm2_32)|; callers warn when this exceeds 1e-9.
  double splitting_mismatch() const;
};

inline constexpr double kSplittingTolerance = 1e-9;

/// Rows indexed by flavour (e, mu, tau), columns by mass state (1, 2, 3).
struct MixingMatrix {
  std::array<std::array<cplx, 3>, 3> u{};

  const cplx& operator()(Flavor f, int mass) const { return u[static_cast<int>(f)][mass]; }
  /// max |(U U^dagger - I)_ij|
  double unitarity_defect() const;
};

MixingMatrix build_pmns(const OscillationParams& params);

struct FlavorAmplitudes {
  Flavor initial = Flavor::electron;
  double le = 0.0;              // km/GeV
  std::array<cplx, 3> amp{};    // indexed by detected flavour (e, mu, tau)

  double norm_squared() const;
};

struct ProbabilityTriple {
  double p_e = 0.0;
  double p_mu = 0.0;
  double p_tau = 0.0;

  double operator[](int i) const { return i == 0 ? p_e : (i == 1 ? p_mu : p_tau); }
  double sum() const { return p_e + p_mu + p_tau; }
};

/// a_beta = sum_k U_{alpha k} exp(-i phi_k) conj(U_{beta k}), phi_k = 2*1.27*dm2_k1*le.
/// Throws std::invalid_argument for negative or non-finite le.
FlavorAmplitudes amplitudes(const OscillationParams& params, Flavor initial, double le);
FlavorAmplitudes amplitudes(const MixingMatrix& u, const OscillationParams& params, Flavor initial,
                            double le);

/// Transition probabilities from the sin^2 / sin interference expansion, using
/// all three splittings. Each entry is clamped to [0, 1].
ProbabilityTriple probabilities(const OscillationParams& params, Flavor initial, double le);
ProbabilityTriple probabilities(const MixingMatrix& u, const OscillationParams& params,
                                Flavor initial, double le);

/// |a_beta|^2 for each detected flavour.
ProbabilityTriple probabilities_from_amplitudes(const FlavorAmplitudes& a);

}  // namespace nuent
