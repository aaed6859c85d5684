#pragma once

// Occupation-number encoding of a flavour state as a three-qubit pure state:
//   |nu_e> = |100>,  |nu_mu> = |010>,  |nu_tau> = |001>
// so qubits A, B, C carry the e, mu, tau occupation respectively.

#include <array>

#include "nuent/linalg.hpp"
#include "nuent/oscillation.hpp"

namespace nuent {

/// Basis index (0..7) of the single-excitation state for qubit q.
constexpr unsigned excitation_index(Qubit q) { return 1u << (2 - static_cast<int>(q)); }

class TripartiteState {
 public:
  /// Throws std::invalid_argument if |a_e|^2 + |a_mu|^2 + |a_tau|^2 differs from 1 by more than 1e-10.
  explicit TripartiteState(const std::array<cplx, 3>& amps);

  const std::array<cplx, 3>& amps() const { return amps_; }
  /// Full 8-component state vector; zero outside indices 4, 2, 1.
  std::array<cplx, 8> vector() const;
  /// Excitation probability of each qubit, |a_X|^2.
  ProbabilityTriple occupations() const;

 private:
  std::array<cplx, 3> amps_;
};

inline constexpr double kNormTolerance = 1e-10;

TripartiteState make_state(const FlavorAmplitudes& a);

/// |psi><psi| as an 8x8 matrix.
class DensityMatrix8 {
 public:
  explicit DensityMatrix8(const ComplexMatrix& rho);
  const ComplexMatrix& matrix() const { return rho_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

 private:
  ComplexMatrix rho_;
};

DensityMatrix8 density(const TripartiteState& state);

ComplexMatrix reduce(const DensityMatrix8& rho, QubitSet keep);

}  // namespace nuent
