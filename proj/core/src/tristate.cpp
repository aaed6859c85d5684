#include "nuent/tristate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nuent {

TripartiteState::TripartiteState(const std::array<cplx, 3>& amps) : amps_(amps) {
  const double n = std::norm(amps[0]) + std::norm(amps[1]) + std::norm(amps[2]);
  if (!(std::abs(n - 1.0) <= kNormTolerance)) {
    throw std::invalid_argument("TripartiteState: amplitudes are not normalised (norm^2 = " +
                                std::to_string(n) + ")");
  }
}

std::array<cplx, 8> TripartiteState::vector() const {
  std::array<cplx, 8> v{};
  v[excitation_index(Qubit::A)] = amps_[0];
  v[excitation_index(Qubit::B)] = amps_[1];
  v[excitation_index(Qubit::C)] = amps_[2];
  return v;
}

ProbabilityTriple TripartiteState::occupations() const {
  return {std::min(std::norm(amps_[0]), 1.0), std::min(std::norm(amps_[1]), 1.0),
          std::min(std::norm(amps_[2]), 1.0)};
}

TripartiteState make_state(const FlavorAmplitudes& a) { return TripartiteState(a.amp); }

DensityMatrix8::DensityMatrix8(const ComplexMatrix& rho) : rho_(rho) {
  if (rho.dim() != 8) throw std::invalid_argument("DensityMatrix8: expected an 8x8 matrix");
}

DensityMatrix8 density(const TripartiteState& state) {
  const auto psi = state.vector();
  ComplexMatrix rho(8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix8(rho);
}

ComplexMatrix reduce(const DensityMatrix8& rho, QubitSet keep) {
  return partial_trace(rho.matrix(), keep);
}

}  // namespace nuent
