#pragma once

// Test-only reference computations. Nothing here calls into the eigensolver,
// partial trace or measure code it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "nuent/linalg.hpp"

namespace nuent::oracle {

/// Power sums Tr(m^k), k = 1..dim, by repeated multiplication.
inline std::vector<double> trace_powers(const ComplexMatrix& m) {
  std::vector<double> out;
  ComplexMatrix p = m;
  for (std::size_t k = 1; k <= m.dim(); ++k) {
    out.push_back(p.trace().real());
    p = p * m;
  }
  return out;
}

/// Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula.
inline std::array<double, 2> eig2(const ComplexMatrix& m) {
  const double a = m(0, 0).real(), d = m(1, 1).real();
  const double mid = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
  return {mid - rad, mid + rad};
}

/// Reduced density matrix directly from an 8-component state vector psi[abc],
/// keeping the listed qubits (0 = A, 1 = B, 2 = C) in ascending order.
inline ComplexMatrix reduce_vector(const std::array<cplx, 8>& psi, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  const std::size_t dim = std::size_t{1} << keep.size();
  ComplexMatrix out(dim);
  auto bit = [](int index, int qubit) { return (index >> (2 - qubit)) & 1; };
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      bool traced_match = true;
      for (int q = 0; q < 3; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end() && bit(i, q) != bit(j, q)) {
          traced_match = false;
        }
      }
      if (!traced_match) continue;
      std::size_t r = 0, c = 0;
      for (int q : keep) {
        r = (r << 1) | static_cast<std::size_t>(bit(i, q));
        c = (c << 1) | static_cast<std::size_t>(bit(j, q));
      }
      out(r, c) += psi[i] * std::conj(psi[j]);
    }
  }
  return out;
}

/// Largest overlap |<a|_X psi|^2 over single-qubit states |a> on qubit X,
/// by a Bloch-sphere scan followed by a local grid refinement. For a pure
/// state this is the largest Schmidt weight of the X|rest split.
inline double max_product_overlap(const std::array<cplx, 8>& psi, int qubit) {
  auto overlap = [&](double theta, double phi) {
    const cplx a0 = std::cos(theta / 2);
    const cplx a1 = std::polar(std::sin(theta / 2), phi);
    double total = 0.0;
    for (int rest = 0; rest < 4; ++rest) {
      auto index = [&](int b) {
        std::array<int, 3> bits{};
        std::array<int, 2> others{};
        for (int q = 0, n = 0; q < 3; ++q) {
          if (q != qubit) others[n++] = q;
        }
        bits[qubit] = b;
        bits[others[0]] = (rest >> 1) & 1;
        bits[others[1]] = rest & 1;
        return (bits[0] << 2) | (bits[1] << 1) | bits[2];
      };
      const cplx amp = std::conj(a0) * psi[index(0)] + std::conj(a1) * psi[index(1)];
      total += std::norm(amp);
    }
    return total;
  };
  constexpr double pi = 3.14159265358979323846;
  double best = -1.0, bt = 0.0, bp = 0.0;
  for (int i = 0; i <= 90; ++i) {
    for (int j = 0; j < 180; ++j) {
      const double t = pi * i / 90.0, p = 2.0 * pi * j / 180.0;
      const double v = overlap(t, p);
      if (v > best) best = v, bt = t, bp = p;
    }
  }
  double step = pi / 90.0;
  for (int round = 0; round < 40; ++round) {
    bool improved = false;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        const double v = overlap(bt + di * step, bp + dj * step);
        if (v > best) best = v, bt = bt + di * step, bp = bp + dj * step, improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

/// sqrt(area) of a triangle with the given side lengths, placing vertices in
/// the plane (no Heron formula). Returns 0 for side sets that do not close.
inline double coordinate_area(double a, double b, double c) {
  if (a == 0.0) return 0.0;
  // Vertices (0,0), (a,0), (x,y) with |(x,y)| = c and |(x-a,y)| = b.
  const double x = (a * a + c * c - b * b) / (2.0 * a);
  const double y2 = c * c - x * x;
  if (y2 <= 0.0) return 0.0;
  return 0.5 * a * std::sqrt(y2);
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = u(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = cplx(u(rng), u(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Uniformly random normalised W-class amplitudes with random phases.
inline std::array<cplx, 3> random_w_amplitudes(std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> phase(-3.14159265358979, 3.14159265358979);
  std::array<double, 3> w{e(rng), e(rng), e(rng)};
  const double total = w[0] + w[1] + w[2];
  std::array<cplx, 3> a{};
  for (int i = 0; i < 3; ++i) a[i] = std::polar(std::sqrt(w[i] / total), phase(rng));
  // Renormalise so the norm check in TripartiteState is met to rounding.
  const double n = std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
  for (auto& x : a) x /= n;
  return a;
}

}  // namespace nuent::oracle
