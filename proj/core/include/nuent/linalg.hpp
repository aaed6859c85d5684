#pragma once

// Small dense complex linear algebra for matrices of dimension 2, 3, 4 or 8.
//
// Qubit ordering: qubit A is the most significant bit of a 3-bit basis index,
// so |100> is index 4, |010> is index 2 and |001> is index 1.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace nuent {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  ComplexMatrix() : ComplexMatrix(2) {}
  /// Zero matrix; throws std::invalid_argument unless dim is 2, 3, 4 or 8.
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major initialisation; the number of rows fixes the dimension.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * kMaxDim + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const {
    return data_[row * kMaxDim + col];
  }

  cplx trace() const;
  ComplexMatrix adjoint() const;
  /// max |m(i,j) - conj(m(j,i))| over all entries.
  double max_asymmetry() const;
  bool is_hermitian(double tol = 1e-12) const { return max_asymmetry() <= tol; }

  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  friend ComplexMatrix operator+(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
  friend ComplexMatrix operator*(cplx scale, const ComplexMatrix& m);
  friend bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::array<cplx, kMaxDim * kMaxDim> data_{};
};

/// Largest |lhs(i,j) - rhs(i,j)|; dimensions must match.
double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Tr(m * m), computed without forming the product.
cplx trace_of_square(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix in ascending order (cyclic complex Jacobi).
///
/// Throws std::invalid_argument naming the largest asymmetry when m is not
/// Hermitian to within `hermitian_tol`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol = 1e-12);

enum class Qubit { A = 0, B = 1, C = 2 };

/// A subset of the three qubits {A, B, C}.
class QubitSet {
 public:
  constexpr QubitSet() = default;
  constexpr QubitSet(std::initializer_list<Qubit> qubits) {
    for (Qubit q : qubits) bits_ |= mask(q);
  }

  constexpr bool contains(Qubit q) const { return (bits_ & mask(q)) != 0; }
  constexpr int size() const { return ((bits_ >> 2) & 1) + ((bits_ >> 1) & 1) + (bits_ & 1); }
  constexpr QubitSet complement() const {
    QubitSet out;
    out.bits_ = static_cast<unsigned>(~bits_ & 0b111u);
    return out;
  }
  friend constexpr bool operator==(QubitSet, QubitSet) = default;

 private:
  // Bit position of a qubit inside a 3-qubit basis index.
  static constexpr unsigned mask(Qubit q) { return 1u << (2 - static_cast<int>(q)); }
  unsigned bits_ = 0;
};

/// Reduced density matrix of an 8x8 three-qubit state, keeping one or two qubits.
///
/// Kept qubits retain their relative order (A before B before C) in the reduced
/// index. Throws std::invalid_argument when `keep` is empty or all three qubits,
/// or when rho is not 8x8.
ComplexMatrix partial_trace(const ComplexMatrix& rho, QubitSet keep);

enum class PairQubit { first = 0, second = 1 };

/// Partial transpose of a two-qubit (4x4) operator on one of its qubits.
/// A pure index permutation, so it is exactly involutive.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, PairQubit on);

}  // namespace nuent
