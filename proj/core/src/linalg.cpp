#include "nuent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nuent {

namespace {

constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

void check_dim(std::size_t dim) {
  if (dim != 2 && dim != 3 && dim != 4 && dim != 8) {
    throw std::invalid_argument("ComplexMatrix: unsupported dimension " + std::to_string(dim) +
                                " (expected 2, 3, 4 or 8)");
  }
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i != j) sum += std::norm(m(i, j));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The unitary is V = D * R where
// D rotates the phase of a(p,q) onto the real axis and R is a real Givens
// rotation, so a <- V^H a V touches only rows and columns p and q.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const cplx phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx vpp = c;
  const cplx vpq = s;
  const cplx vqp = -s * std::conj(phase);
  const cplx vqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * vpp + akq * vqp;
    a(k, q) = akp * vpq + akq * vqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
    std::size_t j = 0;
    for (const cplx& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  ComplexMatrix m(values.size());
  std::size_t i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  }
  return out;
}

double ComplexMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  ComplexMatrix out(lhs.dim_);
  for (std::size_t i = 0; i < lhs.dim_; ++i) {
    for (std::size_t k = 0; k < lhs.dim_; ++k) {
      const cplx l = lhs(i, k);
      if (l == cplx{}) continue;
      for (std::size_t j = 0; j < lhs.dim_; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  ComplexMatrix out(lhs.dim_);
  for (std::size_t i = 0; i < lhs.dim_; ++i) {
    for (std::size_t j = 0; j < lhs.dim_; ++j) out(i, j) = lhs(i, j) + rhs(i, j);
  }
  return out;
}

ComplexMatrix operator*(cplx scale, const ComplexMatrix& m) {
  ComplexMatrix out(m.dim_);
  for (std::size_t i = 0; i < m.dim_; ++i) {
    for (std::size_t j = 0; j < m.dim_; ++j) out(i, j) = scale * m(i, j);
  }
  return out;
}

bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) return false;
  for (std::size_t i = 0; i < lhs.dim_; ++i) {
    for (std::size_t j = 0; j < lhs.dim_; ++j) {
      if (lhs(i, j) != rhs(i, j)) return false;
    }
  }
  return true;
}

double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.dim(); ++i) {
    for (std::size_t j = 0; j < lhs.dim(); ++j) {
      worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
    }
  }
  return worst;
}

cplx trace_of_square(const ComplexMatrix& m) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) sum += m(i, j) * m(j, i);
  }
  return sum;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
  const double asym = m.max_asymmetry();
  if (asym > hermitian_tol) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: matrix is not Hermitian (max asymmetry " << asym << ")";
    throw std::invalid_argument(msg.str());
  }

  ComplexMatrix a = m;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  int sweep = 0;
  while (off_diagonal_norm(a) >= kOffDiagonalTol) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, QubitSet keep) {
  if (rho.dim() != 8) throw std::invalid_argument("partial_trace: expected an 8x8 matrix");
  if (keep.size() == 0 || keep.size() == 3) {
    throw std::invalid_argument("partial_trace: keep must name one or two qubits");
  }

  std::array<unsigned, 3> kept_bits{};
  std::size_t n_kept = 0;
  unsigned traced_mask = 0;
  for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
    const unsigned bit = 2u - static_cast<unsigned>(q);
    if (keep.contains(q)) {
      kept_bits[n_kept++] = bit;
    } else {
      traced_mask |= 1u << bit;
    }
  }

  auto reduced_index = [&](unsigned full) {
    unsigned r = 0;
    for (std::size_t k = 0; k < n_kept; ++k) r = (r << 1) | ((full >> kept_bits[k]) & 1u);
    return r;
  };

  ComplexMatrix out(std::size_t{1} << n_kept);
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      if ((i & traced_mask) != (j & traced_mask)) continue;
      out(reduced_index(i), reduced_index(j)) += rho(i, j);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, PairQubit on) {
  if (rho.dim() != 4) throw std::invalid_argument("partial_transpose: expected a 4x4 matrix");
  const unsigned bit = on == PairQubit::first ? 2u : 1u;
  ComplexMatrix out(4);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) {
      const unsigned ti = (i & ~bit) | (j & bit);
      const unsigned tj = (j & ~bit) | (i & bit);
      out(ti, tj) = rho(i, j);
    }
  }
  return out;
}

}  // namespace nuent
