#pragma once

// Dense complex linear algebra for small multi-qubit operators.
//
// Bit convention: qubit 1 is the least significant bit of a basis index, so
// the basis state |x_n ... x_1> has index sum_k x_k 2^(k-1). In kron(a, b)
// the factor b occupies the low-order qubits.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace depolqfi::linalg {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 12;

// Dimension cap for dense operators: DEPOLQFI_MAX_DIM if set to a positive
// integer, otherwise 4096.
std::size_t dimension_cap();

// Throws CapacityError when dim exceeds cap.
void require_capacity(std::size_t dim, std::size_t cap = dimension_cap());

// Throws CapacityError unless 2^n fits under cap; returns 2^n.
std::size_t qubit_dimension(int n, std::size_t cap = dimension_cap());

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double>& values);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  const std::vector<Complex>& data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double max_abs() const;
  double hermiticity_error() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_error() <= tol; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// max_{jk} |a_jk - b_jk|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// u * a * u^dagger
ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& u);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
ComplexMatrix hadamard();
}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t cap = dimension_cap());

// Traces out qubit `qubit` (1-based, 1 = least significant) of an n-qubit
// operator.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int qubit, int n);

// Inverse companion of partial_trace: returns I_2 (x) reduced with the
// identity factor placed at position `qubit` of an n-qubit register.
ComplexMatrix insert_identity(const ComplexMatrix& reduced, int qubit, int n);

// Transposes the indices of a single qubit.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int qubit, int n);

// S a S^dagger where S swaps qubits a and b.
ComplexMatrix swap_qubits(const ComplexMatrix& rho, int qubit_a, int qubit_b, int n);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]

  double reconstruction_error(const ComplexMatrix& a) const;
  double orthonormality_error() const;
};

// Eigendecomposition of a Hermitian matrix by Householder reduction to a real
// symmetric tridiagonal matrix followed by implicit QL iteration. Throws
// DomainError for non-Hermitian input and NumericError if QL does not
// converge.
Spectrum hermitian_eig(const ComplexMatrix& a);

}  // namespace depolqfi::linalg
