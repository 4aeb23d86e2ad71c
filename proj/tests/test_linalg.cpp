#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "depolqfi/errors.hpp"
#include "depolqfi/linalg.hpp"
#include "support.hpp"

using namespace depolqfi;
using namespace depolqfi::linalg;
using testing_support::random_density;
using testing_support::random_hermitian;

TEST(ComplexMatrix, AdjointTraceAndProducts) {
  const ComplexMatrix a{{1.0, Complex(0, 2)}, {3.0, Complex(4, -1)}};
  EXPECT_EQ(a.adjoint()(0, 1), Complex(3.0, 0.0));
  EXPECT_EQ(a.adjoint()(1, 0), Complex(0.0, -2.0));
  EXPECT_EQ(a.trace(), Complex(5.0, -1.0));
  const ComplexMatrix id = ComplexMatrix::identity(2);
  EXPECT_EQ(max_abs_diff(a * id, a), 0.0);
  EXPECT_EQ(max_abs_diff(pauli::x() * pauli::x(), id), 0.0);
  EXPECT_LT(max_abs_diff(pauli::x() * pauli::y(), Complex(0, 1) * pauli::z()), 1e-15);
}

TEST(HermitianEig, KnownSpectra) {
  auto s = hermitian_eig(pauli::y());
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-14);

  s = hermitian_eig(ComplexMatrix::diagonal({3.0, -1.0, 2.0, 0.5}));
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 0.5, 1e-14);
  EXPECT_NEAR(s.eigenvalues[2], 2.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues[3], 3.0, 1e-14);

  const ComplexMatrix id = ComplexMatrix::identity(8);
  s = hermitian_eig(id);
  for (double e : s.eigenvalues) EXPECT_NEAR(e, 1.0, 1e-14);
  EXPECT_LT(s.orthonormality_error(), 1e-13);
}

TEST(HermitianEig, RandomReconstruction) {
  std::mt19937_64 rng(7);
  for (std::size_t dim : {1u, 2u, 3u, 5u, 16u, 33u, 64u}) {
    const ComplexMatrix a = random_hermitian(dim, rng);
    const auto s = hermitian_eig(a);
    EXPECT_LT(s.reconstruction_error(a), 1e-11 * dim) << dim;
    EXPECT_LT(s.orthonormality_error(), 1e-12 * dim) << dim;
    for (std::size_t k = 1; k < dim; ++k) EXPECT_LE(s.eigenvalues[k - 1], s.eigenvalues[k]);
  }
}

TEST(HermitianEig, DegenerateBlocks) {
  ComplexMatrix a = ComplexMatrix::diagonal({1.0, 1.0, 2.0, 2.0});
  const ComplexMatrix h = kron(pauli::hadamard(), pauli::hadamard());
  a = conjugate(a, h);
  const auto s = hermitian_eig(a);
  EXPECT_NEAR(s.eigenvalues[0], 1.0, 1e-13);
  EXPECT_NEAR(s.eigenvalues[3], 2.0, 1e-13);
  EXPECT_LT(s.reconstruction_error(a), 1e-13);
}

TEST(HermitianEig, RejectsNonHermitian) {
  const ComplexMatrix a{{1.0, 2.0}, {0.0, 1.0}};
  EXPECT_THROW(hermitian_eig(a), DomainError);
}

TEST(QubitOps, KronOrderingPutsSecondFactorLow) {
  // |1> on qubit 1, |0> on qubit 2 -> index 1
  const ComplexMatrix one = ComplexMatrix::diagonal({0.0, 1.0});
  const ComplexMatrix zero = ComplexMatrix::diagonal({1.0, 0.0});
  const ComplexMatrix rho = kron(zero, one);
  EXPECT_EQ(rho(1, 1), Complex(1.0));
  EXPECT_EQ(rho(2, 2), Complex(0.0));
}

TEST(QubitOps, PartialTraceOfProduct) {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = random_density(2, rng);
  const ComplexMatrix b = random_density(4, rng);
  const ComplexMatrix ab = kron(a, b);  // b on qubits 1-2, a on qubit 3
  EXPECT_LT(max_abs_diff(partial_trace(ab, 3, 3), b), 1e-14);
  const ComplexMatrix low = partial_trace(partial_trace(ab, 1, 3), 1, 2);
  EXPECT_LT(max_abs_diff(low, a), 1e-14);
  EXPECT_NEAR(partial_trace(ab, 2, 3).trace().real(), 1.0, 1e-14);
}

TEST(QubitOps, InsertIdentityMatchesKron) {
  std::mt19937_64 rng(3);
  const ComplexMatrix x = random_hermitian(4, rng);
  EXPECT_LT(max_abs_diff(insert_identity(x, 1, 3), kron(x, pauli::identity())), 1e-15);
  EXPECT_LT(max_abs_diff(insert_identity(x, 3, 3), kron(pauli::identity(), x)), 1e-15);
  // partial trace undoes insertion up to the factor Tr I = 2
  EXPECT_LT(max_abs_diff(partial_trace(insert_identity(x, 2, 3), 2, 3), 2.0 * x), 1e-14);
}

TEST(QubitOps, PartialTransposeAndSwap) {
  std::mt19937_64 rng(5);
  const ComplexMatrix a = random_density(2, rng);
  const ComplexMatrix b = random_density(2, rng);
  const ComplexMatrix rho = random_density(8, rng);
  EXPECT_LT(max_abs_diff(partial_transpose(partial_transpose(rho, 2, 3), 2, 3), rho), 1e-15);
  EXPECT_LT(max_abs_diff(partial_transpose(kron(a, b), 1, 2), kron(a, b.transpose())), 1e-15);
  EXPECT_LT(max_abs_diff(swap_qubits(kron(a, b), 1, 2, 2), kron(b, a)), 1e-15);
  EXPECT_LT(max_abs_diff(swap_qubits(swap_qubits(rho, 1, 3, 3), 1, 3, 3), rho), 1e-15);
}

TEST(Capacity, DefaultCapAndOverride) {
  unsetenv("DEPOLQFI_MAX_DIM");
  EXPECT_EQ(dimension_cap(), kDefaultDimensionCap);
  EXPECT_EQ(qubit_dimension(12), 4096u);
  EXPECT_THROW(qubit_dimension(13), CapacityError);
  setenv("DEPOLQFI_MAX_DIM", "8192", 1);
  EXPECT_EQ(qubit_dimension(13), 8192u);
  unsetenv("DEPOLQFI_MAX_DIM");
  EXPECT_THROW(kron(ComplexMatrix::identity(64), ComplexMatrix::identity(128)), CapacityError);
}
