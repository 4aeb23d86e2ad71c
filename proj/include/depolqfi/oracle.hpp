#pragma once

// Dense density-matrix reference for the correlated protocol: explicit state
// preparation circuit, channel in affine form, exact lambda-derivative by the
// product rule, and QFI from the spectral decomposition.

#include <vector>

#include "depolqfi/linalg.hpp"
#include "depolqfi/params.hpp"

namespace depolqfi::oracle {

// (I + r sigma_y)/2 on every qubit.
linalg::ComplexMatrix initial_product_state(int n, double r,
                                            std::size_t cap = linalg::dimension_cap());

// U rho U^dagger with U = H^(x)n . prod_{i<j} CZ_ij.
linalg::ComplexMatrix apply_uprep(const linalg::ComplexMatrix& rho, int n);

// lambda rho + (1 - lambda) I/2 (x) Tr_qubit rho
linalg::ComplexMatrix apply_depolarizing(const linalg::ComplexMatrix& rho, int qubit,
                                         double lambda, int n);

// Channel on qubits 1..m.
linalg::ComplexMatrix channel_output(const linalg::ComplexMatrix& rho_i, int m, double lambda,
                                     int n);

// d/dlambda of channel_output.
linalg::ComplexMatrix channel_derivative(const linalg::ComplexMatrix& rho_i, int m,
                                         double lambda, int n);

inline constexpr double kSpectralFloor = 1e-12;
inline constexpr double kSpectralElementFloor = 1e-9;

// sum_{j,k} 2 |<j|drho|k>|^2 / (p_j + p_k). Pairs with p_j + p_k below
// kSpectralFloor are skipped when the element is below kSpectralElementFloor
// and make the result +infinity otherwise.
double spectral_qfi(const linalg::ComplexMatrix& rho, const linalg::ComplexMatrix& drho);

struct VerificationReport {
  ProtocolParams params;
  double closed_form_qfi = 0.0;
  double oracle_qfi = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double max_state_entry_err = 0.0;
  double symmetry_err = 0.0;
  bool pass = false;
};

// Full correlated-protocol pipeline against the closed forms.
VerificationReport verify(const ProtocolParams& params, double tolerance = 1e-8,
                          double state_tolerance = 1e-12);

struct VerificationGrid {
  int max_n = 6;
  std::vector<double> r_values{0.0, 0.1, 0.5, 0.9, 1.0};
  std::vector<double> lambda_values{0.0, 0.3, 0.7, 0.99};
};

// Every 1 <= m <= n <= max_n over the grid.
std::vector<ProtocolParams> grid_points(const VerificationGrid& grid);

std::vector<VerificationReport> verify_grid(const VerificationGrid& grid, double tolerance = 1e-8,
                                            double state_tolerance = 1e-12);

}  // namespace depolqfi::oracle
