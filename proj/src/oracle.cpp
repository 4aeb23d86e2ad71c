#include "depolqfi/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "depolqfi/correlated.hpp"
#include "depolqfi/errors.hpp"

namespace depolqfi::oracle {

using linalg::Complex;
using linalg::ComplexMatrix;

namespace {

void require_register(const ComplexMatrix& rho, int n) {
  if (n < 1 || n > 30 || rho.dim() != (std::size_t{1} << n)) {
    throw DomainError("operator dimension does not match a " + std::to_string(n) + "-qubit register");
  }
}

void require_qubit(int qubit, int n) {
  if (qubit < 1 || qubit > n) {
    throw DomainError("qubit " + std::to_string(qubit) + " outside 1.." + std::to_string(n));
  }
}

// Tr_q rho placed back as I/2 (x) Tr_q rho
ComplexMatrix depolarized_part(const ComplexMatrix& rho, int qubit, int n) {
  return 0.5 * linalg::insert_identity(linalg::partial_trace(rho, qubit, n), qubit, n);
}

// Hadamard on one qubit acting from both sides.
void hadamard_conjugate(ComplexMatrix& rho, int qubit) {
  const std::size_t dim = rho.dim();
  const std::size_t bit = std::size_t{1} << (qubit - 1);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t col = 0; col < dim; ++col) {
      if (col & bit) continue;
      const Complex a = rho(row, col);
      const Complex b = rho(row, col | bit);
      rho(row, col) = s * (a + b);
      rho(row, col | bit) = s * (a - b);
    }
  for (std::size_t row = 0; row < dim; ++row) {
    if (row & bit) continue;
    for (std::size_t col = 0; col < dim; ++col) {
      const Complex a = rho(row, col);
      const Complex b = rho(row | bit, col);
      rho(row, col) = s * (a + b);
      rho(row | bit, col) = s * (a - b);
    }
  }
}

double cz_phase(std::size_t x) {
  const auto w = static_cast<std::size_t>(std::popcount(x));
  return (w * (w - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
}

double symmetry_error(const ComplexMatrix& rho, int n, int m) {
  double err = 0.0;
  for (int a = 1; a < n; ++a) {
    if (a == m) continue;  // do not mix channel and spectator qubits
    err = std::max(err, linalg::max_abs_diff(linalg::swap_qubits(rho, a, a + 1, n), rho));
  }
  return err;
}

}  // namespace

ComplexMatrix initial_product_state(int n, double r, std::size_t cap) {
  require_polarization(r);
  linalg::qubit_dimension(n, cap);
  const ComplexMatrix single =
      0.5 * (linalg::pauli::identity() + Complex(r) * linalg::pauli::y());
  ComplexMatrix rho = single;
  for (int k = 1; k < n; ++k) rho = linalg::kron(single, rho, cap);
  return rho;
}

ComplexMatrix apply_uprep(const ComplexMatrix& rho, int n) {
  require_register(rho, n);
  ComplexMatrix out = rho;
  const std::size_t dim = out.dim();
  for (std::size_t row = 0; row < dim; ++row) {
    const double pr = cz_phase(row);
    for (std::size_t col = 0; col < dim; ++col) out(row, col) *= pr * cz_phase(col);
  }
  for (int q = 1; q <= n; ++q) hadamard_conjugate(out, q);
  return out;
}

ComplexMatrix apply_depolarizing(const ComplexMatrix& rho, int qubit, double lambda, int n) {
  require_register(rho, n);
  require_qubit(qubit, n);
  require_closed_lambda(lambda);
  return Complex(lambda) * rho + Complex(1.0 - lambda) * depolarized_part(rho, qubit, n);
}

ComplexMatrix channel_output(const ComplexMatrix& rho_i, int m, double lambda, int n) {
  require_invocations(m);
  if (m > n) throw DomainError("channel_output: m = " + std::to_string(m) + " violates m <= n");
  ComplexMatrix rho = rho_i;
  for (int k = 1; k <= m; ++k) rho = apply_depolarizing(rho, k, lambda, n);
  return rho;
}

ComplexMatrix channel_derivative(const ComplexMatrix& rho_i, int m, double lambda, int n) {
  require_invocations(m);
  if (m > n) throw DomainError("channel_derivative: m = " + std::to_string(m) + " violates m <= n");
  require_register(rho_i, n);
  require_closed_lambda(lambda);
  ComplexMatrix state = rho_i;
  ComplexMatrix deriv(rho_i.dim());
  for (int k = 1; k <= m; ++k) {
    deriv = apply_depolarizing(deriv, k, lambda, n) + (state - depolarized_part(state, k, n));
    state = apply_depolarizing(state, k, lambda, n);
  }
  return deriv;
}

double spectral_qfi(const ComplexMatrix& rho, const ComplexMatrix& drho) {
  if (rho.dim() != drho.dim()) throw DomainError("spectral_qfi: inconsistent dimensions");
  const auto spec = linalg::hermitian_eig(rho);
  const ComplexMatrix& v = spec.eigenvectors;
  const ComplexMatrix elems = v.adjoint() * drho * v;
  const std::size_t dim = rho.dim();
  double total = 0.0;
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      const double denom = spec.eigenvalues[j] + spec.eigenvalues[k];
      const double mag = std::abs(elems(j, k));
      if (denom < kSpectralFloor) {
        if (mag < kSpectralElementFloor) continue;
        return std::numeric_limits<double>::infinity();
      }
      total += 2.0 * mag * mag / denom;
    }
  return total;
}

VerificationReport verify(const ProtocolParams& params, double tolerance, double state_tolerance) {
  params.require_correlated();
  const int n = params.n;
  const int m = params.m;
  linalg::qubit_dimension(n);

  const ComplexMatrix rho_i = apply_uprep(initial_product_state(n, params.r), n);
  const ComplexMatrix rho_f = channel_output(rho_i, m, params.lambda, n);
  const ComplexMatrix drho = channel_derivative(rho_i, m, params.lambda, n);

  VerificationReport out;
  out.params = params;
  out.oracle_qfi = spectral_qfi(rho_f, drho);
  out.closed_form_qfi = correlated::correlated_qfi(params).value;

  const bool inf_closed = std::isinf(out.closed_form_qfi);
  const bool inf_oracle = std::isinf(out.oracle_qfi);
  if (inf_closed && inf_oracle) {
    out.abs_err = 0.0;
    out.rel_err = 0.0;
  } else if (inf_closed || inf_oracle) {
    out.abs_err = std::numeric_limits<double>::infinity();
    out.rel_err = std::numeric_limits<double>::infinity();
  } else {
    out.abs_err = std::abs(out.closed_form_qfi - out.oracle_qfi);
    const double scale =
        std::max({std::abs(out.closed_form_qfi), std::abs(out.oracle_qfi), 1e-12});
    out.rel_err = out.abs_err / scale;
  }

  const ComplexMatrix blocks = correlated::final_state(params).to_dense();
  out.max_state_entry_err = linalg::max_abs_diff(blocks, rho_f);
  out.symmetry_err = symmetry_error(rho_f, n, m);
  out.pass = out.rel_err <= tolerance && out.max_state_entry_err <= state_tolerance;
  return out;
}

std::vector<ProtocolParams> grid_points(const VerificationGrid& grid) {
  std::vector<ProtocolParams> points;
  for (int n = 1; n <= grid.max_n; ++n)
    for (int m = 1; m <= n; ++m)
      for (const double r : grid.r_values)
        for (const double lambda : grid.lambda_values)
          points.push_back(ProtocolParams::make(n, m, r, lambda));
  return points;
}

std::vector<VerificationReport> verify_grid(const VerificationGrid& grid, double tolerance,
                                            double state_tolerance) {
  if (grid.max_n >= 1) linalg::qubit_dimension(grid.max_n);
  std::vector<VerificationReport> reports;
  for (const auto& p : grid_points(grid)) reports.push_back(verify(p, tolerance, state_tolerance));
  return reports;
}

}  // namespace depolqfi::oracle
