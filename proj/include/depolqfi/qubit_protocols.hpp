#pragma once

// Closed forms for protocols that never correlate qubits: a single qubit with
// one channel use (SQSC), m independent qubits, and m sequential uses on one
// qubit. All take the polarization r in [0, 1] and lambda in [0, 1).

#include "depolqfi/linalg.hpp"
#include "depolqfi/params.hpp"

namespace depolqfi::qubit {

struct BlochVector {
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;

  double magnitude() const;
  // (I + r.sigma) / 2
  linalg::ComplexMatrix state() const;
  // r.sigma
  linalg::ComplexMatrix dot_sigma() const;
};

// r^2 / (1 - lambda^2 r^2)
double sqsc_qfi(double r, double lambda);

enum class SldBranch { alpha_zero, alpha_nonzero };

struct SldComputation {
  double alpha = 0.0;  // Tr(rho^2) - (Tr rho)^2
  linalg::ComplexMatrix sld;
  SldBranch branch = SldBranch::alpha_nonzero;
};

// Symmetric logarithmic derivative of a 2x2 state from its lambda-derivative,
// using the closed form valid for qubits. The alpha = 0 branch is taken when
// |alpha| <= 1e-14.
SldComputation qubit_sld(const linalg::ComplexMatrix& rho, const linalg::ComplexMatrix& drho);

// 1 / (1 - lambda^2)
double pure_sqsc_qfi(double lambda);

// Commonly quoted value 3 / ((3 + lambda)(1 - lambda)) for one channel use
// on half of a maximally entangled pure pair. For the affine channel
// lambda*rho + (1-lambda)/2 Tr[rho] I the output spectrum of that protocol gives
// 3 / ((1 + 3 lambda)(1 - lambda)) instead, which is what correlated_qfi and
// the density-matrix oracle return at n = 2, m = 1, r = 1.
double pure_entangled_qfi(double lambda);

QfiReport independent_qfi(int m, double r, double lambda);
QfiReport sequential_qfi(int m, double r, double lambda);

// Per-channel sequential QFI over the SQSC value.
double sequential_gain(int m, double r, double lambda);

// The same gain evaluated at the boundary lambda = 1: m for r < 1, 1 for r = 1.
double sequential_gain_at_unit_lambda(int m, double r);

// Threshold [lambda^2 (m+1) - m] / lambda^(2m+2): an (m+1)-th sequential use
// raises the per-channel QFI iff r^2 <= threshold. Returns -infinity at
// lambda = 0. Accepts lambda in [0, 1].
double sequential_extra_invocation_advantage(int m, double lambda);

}  // namespace depolqfi::qubit
