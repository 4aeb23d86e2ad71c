#pragma once

// Correlated state protocol: n qubits, each prepared as (I + r sigma_y)/2,
// entangled by a controlled-Z on every pair followed by a Hadamard on every
// qubit, after which the channel acts once on each of the m least significant
// qubits.
//
// Both the prepared and the final state are direct sums of 2x2 blocks on
// span{|x>, |N-x>} with N = 2^n - 1 and x in [0, (N-1)/2]:
//
//   rho_x = d_x (|x><x| + |N-x><N-x|) + i c_x (|x><N-x| - |N-x><x|)
//
// so every quantity below is computed from per-block scalars.

#include <cstdint>
#include <vector>

#include "depolqfi/linalg.hpp"
#include "depolqfi/params.hpp"

namespace depolqfi::correlated {

// Closed forms use exact 64-bit binomials; this bounds n.
inline constexpr int kMaxClosedFormQubits = 60;
// Materialized block states hold 2^(n-1) blocks.
inline constexpr int kMaxBlockStateQubits = 24;

// Default threshold below which a block eigenvalue is treated as zero. It is
// scaled by the uniform block weight 2^(1-n) inside correlated_qfi.
inline constexpr double kBlockEigenvalueFloor = 1e-13;

// Exact C(n, k); 0 when k < 0 or k > n. Throws CapacityError on overflow.
std::uint64_t binomial(int n, int k);

struct CoefficientTable {
  int n = 0;
  double r = 0.0;
  std::vector<double> d;  // d[j], j = number of zeros in the n-bit string
  std::vector<double> c;
};

CoefficientTable prep_coefficients(int n, double r);

struct BitProfile {
  std::uint64_t x = 0;
  int j = 0;  // zeros in all n bits
  int u = 0;  // zeros in the n - m most significant bits
  int v = 0;  // zeros in the m least significant bits
};

BitProfile bit_profile(std::uint64_t x, int n, int m);

struct Block {
  double d = 0.0;
  double c = 0.0;
};

struct PairedBlockState {
  int n = 0;
  std::vector<Block> blocks;  // indexed by x

  double trace() const;
  // min over blocks of d - |c|
  double min_eigenvalue() const;
  linalg::ComplexMatrix to_dense(std::size_t cap = linalg::dimension_cap()) const;
};

PairedBlockState prepared_state(int n, double r);

// lambda^m c_j
double final_counterdiag(int j, int n, int m, double r, double lambda);

// Final diagonal entry <x|rho_f|x> for a basis state with u zeros among the
// spectator bits and v zeros among the channel bits.
double final_diag(int u, int v, const ProtocolParams& params);
double final_diag_derivative(int u, int v, const ProtocolParams& params);

// Same, reusing a prepared coefficient table for (params.n, params.r).
double final_diag(int u, int v, const ProtocolParams& params, const CoefficientTable& table);
double final_diag_derivative(int u, int v, const ProtocolParams& params,
                             const CoefficientTable& table);

PairedBlockState final_state(const ProtocolParams& params);

// QFI of one final block with prepared counter-diagonal c, final diagonal d
// and its derivative d_dot: sum over p_pm = d +- lambda^m c of p_dot^2 / p.
// An eigenvalue below `floor` contributes 0 when its derivative is also below
// `floor` and +infinity otherwise. Throws PositivityError when
// d < |lambda^m c| beyond rounding.
double block_qfi(double d, double c, double d_dot, int m, double lambda,
                 double floor = kBlockEigenvalueFloor);

// 2/(d^2 - lambda^2m c^2) [d (d_dot^2 + m^2 lambda^(2m-2) c^2) - 2 m lambda^(2m-1) d_dot c^2]
double block_qfi_rational(double d, double c, double d_dot, int m, double lambda);

// Closed-form QFI summed over (u, v) classes with multiplicities.
QfiReport correlated_qfi(const ProtocolParams& params);

// Same quantity summed block by block over all 2^(n-1) values of x.
QfiReport correlated_qfi_blockwise(const ProtocolParams& params);

struct GainRecord {
  double value = 0.0;
  Protocol numerator = Protocol::correlated;
  Protocol denominator = Protocol::sqsc;
  ProtocolParams params;
};

// Per-channel correlated QFI over the SQSC QFI. Throws UndefinedGainError at r = 0.
GainRecord correlated_gain(const ProtocolParams& params);

// Per-channel correlated QFI over per-channel sequential QFI with the same m.
GainRecord corr_vs_seq_gain(const ProtocolParams& params);

}  // namespace depolqfi::correlated
