#pragma once

// Two-qubit (n = 2) correlated protocol: entanglement via the partial
// transpose and quantum discord of the final state.

#include "depolqfi/linalg.hpp"

namespace depolqfi::pairs {

// diag((1 + a r)/4, (1 - a r)/4, (1 - a r)/4, (1 + a r)/4) with a = lambda^m r,
// corners <0|rho|3> = +2 i r lambda^m / 4 and <3|rho|0> = -2 i r lambda^m / 4.
// lambda = 1 gives the prepared state.
linalg::ComplexMatrix two_qubit_final_matrix(int m, double r, double lambda);

struct PptResult {
  double min_eigenvalue = 0.0;
  bool separable = false;
};

inline constexpr double kSeparableTolerance = 1e-12;

// Smallest eigenvalue of the partial transpose on qubit 1.
PptResult ppt_analysis(int m, double r, double lambda);

// sqrt(1 + 1/lambda^m) - 1 clamped to [0, 1].
double separability_threshold(int m, double lambda);

struct DiscordIntermediates {
  double mu0 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu3 = 0.0;
  double c_corr = 0.0;  // lambda^m r
};

DiscordIntermediates discord_intermediates(int m, double r, double lambda);

// Local unitary [[0, e^{i pi/8}], [e^{-i pi/8}, 0]].
linalg::ComplexMatrix discord_rotation();

// (U (x) U) rho (U (x) U)^dagger
linalg::ComplexMatrix rotated_final_matrix(int m, double r, double lambda);

// Discord in bits.
double discord(int m, double r, double lambda);
double discord_initial(double r);

struct CorrelationReport {
  int m = 1;
  double r = 0.0;
  double lambda = 0.0;
  double ppt_min_eigenvalue = 0.0;
  bool separable = false;
  double separability_threshold_r = 0.0;
  double discord = 0.0;
  double discord_initial = 0.0;
};

CorrelationReport correlation_report(int m, double r, double lambda);

}  // namespace depolqfi::pairs
