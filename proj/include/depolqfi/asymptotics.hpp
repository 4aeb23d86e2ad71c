#pragma once

// Lowest-order behaviour for weakly polarized probes (r << 1), parameter
// cutoffs, and the optimal number of channel uses.

#include <optional>
#include <vector>

namespace depolqfi::asymptotics {

// r^2
double lowr_sqsc(double r);
// m lambda^(2m-2) r^2
double lowr_sequential_per_channel(int m, double r, double lambda);
// m n lambda^(2m-2) r^2, 1 <= m <= n
double lowr_correlated_per_channel(int n, int m, double r, double lambda);

struct CutoffCurve {
  int m = 1;
  double cutoff = 0.0;
  double squared_cutoff = 0.0;
};

// m^(1/(2-2m)); m = 1 reports the limit e^(-1/2).
CutoffCurve sequential_cutoff(int m);

// (m n)^(1/(2-2m)); 0 for m = 1.
double correlated_cutoff(int n, int m);

enum class InvocationMode { spectator, all_qubits };

struct OptimalInvocation {
  double lambda = 0.0;
  InvocationMode mode = InvocationMode::spectator;
  int m_opt = 1;
  std::optional<int> tie_partner;
  // m lambda^(2m-2) per spectator-mode qubit count, m^2 lambda^(2m-2) otherwise
  double optimal_gain_coefficient = 0.0;
};

double gain_coefficient(int m, double lambda, InvocationMode mode);

OptimalInvocation optimal_invocations(double lambda, InvocationMode mode);

// 1/h, +infinity at h = 0.
double cramer_rao_bound(double h);

const std::vector<double>& table_lambdas(InvocationMode mode);

std::vector<OptimalInvocation> optimal_table(InvocationMode mode);

}  // namespace depolqfi::asymptotics
