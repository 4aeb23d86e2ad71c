#include "depolqfi/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "depolqfi/errors.hpp"
#include "depolqfi/params.hpp"

namespace depolqfi::asymptotics {

namespace {

constexpr double kIntegerNudge = 1e-9;

void require_low_r(double r) {
  if (!(r >= 0.0)) throw DomainError("polarization r = " + std::to_string(r) + " violates r >= 0");
}

}  // namespace

double lowr_sqsc(double r) {
  require_low_r(r);
  return r * r;
}

double lowr_sequential_per_channel(int m, double r, double lambda) {
  require_invocations(m);
  require_low_r(r);
  require_closed_lambda(lambda);
  return m * ipow(lambda, 2 * m - 2) * r * r;
}

double lowr_correlated_per_channel(int n, int m, double r, double lambda) {
  require_invocations(m);
  if (n < m) throw DomainError("lowr_correlated_per_channel: m = " + std::to_string(m) + " violates m <= n");
  return n * lowr_sequential_per_channel(m, r, lambda);
}

CutoffCurve sequential_cutoff(int m) {
  require_invocations(m);
  CutoffCurve out;
  out.m = m;
  out.cutoff = m == 1 ? std::exp(-0.5) : std::pow(double(m), 1.0 / (2.0 - 2.0 * m));
  out.squared_cutoff = out.cutoff * out.cutoff;
  return out;
}

double correlated_cutoff(int n, int m) {
  require_invocations(m);
  if (n < m) throw DomainError("correlated_cutoff: m = " + std::to_string(m) + " violates m <= n");
  if (m == 1) return 0.0;
  return std::pow(double(m) * n, 1.0 / (2.0 - 2.0 * m));
}

double gain_coefficient(int m, double lambda, InvocationMode mode) {
  require_invocations(m);
  const double base = m * ipow(lambda, 2 * m - 2);
  return mode == InvocationMode::spectator ? base : m * base;
}

OptimalInvocation optimal_invocations(double lambda, InvocationMode mode) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("lambda = " + std::to_string(lambda) + " violates 0 < lambda < 1");
  }
  const double x = mode == InvocationMode::spectator ? lambda * lambda : lambda;
  const double threshold = x / (1.0 - x);
  const double nearest = std::floor(threshold + kIntegerNudge);

  OptimalInvocation out;
  out.lambda = lambda;
  out.mode = mode;
  if (nearest >= 1.0 && std::abs(threshold - nearest) <= kIntegerNudge) {
    out.m_opt = static_cast<int>(nearest);
    out.tie_partner = out.m_opt + 1;
  } else {
    out.m_opt = static_cast<int>(std::floor(threshold)) + 1;
  }
  out.optimal_gain_coefficient = gain_coefficient(out.m_opt, lambda, mode);
  return out;
}

double cramer_rao_bound(double h) {
  if (!(h >= 0.0)) throw DomainError("cramer_rao_bound: h = " + std::to_string(h) + " violates h >= 0");
  if (h == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / h;
}

const std::vector<double>& table_lambdas(InvocationMode mode) {
  static const std::vector<double> spectator{0.7, 0.8, 0.9, 0.95, 0.99, 0.995};
  static const std::vector<double> all_qubits{0.5, 0.7, 0.9, 0.95, 0.97, 0.99};
  return mode == InvocationMode::spectator ? spectator : all_qubits;
}

std::vector<OptimalInvocation> optimal_table(InvocationMode mode) {
  std::vector<OptimalInvocation> rows;
  for (const double lambda : table_lambdas(mode)) rows.push_back(optimal_invocations(lambda, mode));
  return rows;
}

}  // namespace depolqfi::asymptotics
