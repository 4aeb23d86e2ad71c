#include "depolqfi/pair_correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "depolqfi/params.hpp"

namespace depolqfi::pairs {

using linalg::Complex;
using linalg::ComplexMatrix;

namespace {

void require_inputs(int m, double r, double lambda) {
  require_invocations(m);
  require_polarization(r);
  require_closed_lambda(lambda);
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

ComplexMatrix two_qubit_final_matrix(int m, double r, double lambda) {
  require_inputs(m, r, lambda);
  const double lm = ipow(lambda, m);
  const double hi = (1.0 + lm * r * r) / 4.0;
  const double lo = (1.0 - lm * r * r) / 4.0;
  ComplexMatrix rho = ComplexMatrix::diagonal({hi, lo, lo, hi});
  rho(0, 3) = Complex(0.0, 2.0 * r * lm / 4.0);
  rho(3, 0) = Complex(0.0, -2.0 * r * lm / 4.0);
  return rho;
}

PptResult ppt_analysis(int m, double r, double lambda) {
  const ComplexMatrix pt = linalg::partial_transpose(two_qubit_final_matrix(m, r, lambda), 1, 2);
  PptResult out;
  out.min_eigenvalue = linalg::hermitian_eig(pt).eigenvalues.front();
  out.separable = out.min_eigenvalue >= -kSeparableTolerance;
  return out;
}

double separability_threshold(int m, double lambda) {
  require_invocations(m);
  require_closed_lambda(lambda);
  const double lm = ipow(lambda, m);
  if (lm == 0.0) return 1.0;
  return std::clamp(std::sqrt(1.0 + 1.0 / lm) - 1.0, 0.0, 1.0);
}

DiscordIntermediates discord_intermediates(int m, double r, double lambda) {
  require_inputs(m, r, lambda);
  const double lm = ipow(lambda, m);
  DiscordIntermediates out;
  out.mu0 = 1.0 - lm * r * r;
  out.mu1 = 1.0 + 2.0 * r * lm + lm * r * r;
  out.mu2 = 1.0 - 2.0 * r * lm + lm * r * r;
  out.mu3 = out.mu0;
  out.c_corr = lm * r;
  return out;
}

ComplexMatrix discord_rotation() {
  const Complex phase = std::polar(1.0, std::numbers::pi / 8.0);
  return ComplexMatrix{{0.0, phase}, {std::conj(phase), 0.0}};
}

ComplexMatrix rotated_final_matrix(int m, double r, double lambda) {
  const ComplexMatrix u = discord_rotation();
  return linalg::conjugate(two_qubit_final_matrix(m, r, lambda), linalg::kron(u, u));
}

double discord(int m, double r, double lambda) {
  const auto mu = discord_intermediates(m, r, lambda);
  const double c = mu.c_corr;
  const double joint = 0.25 * (xlog2x(mu.mu0) + xlog2x(mu.mu1) + xlog2x(mu.mu2) + xlog2x(mu.mu3));
  const double minus = c < 1.0 ? (1.0 - c) * std::log1p(-c) / std::numbers::ln2 : 0.0;
  const double plus = (1.0 + c) * std::log1p(c) / std::numbers::ln2;
  return joint - 0.5 * minus - 0.5 * plus;
}

double discord_initial(double r) {
  require_polarization(r);
  const double plus = 0.5 * (1.0 + r) * std::log1p(r) / std::numbers::ln2;
  const double minus = r < 1.0 ? 0.5 * (1.0 - r) * std::log1p(-r) / std::numbers::ln2 : 0.0;
  return plus + minus;
}

CorrelationReport correlation_report(int m, double r, double lambda) {
  const auto ppt = ppt_analysis(m, r, lambda);
  CorrelationReport out;
  out.m = m;
  out.r = r;
  out.lambda = lambda;
  out.ppt_min_eigenvalue = ppt.min_eigenvalue;
  out.separable = ppt.separable;
  out.separability_threshold_r = separability_threshold(m, lambda);
  out.discord = discord(m, r, lambda);
  out.discord_initial = discord_initial(r);
  return out;
}

}  // namespace depolqfi::pairs
