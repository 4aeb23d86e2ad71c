#include "depolqfi/qubit_protocols.hpp"

#include <cmath>
#include <limits>

#include "depolqfi/errors.hpp"

namespace depolqfi::qubit {

using linalg::Complex;
using linalg::ComplexMatrix;

double BlochVector::magnitude() const { return std::sqrt(rx * rx + ry * ry + rz * rz); }

ComplexMatrix BlochVector::dot_sigma() const {
  return rx * linalg::pauli::x() + ry * linalg::pauli::y() + rz * linalg::pauli::z();
}

ComplexMatrix BlochVector::state() const {
  if (magnitude() > 1.0 + 1e-15) throw DomainError("Bloch vector magnitude exceeds 1");
  return 0.5 * (linalg::pauli::identity() + dot_sigma());
}

double sqsc_qfi(double r, double lambda) {
  require_polarization(r);
  require_channel_lambda(lambda);
  return r * r / (1.0 - lambda * lambda * r * r);
}

SldComputation qubit_sld(const ComplexMatrix& rho, const ComplexMatrix& drho) {
  if (rho.dim() != 2 || drho.dim() != 2) throw DomainError("qubit_sld: expects 2x2 operators");
  if (!rho.is_hermitian() || !drho.is_hermitian()) {
    throw DomainError("qubit_sld: operators must be Hermitian");
  }
  const double tr = rho.trace().real();
  if (std::abs(tr) < 1e-300) throw DomainError("qubit_sld: Tr rho = 0");
  const double tr_dot = drho.trace().real();
  const double alpha = (rho * rho).trace().real() - tr * tr;

  const ComplexMatrix id = linalg::pauli::identity();
  SldComputation out;
  out.alpha = alpha;
  if (std::abs(alpha) <= 1e-14) {
    out.branch = SldBranch::alpha_zero;
    out.sld = (1.0 / tr) * (2.0 * drho - (tr_dot / tr) * rho);
    return out;
  }
  // d/dlambda ln|alpha| = alpha_dot / alpha
  const double alpha_dot = 2.0 * (rho * drho).trace().real() - 2.0 * tr * tr_dot;
  const double log_alpha_dot = alpha_dot / alpha;
  out.branch = SldBranch::alpha_nonzero;
  out.sld = (1.0 / tr) * (2.0 * drho - log_alpha_dot * rho) +
            Complex(log_alpha_dot - tr_dot / tr) * id;
  return out;
}

double pure_sqsc_qfi(double lambda) {
  require_channel_lambda(lambda);
  return 1.0 / (1.0 - lambda * lambda);
}

double pure_entangled_qfi(double lambda) {
  require_channel_lambda(lambda);
  return 3.0 / ((3.0 + lambda) * (1.0 - lambda));
}

QfiReport independent_qfi(int m, double r, double lambda) {
  require_invocations(m);
  const double single = sqsc_qfi(r, lambda);
  QfiReport out;
  out.value = m * single;
  out.per_channel = single;
  out.params = ProtocolParams::make(m, m, r, lambda);
  return out;
}

QfiReport sequential_qfi(int m, double r, double lambda) {
  require_invocations(m);
  require_polarization(r);
  require_channel_lambda(lambda);
  const double lam2m = ipow(lambda, 2 * m);
  const double value = double(m) * m * ipow(lambda, 2 * m - 2) * r * r / (1.0 - lam2m * r * r);
  QfiReport out;
  out.value = value;
  out.per_channel = value / m;
  out.params = ProtocolParams::make(1, m, r, lambda);
  return out;
}

namespace {

// m lambda^(2m-2) / sum_{j<m} lambda^(2j): the r = 1 gain with the common
// factor (1 - lambda^2) cancelled, finite up to lambda = 1.
double pure_sequential_gain(int m, double lambda) {
  double denom = 0.0;
  for (int j = 0; j < m; ++j) denom += ipow(lambda, 2 * j);
  return m * ipow(lambda, 2 * m - 2) / denom;
}

}  // namespace

double sequential_gain(int m, double r, double lambda) {
  require_invocations(m);
  require_polarization(r);
  require_channel_lambda(lambda);
  if (r == 1.0) return pure_sequential_gain(m, lambda);
  const double lam2m = ipow(lambda, 2 * m);
  return m * (ipow(lambda, 2 * m - 2) - lam2m * r * r) / (1.0 - lam2m * r * r);
}

double sequential_gain_at_unit_lambda(int m, double r) {
  require_invocations(m);
  require_polarization(r);
  if (r == 1.0) return pure_sequential_gain(m, 1.0);
  return m * (1.0 - r * r) / (1.0 - r * r);
}

double sequential_extra_invocation_advantage(int m, double lambda) {
  require_invocations(m);
  require_closed_lambda(lambda);
  if (lambda == 0.0) return -std::numeric_limits<double>::infinity();
  const double l2 = lambda * lambda;
  return (l2 * (m + 1) - m) / ipow(lambda, 2 * m + 2);
}

}  // namespace depolqfi::qubit
