#include "depolqfi/correlated.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "depolqfi/errors.hpp"
#include "depolqfi/qubit_protocols.hpp"

namespace depolqfi::correlated {

using linalg::Complex;
using linalg::ComplexMatrix;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_closed_form_qubits(int n) {
  if (n < 1) throw DomainError("qubit count n = " + std::to_string(n) + " violates n >= 1");
  if (n > kMaxClosedFormQubits) {
    throw CapacityError("qubit count n = " + std::to_string(n) + " exceeds closed-form limit " +
                        std::to_string(kMaxClosedFormQubits));
  }
}

void require_block_state_qubits(int n) {
  require_closed_form_qubits(n);
  if (n > kMaxBlockStateQubits) {
    throw CapacityError("qubit count n = " + std::to_string(n) + " exceeds block-state limit " +
                        std::to_string(kMaxBlockStateQubits));
  }
}

void require_profile(int u, int v, const ProtocolParams& params) {
  if (u < 0 || u > params.n - params.m || v < 0 || v > params.m) {
    throw DomainError("bit profile (u, v) = (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") outside 0 <= u <= n - m, 0 <= v <= m");
  }
}

void require_table(const ProtocolParams& params, const CoefficientTable& table) {
  if (table.n != params.n || table.r != params.r) {
    throw DomainError("coefficient table does not match (n, r) of the parameters");
  }
}

// Shared inner sum of final_diag and its derivative, with weight(k) the
// k-flip weight q^k p^(m-k) or its lambda-derivative.
template <typename Weight>
double flip_sum(int u, int v, int m, const CoefficientTable& table, Weight weight) {
  double total = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double w = weight(k);
    if (w == 0.0) continue;
    const int l_min = std::max(k + v - m, 0);
    const int l_max = std::min(k, v);
    double inner = 0.0;
    for (int l = l_min; l <= l_max; ++l) {
      const double ways = static_cast<double>(binomial(v, l)) *
                          static_cast<double>(binomial(m - v, k - l));
      inner += ways * table.d[u + v + k - 2 * l];
    }
    total += w * inner;
  }
  return total;
}

// Per-(u, v) final diagonal and derivative tables, [u][v].
struct DiagTables {
  std::vector<std::vector<double>> d;
  std::vector<std::vector<double>> d_dot;
};

DiagTables diag_tables(const ProtocolParams& params, const CoefficientTable& table) {
  const int spectators = params.n - params.m;
  DiagTables out;
  out.d.assign(spectators + 1, std::vector<double>(params.m + 1));
  out.d_dot = out.d;
  for (int u = 0; u <= spectators; ++u)
    for (int v = 0; v <= params.m; ++v) {
      out.d[u][v] = final_diag(u, v, params, table);
      out.d_dot[u][v] = final_diag_derivative(u, v, params, table);
    }
  return out;
}

double scaled_floor(int n) { return std::ldexp(kBlockEigenvalueFloor, 1 - n); }

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const auto factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") overflows 64 bits");
    }
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

CoefficientTable prep_coefficients(int n, double r) {
  require_closed_form_qubits(n);
  require_polarization(r);
  const double up = 0.5 * (1.0 + r);
  const double down = 0.5 * (1.0 - r);
  CoefficientTable table{n, r, std::vector<double>(n + 1), std::vector<double>(n + 1)};
  for (int j = 0; j <= n; ++j) {
    const double a = ipow(up, j) * ipow(down, n - j);
    const double b = ipow(up, n - j) * ipow(down, j);
    table.d[j] = 0.5 * (a + b);
    table.c[j] = 0.5 * (a - b);
  }
  return table;
}

BitProfile bit_profile(std::uint64_t x, int n, int m) {
  require_closed_form_qubits(n);
  if (m < 0 || m > n) throw DomainError("bit_profile: m outside 0..n");
  if (n < 64 && (x >> n) != 0) throw DomainError("bit_profile: x has more than n bits");
  const std::uint64_t low_mask = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  BitProfile out;
  out.x = x;
  out.v = m - std::popcount(x & low_mask);
  out.u = (n - m) - std::popcount(x >> m);
  out.j = out.u + out.v;
  return out;
}

double PairedBlockState::trace() const {
  double t = 0.0;
  for (const auto& b : blocks) t += 2.0 * b.d;
  return t;
}

double PairedBlockState::min_eigenvalue() const {
  double lo = kInf;
  for (const auto& b : blocks) lo = std::min(lo, b.d - std::abs(b.c));
  return lo;
}

ComplexMatrix PairedBlockState::to_dense(std::size_t cap) const {
  const std::size_t dim = linalg::qubit_dimension(n, cap);
  const std::size_t top = dim - 1;
  ComplexMatrix rho(dim);
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    const auto& b = blocks[x];
    rho(x, x) = b.d;
    rho(top - x, top - x) = b.d;
    rho(x, top - x) = Complex(0.0, b.c);
    rho(top - x, x) = Complex(0.0, -b.c);
  }
  return rho;
}

PairedBlockState prepared_state(int n, double r) {
  require_block_state_qubits(n);
  const auto table = prep_coefficients(n, r);
  PairedBlockState state{n, std::vector<Block>(std::size_t{1} << (n - 1))};
  for (std::uint64_t x = 0; x < state.blocks.size(); ++x) {
    const int j = n - std::popcount(x);
    state.blocks[x] = {table.d[j], table.c[j]};
  }
  return state;
}

double final_counterdiag(int j, int n, int m, double r, double lambda) {
  require_closed_form_qubits(n);
  require_invocations(m);
  if (m > n) throw DomainError("final_counterdiag: m = " + std::to_string(m) + " violates m <= n");
  if (j < 0 || j > n) throw DomainError("final_counterdiag: j outside 0..n");
  require_closed_lambda(lambda);
  return ipow(lambda, m) * prep_coefficients(n, r).c[j];
}

double final_diag(int u, int v, const ProtocolParams& params, const CoefficientTable& table) {
  require_table(params, table);
  require_profile(u, v, params);
  const int m = params.m;
  const double p = params.p();
  const double q = params.q();
  return flip_sum(u, v, m, table, [&](int k) { return ipow(q, k) * ipow(p, m - k); });
}

double final_diag_derivative(int u, int v, const ProtocolParams& params,
                             const CoefficientTable& table) {
  require_table(params, table);
  require_profile(u, v, params);
  const int m = params.m;
  const double p = params.p();
  const double q = params.q();
  // d/dlambda q^k p^(m-k) with dp/dlambda = 1/2, dq/dlambda = -1/2
  return flip_sum(u, v, m, table, [&](int k) {
    const double from_p = k < m ? (m - k) * ipow(q, k) * ipow(p, m - k - 1) : 0.0;
    const double from_q = k > 0 ? k * ipow(q, k - 1) * ipow(p, m - k) : 0.0;
    return 0.5 * (from_p - from_q);
  });
}

double final_diag(int u, int v, const ProtocolParams& params) {
  params.require_correlated();
  return final_diag(u, v, params, prep_coefficients(params.n, params.r));
}

double final_diag_derivative(int u, int v, const ProtocolParams& params) {
  params.require_correlated();
  return final_diag_derivative(u, v, params, prep_coefficients(params.n, params.r));
}

PairedBlockState final_state(const ProtocolParams& params) {
  params.require_correlated();
  require_block_state_qubits(params.n);
  const auto table = prep_coefficients(params.n, params.r);
  const int spectators = params.n - params.m;
  std::vector<std::vector<double>> diag(spectators + 1, std::vector<double>(params.m + 1));
  for (int u = 0; u <= spectators; ++u)
    for (int v = 0; v <= params.m; ++v) diag[u][v] = final_diag(u, v, params, table);

  const double lam_m = ipow(params.lambda, params.m);
  PairedBlockState state{params.n, std::vector<Block>(std::size_t{1} << (params.n - 1))};
  for (std::uint64_t x = 0; x < state.blocks.size(); ++x) {
    const auto prof = bit_profile(x, params.n, params.m);
    state.blocks[x] = {diag[prof.u][prof.v], lam_m * table.c[prof.j]};
  }
  return state;
}

double block_qfi(double d, double c, double d_dot, int m, double lambda, double floor) {
  require_invocations(m);
  const double lam_m = ipow(lambda, m);
  const double c_final = lam_m * c;
  const double c_dot = m * ipow(lambda, m - 1) * c;
  const double tol = 1e-12 * std::max(std::abs(d), std::abs(c_final));
  if (d < std::abs(c_final) - tol) {
    throw PositivityError("block_qfi: d = " + std::to_string(d) + " < |lambda^m c| = " +
                          std::to_string(std::abs(c_final)));
  }
  double total = 0.0;
  for (const double sign : {1.0, -1.0}) {
    const double eig = d + sign * c_final;
    const double eig_dot = d_dot + sign * c_dot;
    if (eig > floor) {
      total += eig_dot * eig_dot / eig;
    } else if (std::abs(eig_dot) >= floor) {
      return kInf;
    }
  }
  return total;
}

double block_qfi_rational(double d, double c, double d_dot, int m, double lambda) {
  require_invocations(m);
  const double c2 = c * c;
  const double lam2m = ipow(lambda, 2 * m);
  const double num = d * (d_dot * d_dot + double(m) * m * ipow(lambda, 2 * m - 2) * c2) -
                     2.0 * m * ipow(lambda, 2 * m - 1) * d_dot * c2;
  return 2.0 * num / (d * d - lam2m * c2);
}

QfiReport correlated_qfi(const ProtocolParams& params) {
  params.require_correlated();
  require_closed_form_qubits(params.n);
  const int n = params.n;
  const int m = params.m;
  const auto table = prep_coefficients(n, params.r);
  const auto diag = diag_tables(params, table);
  const double floor = scaled_floor(n);

  double total = 0.0;
  auto add = [&](double multiplicity, int u, int v) {
    if (multiplicity == 0.0) return;
    const double h = block_qfi(diag.d[u][v], table.c[u + v], diag.d_dot[u][v], m,
                               params.lambda, floor);
    total += multiplicity * h;
  };
  if (m < n) {
    for (int v = 0; v <= m; ++v)
      for (int u = 1; u <= n - m; ++u)
        add(static_cast<double>(binomial(n - m - 1, u - 1)) *
                static_cast<double>(binomial(m, v)),
            u, v);
  } else {
    for (int v = 1; v <= n; ++v) add(static_cast<double>(binomial(n - 1, v - 1)), 0, v);
  }

  QfiReport out;
  out.value = total;
  out.per_channel = total / m;
  out.method = params.limit ? Method::limit : Method::closed_form;
  out.params = params;
  return out;
}

QfiReport correlated_qfi_blockwise(const ProtocolParams& params) {
  params.require_correlated();
  require_block_state_qubits(params.n);
  const auto table = prep_coefficients(params.n, params.r);
  const auto diag = diag_tables(params, table);
  const double floor = scaled_floor(params.n);
  const std::uint64_t count = std::uint64_t{1} << (params.n - 1);
  double total = 0.0;
  for (std::uint64_t x = 0; x < count; ++x) {
    const auto prof = bit_profile(x, params.n, params.m);
    total += block_qfi(diag.d[prof.u][prof.v], table.c[prof.j], diag.d_dot[prof.u][prof.v],
                       params.m, params.lambda, floor);
  }
  QfiReport out;
  out.value = total;
  out.per_channel = total / params.m;
  out.method = params.limit ? Method::limit : Method::closed_form;
  out.params = params;
  return out;
}

GainRecord correlated_gain(const ProtocolParams& params) {
  if (params.r == 0.0) throw UndefinedGainError("correlated_gain: undefined at r = 0 (0/0)");
  const double baseline = qubit::sqsc_qfi(params.r, params.lambda);
  const auto report = correlated_qfi(params);
  return {report.per_channel / baseline, Protocol::correlated, Protocol::sqsc, params};
}

GainRecord corr_vs_seq_gain(const ProtocolParams& params) {
  if (params.r == 0.0) throw UndefinedGainError("corr_vs_seq_gain: undefined at r = 0 (0/0)");
  const auto seq = qubit::sequential_qfi(params.m, params.r, params.lambda);
  if (seq.per_channel == 0.0) {
    throw UndefinedGainError("corr_vs_seq_gain: sequential QFI vanishes (lambda = 0, m >= 2)");
  }
  const auto report = correlated_qfi(params);
  return {report.per_channel / seq.per_channel, Protocol::correlated, Protocol::sequential, params};
}

}  // namespace depolqfi::correlated
