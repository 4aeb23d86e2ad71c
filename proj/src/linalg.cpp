#include "depolqfi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "depolqfi/errors.hpp"

namespace depolqfi::linalg {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DomainError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_qubit_operator(const ComplexMatrix& rho, int qubit, int n, const char* op) {
  if (n < 1 || n >= 63) {
    throw DomainError(std::string(op) + ": qubit count n must satisfy 1 <= n < 63");
  }
  if (rho.dim() != (std::size_t{1} << n)) {
    throw DomainError(std::string(op) + ": matrix dimension " + std::to_string(rho.dim()) +
                      " is not 2^n for n = " + std::to_string(n));
  }
  if (qubit < 1 || qubit > n) {
    throw DomainError(std::string(op) + ": qubit index " + std::to_string(qubit) +
                      " outside 1..n = 1.." + std::to_string(n));
  }
}

}  // namespace

std::size_t dimension_cap() {
  if (const char* env = std::getenv("DEPOLQFI_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultDimensionCap;
}

void require_capacity(std::size_t dim, std::size_t cap) {
  if (dim > cap) {
    throw CapacityError("dimension " + std::to_string(dim) + " exceeds cap " +
                        std::to_string(cap));
  }
}

std::size_t qubit_dimension(int n, std::size_t cap) {
  if (n < 1) throw DomainError("qubit count n must be >= 1");
  if (n >= 63 || (std::size_t{1} << n) > cap) {
    throw CapacityError("2^" + std::to_string(n) + " exceeds dimension cap " +
                        std::to_string(cap));
  }
  return std::size_t{1} << n;
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DomainError("ComplexMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& values) {
  ComplexMatrix out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return err;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t d = lhs.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& u) {
  return u * a * u.adjoint();
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s}, {s, -s}};
}
}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da != 0 && db > std::numeric_limits<std::size_t>::max() / da) {
    throw CapacityError("kron: dimension overflow");
  }
  require_capacity(da * db, cap);
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

namespace {

// Inserts a bit value at position `bit` (0-based) of a (n-1)-bit index.
inline std::size_t insert_bit(std::size_t reduced, int bit, std::size_t value) {
  const std::size_t low = reduced & ((std::size_t{1} << bit) - 1);
  const std::size_t high = reduced >> bit;
  return (high << (bit + 1)) | (value << bit) | low;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, int qubit, int n) {
  require_qubit_operator(rho, qubit, n, "partial_trace");
  const int bit = qubit - 1;
  const std::size_t half = rho.dim() / 2;
  ComplexMatrix out(half);
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < half; ++j)
      out(i, j) = rho(insert_bit(i, bit, 0), insert_bit(j, bit, 0)) +
                  rho(insert_bit(i, bit, 1), insert_bit(j, bit, 1));
  return out;
}

ComplexMatrix insert_identity(const ComplexMatrix& reduced, int qubit, int n) {
  if (n < 1 || n >= 63 || reduced.dim() != (std::size_t{1} << (n - 1))) {
    throw DomainError("insert_identity: reduced operator must have dimension 2^(n-1)");
  }
  if (qubit < 1 || qubit > n) {
    throw DomainError("insert_identity: qubit index outside 1..n");
  }
  const int bit = qubit - 1;
  const std::size_t half = reduced.dim();
  ComplexMatrix out(2 * half);
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < half; ++j)
      for (std::size_t b = 0; b < 2; ++b)
        out(insert_bit(i, bit, b), insert_bit(j, bit, b)) = reduced(i, j);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int qubit, int n) {
  require_qubit_operator(rho, qubit, n, "partial_transpose");
  const std::size_t mask = std::size_t{1} << (qubit - 1);
  const std::size_t d = rho.dim();
  ComplexMatrix out(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t src_row = (a & ~mask) | (b & mask);
      const std::size_t src_col = (b & ~mask) | (a & mask);
      out(a, b) = rho(src_row, src_col);
    }
  return out;
}

ComplexMatrix swap_qubits(const ComplexMatrix& rho, int qubit_a, int qubit_b, int n) {
  require_qubit_operator(rho, qubit_a, n, "swap_qubits");
  require_qubit_operator(rho, qubit_b, n, "swap_qubits");
  const int ba = qubit_a - 1;
  const int bb = qubit_b - 1;
  auto swap_bits = [ba, bb](std::size_t x) {
    const std::size_t xa = (x >> ba) & 1;
    const std::size_t xb = (x >> bb) & 1;
    if (xa == xb) return x;
    return x ^ ((std::size_t{1} << ba) | (std::size_t{1} << bb));
  };
  const std::size_t d = rho.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(swap_bits(i), swap_bits(j)) = rho(i, j);
  return out;
}

double Spectrum::reconstruction_error(const ComplexMatrix& a) const {
  const ComplexMatrix& v = eigenvectors;
  ComplexMatrix scaled = v;
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t k = 0; k < v.dim(); ++k) scaled(i, k) *= eigenvalues[k];
  return max_abs_diff(scaled * v.adjoint(), a);
}

double Spectrum::orthonormality_error() const {
  return max_abs_diff(eigenvectors.adjoint() * eigenvectors,
                      ComplexMatrix::identity(eigenvectors.dim()));
}

namespace {

// Implicit QL with Wilkinson-style shifts on a real symmetric tridiagonal
// matrix (diag, sub), accumulating rotations into the columns of z. On
// return diag holds the eigenvalues in no particular order.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& sub,
                    std::vector<std::vector<double>>& z) {
  const std::size_t n = diag.size();
  if (n <= 1) return;
  // sub[i] couples rows i and i+1; sub[n-1] is padding.
  sub[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  const int max_iter = 60 * static_cast<int>(n);
  double shift_total = 0.0;
  double scale = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    scale = std::max(scale, std::abs(diag[l]) + std::abs(sub[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(sub[m]) > eps * scale) ++m;
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iter) {
          throw NumericError("hermitian_eig: QL iteration did not converge", std::abs(sub[l]));
        }
        double g = diag[l];
        double p = (diag[l + 1] - g) / (2.0 * sub[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        diag[l] = sub[l] / (p + r);
        diag[l + 1] = sub[l] * (p + r);
        const double dl1 = diag[l + 1];
        double h = g - diag[l];
        for (std::size_t i = l + 2; i < n; ++i) diag[i] -= h;
        shift_total += h;

        p = diag[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = sub[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * sub[ii];
          h = c * p;
          r = std::hypot(p, sub[ii]);
          sub[ii + 1] = s * r;
          s = sub[ii] / r;
          c = p / r;
          p = c * diag[ii] - s * g;
          diag[ii + 1] = h + s * (c * g + s * diag[ii]);
          for (std::size_t k = 0; k < n; ++k) {
            h = z[k][ii + 1];
            z[k][ii + 1] = s * z[k][ii] + c * h;
            z[k][ii] = c * z[k][ii] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * sub[l] / dl1;
        sub[l] = s * p;
        diag[l] = c * p;
      } while (std::abs(sub[l]) > eps * scale);
    }
    diag[l] += shift_total;
    sub[l] = 0.0;
  }
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  if (n == 0) return {};
  const double norm = input.max_abs();
  if (input.hermiticity_error() > 1e-12 * std::max(1.0, norm)) {
    throw DomainError("hermitian_eig: input is not Hermitian");
  }

  // Householder reduction A = Q T Q^dagger with T Hermitian tridiagonal.
  ComplexMatrix a = input;
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v(n), p(n), qv(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    double tail2 = xnorm2 - std::norm(a(k + 1, k));
    if (tail2 <= 0.0) continue;
    const double xnorm = std::sqrt(xnorm2);
    const Complex x0 = a(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    const Complex alpha = -phase * xnorm;

    std::fill(v.begin(), v.end(), Complex{});
    v[k + 1] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    const double inv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] *= inv;

    // A <- H A H with H = I - 2 v v^dagger, as A - 2 v w^dagger - 2 w v^dagger.
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      p[i] = s;
    }
    Complex gamma = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) gamma += std::conj(v[i]) * p[i];
    std::vector<Complex>& w = p;
    for (std::size_t i = k + 1; i < n; ++i) w[i] -= gamma * v[i];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) -= 2.0 * (v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]));

    // Q <- Q H
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += q(i, j) * v[j];
      qv[i] = s;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= 2.0 * qv[i] * std::conj(v[j]);
  }

  // Rotate the subdiagonal onto the positive reals: T = D T' D^dagger.
  std::vector<double> diag(n), sub(n, 0.0);
  std::vector<Complex> phases(n, Complex(1.0));
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Complex e = a(i + 1, i);
    const double mag = std::abs(e);
    phases[i + 1] = mag > 0.0 ? phases[i] * (e / mag) : phases[i];
    sub[i] = mag;
  }

  std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = 1.0;
  tridiagonal_ql(diag, sub, z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

  // V = Q D Z
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = diag[src];
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * phases[k] * z[k][src];
      out.eigenvectors(i, col) = s;
    }
  }
  return out;
}

}  // namespace depolqfi::linalg
