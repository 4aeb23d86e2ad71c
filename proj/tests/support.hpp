#pragma once

#include <cmath>
#include <random>

#include "depolqfi/linalg.hpp"

namespace testing_support {

using depolqfi::linalg::Complex;
using depolqfi::linalg::ComplexMatrix;

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = g(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      a(i, j) = Complex(g(rng), g(rng));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

// G G^dagger / Tr
inline ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix b(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = b * b.adjoint();
  return (1.0 / rho.trace().real()) * rho;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace testing_support
