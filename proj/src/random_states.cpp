#include "qfs/random_states.hpp"

#include <cmath>

#include "qfs/errors.hpp"

namespace qfs {

ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (Complex& v : m.entries()) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    v = Complex{re, im};
  }
  return m;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  // Modified Gram-Schmidt over columns.
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex proj{0.0, 0.0};
      for (std::size_t r = 0; r < dim; ++r) proj += std::conj(g(r, prev)) * g(r, c);
      for (std::size_t r = 0; r < dim; ++r) g(r, c) -= proj * g(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw std::runtime_error("random_unitary: degenerate draw");
    for (std::size_t r = 0; r < dim; ++r) g(r, c) /= norm;
  }
  return g;
}

ComplexVector random_pure(std::size_t dim, Rng& rng) {
  ComplexVector v(dim);
  double norm = 0.0;
  for (Complex& x : v) {
    x = Complex{standard_normal(rng), standard_normal(rng)};
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (Complex& x : v) x /= norm;
  return v;
}

ComplexMatrix random_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  ComplexMatrix rho = matmul(g, dagger(g));
  const Complex t = trace(rho);
  return scale(1.0 / t.real(), rho);
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  return scale(0.5, add(g, dagger(g)));
}

ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank == 0 || rank > dim) throw validation_error("random_projector: rank out of range");
  const ComplexMatrix u = random_unitary(dim, rng);
  ComplexMatrix p(dim, dim);
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        p(i, j) += u(i, k) * std::conj(u(j, k));
      }
    }
  }
  return p;
}

std::vector<ComplexMatrix> random_kraus_set(std::size_t dim, std::size_t count, Rng& rng) {
  if (count == 0) throw validation_error("random_kraus_set: need at least one operator");
  std::vector<ComplexMatrix> raw;
  raw.reserve(count);
  ComplexMatrix sum(dim, dim);
  for (std::size_t i = 0; i < count; ++i) {
    raw.push_back(random_gaussian_matrix(dim, dim, rng));
    sum = add(sum, matmul(dagger(raw.back()), raw.back()));
  }
  // S^(-1/2) via the eigendecomposition of S = sum K^dag K (positive definite).
  const HermitianEig eig = hermitian_eig(sum);
  ComplexMatrix inv_sqrt(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= 0.0) throw std::runtime_error("random_kraus_set: singular normalization");
    const double f = 1.0 / std::sqrt(lambda);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        inv_sqrt(i, j) += f * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
      }
    }
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(count);
  for (const ComplexMatrix& g : raw) kraus.push_back(matmul(g, inv_sqrt));
  return kraus;
}

}  // namespace qfs
