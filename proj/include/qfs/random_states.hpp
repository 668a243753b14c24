#pragma once

#include <cstddef>

#include "qfs/complex_matrix.hpp"
#include "qfs/rng.hpp"

namespace qfs {

// Seeded generators for random operators and states. All draws are functions
// of the passed engine only, so fixed seeds give fixed objects.

ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

// Haar-like random unitary: Gaussian matrix orthonormalized column by column.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

ComplexVector random_pure(std::size_t dim, Rng& rng);

// Full-rank random density matrix (Ginibre construction G G^dag / tr).
ComplexMatrix random_density(std::size_t dim, Rng& rng);

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

// Rank-`rank` orthogonal projector from random unitary columns.
ComplexMatrix random_projector(std::size_t dim, std::size_t rank, Rng& rng);

// Random Kraus set {K_i} with sum K_i^dag K_i = I.
std::vector<ComplexMatrix> random_kraus_set(std::size_t dim, std::size_t count, Rng& rng);

}  // namespace qfs
