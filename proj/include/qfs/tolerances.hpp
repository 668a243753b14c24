#pragma once

namespace qfs::tol {

// Structural validation (norms, Hermiticity, trace, idempotence of states and operators).
inline constexpr double structural = 1e-10;

// Equivalence between two algebraic routes to the same quantity.
inline constexpr double equivalence = 1e-9;

// Sum rule for channel Kraus operators and branch weights.
inline constexpr double cptp = 1e-9;
inline constexpr double weight_sum = 1e-12;

// Named gate constants must be unitary to near machine precision.
inline constexpr double gate = 1e-12;

// Probabilities may stray this far outside [0,1] before it is treated as a bug.
inline constexpr double probability_clip = 1e-9;

}  // namespace qfs::tol
