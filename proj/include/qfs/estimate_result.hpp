#pragma once

#include <cstddef>
#include <cstdint>

namespace qfs {

/// Finite-shot estimate of an expectation value.
struct EstimateResult {
  double mean = 0.0;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  // Target-state preparations consumed: one register build per shot for the
  // forking estimator, d*q*shots_per_branch for the per-trajectory estimator.
  std::size_t prep_count = 0;
  double std_error = 0.0;  // sample standard error of the mean
};

}  // namespace qfs
