#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfs/engine.hpp"
#include "qfs/estimate_result.hpp"
#include "qfs/fork_spec.hpp"

namespace qfs {

/// Finite-shot estimate from the forked register; one target-state
/// preparation per shot.
EstimateResult estimate_qfs(const ForkSpec& spec, std::size_t shots, std::uint64_t seed);

/// Per-branch observable means, one independent sampling stream per branch
/// (stream seeds derived from (seed, branch)). Building block of the
/// trajectory-at-a-time baseline estimator.
std::vector<double> sample_branch_means(const std::vector<double>& weights,
                                        const std::vector<Channel>& channels, const ComplexMatrix& obs,
                                        const QuantumState& target, std::size_t shots_per_branch,
                                        std::uint64_t seed);

/// Baseline estimator: samples each branch separately and combines the branch
/// means as sum_i p_i mean_i^q (the plug-in power, biased O(1/shots) for
/// q > 1). prep_count = d * q * shots_per_branch: every shot of every branch
/// consumes q target preparations.
EstimateResult estimate_naive(std::size_t d, std::size_t q, const std::vector<double>& weights,
                              const std::vector<Channel>& channels, const ComplexMatrix& obs,
                              const QuantumState& target, std::size_t shots_per_branch,
                              std::uint64_t seed);

/// Fixed instance for the preparation-cost comparison.
struct ComplexityInstance {
  std::size_t d = 4;
  std::size_t q = 1;
  std::vector<double> weights;
  std::vector<Channel> channels;
  ComplexMatrix observable;
  QuantumState target = QuantumState::basis(RegisterLayout::single(2), 0);
};

/// Default instance: d = 4, q = 1, equal weights, four seeded random unitary
/// branches, sigma_z readout on |0>.
ComplexityInstance default_complexity_instance(std::uint64_t seed);

struct ComplexityReport {
  std::vector<double> epsilon_grid;
  std::vector<std::size_t> naive_preps;
  std::vector<std::size_t> qfs_preps;
  std::vector<double> ratio;  // naive_preps / qfs_preps
};

// For each epsilon: the smallest preparation budget (on a geometric grid) at
// which the estimator hits the accuracy target in at least a 1-delta fraction
// of `repetitions` independent runs. The forked estimator must land the
// combined estimate within epsilon; the baseline must land every branch mean
// within epsilon, which is what running d separate estimations to accuracy
// epsilon costs.
ComplexityReport complexity_sweep(const ComplexityInstance& instance,
                                  const std::vector<double>& epsilon_grid, double delta,
                                  std::uint64_t seed, std::size_t repetitions = 200);

/// CSV rows "epsilon,naive_preps,qfs_preps,ratio" with a header line.
std::string to_csv(const ComplexityReport& report);

}  // namespace qfs
