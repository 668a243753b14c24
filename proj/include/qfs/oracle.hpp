#pragma once

#include <cstddef>
#include <vector>

#include "qfs/channel.hpp"
#include "qfs/complex_matrix.hpp"

namespace qfs::oracle {

// Brute-force per-trajectory references. Each branch is evaluated on its own
// slot-sized state, one trajectory at a time, with no entangled register and
// no code shared with the forking engine beyond the matrix core. Used as the
// independent side of every equivalence check.

struct TrajectoryResult {
  std::size_t branch = 0;
  std::vector<double> expectations;  // one per copy
  double probability = 1.0;          // product of per-copy projector traces
};

/// Per-branch channel chains: chains[branch][copy] is the ordered channel list
/// that the target of that copy experiences in that branch.
using BranchChains = std::vector<std::vector<std::vector<Channel>>>;

/// Evaluate each trajectory: the target state is pushed through its chain and
/// measured per copy with `per_copy_obs` (and `per_copy_projectors` when given).
std::vector<TrajectoryResult> trajectories(const BranchChains& chains, const ComplexMatrix& rho_target,
                                           const ComplexMatrix& per_copy_obs);

/// Weighted power sum sum_i p_i prod_j <M>_ij for one channel per branch,
/// identical observable on every copy.
double power_sum(std::size_t d, std::size_t q, const std::vector<double>& weights,
                 const std::vector<Channel>& channels, const ComplexMatrix& obs,
                 const ComplexMatrix& rho_target);

/// General form: arbitrary chains per (branch, copy) and a joint observable on
/// the q copies. Computes sum_i p_i tr[ obs_joint (sigma_i1 x ... x sigma_iq) ].
double general_expectation(const std::vector<double>& weights, const BranchChains& chains,
                           const ComplexMatrix& obs_joint, const ComplexMatrix& rho_target);

/// Projective counterpart: sum_i p_i prod_j tr[ P_j sigma_ij ].
double general_projective(const std::vector<double>& weights, const BranchChains& chains,
                          const std::vector<ComplexMatrix>& per_copy_projectors,
                          const ComplexMatrix& rho_target);

/// Term-by-term twirled state sum_i p_i U_i^dag inner(U_i rho U_i^dag) U_i.
ComplexMatrix twirl(const std::vector<ComplexMatrix>& twirl_set, const std::vector<double>& weights,
                    const Channel& inner, const ComplexMatrix& rho_target);

/// tr(W rho) for the teleportation witness
/// W = (1x1 - XxX + YxY - ZxZ)/4 on a two-qubit state.
double witness_value(const ComplexMatrix& rho_two_qubit);

/// Single-qubit purity indicator sum_a <sigma_a>^2 over a in {x,y,z}.
double purity_sum(const ComplexMatrix& rho_qubit);

}  // namespace qfs::oracle
