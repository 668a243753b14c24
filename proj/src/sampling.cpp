#include "qfs/sampling.hpp"

#include <cmath>

#include "qfs/errors.hpp"
#include "qfs/format.hpp"
#include "qfs/gates.hpp"
#include "qfs/oracle.hpp"
#include "qfs/protocols.hpp"
#include "qfs/random_states.hpp"
#include "qfs/rng.hpp"

namespace qfs {

EstimateResult estimate_qfs(const ForkSpec& spec, std::size_t shots, std::uint64_t seed) {
  return run_sampled(spec, shots, seed);
}

std::vector<double> sample_branch_means(const std::vector<double>& weights,
                                        const std::vector<Channel>& channels, const ComplexMatrix& obs,
                                        const QuantumState& target, std::size_t shots_per_branch,
                                        std::uint64_t seed) {
  if (weights.size() != channels.size() || weights.empty()) {
    throw validation_error("sample_branch_means: weights/channels size mismatch");
  }
  if (shots_per_branch < 1) throw validation_error("sample_branch_means: shots must be at least 1");
  std::vector<double> means;
  means.reserve(channels.size());
  const Observable slot_obs{obs, {0}};
  for (std::size_t branch = 0; branch < channels.size(); ++branch) {
    const ComplexMatrix sigma = channels[branch].apply(target.to_density().density_matrix());
    const QuantumState out = QuantumState::density(target.layout(), sigma);
    const auto outcomes = out.born_sample(slot_obs, shots_per_branch, mix_seed({seed, branch}));
    double mean = 0.0;
    for (double o : outcomes) mean += o;
    means.push_back(mean / static_cast<double>(outcomes.size()));
  }
  return means;
}

EstimateResult estimate_naive(std::size_t d, std::size_t q, const std::vector<double>& weights,
                              const std::vector<Channel>& channels, const ComplexMatrix& obs,
                              const QuantumState& target, std::size_t shots_per_branch,
                              std::uint64_t seed) {
  if (weights.size() != d || channels.size() != d) {
    throw validation_error("estimate_naive: expected one weight and one channel per branch");
  }
  const Observable slot_obs{obs, {0}};
  EstimateResult result;
  result.shots = shots_per_branch;
  result.seed = seed;
  result.prep_count = d * q * shots_per_branch;

  double combined = 0.0;
  double variance = 0.0;
  for (std::size_t branch = 0; branch < d; ++branch) {
    const ComplexMatrix sigma = channels[branch].apply(target.to_density().density_matrix());
    const QuantumState out = QuantumState::density(target.layout(), sigma);
    const auto outcomes = out.born_sample(slot_obs, shots_per_branch, mix_seed({seed, branch}));
    double mean = 0.0;
    for (double o : outcomes) mean += o;
    mean /= static_cast<double>(outcomes.size());
    double var = 0.0;
    for (double o : outcomes) var += (o - mean) * (o - mean);
    var = outcomes.size() > 1 ? var / static_cast<double>(outcomes.size() - 1) : 0.0;
    var /= static_cast<double>(outcomes.size());  // variance of the branch mean

    combined += weights[branch] * std::pow(mean, static_cast<double>(q));
    // Delta-method propagation through mean^q.
    const double gradient = static_cast<double>(q) * std::pow(mean, static_cast<double>(q) - 1.0);
    variance += weights[branch] * weights[branch] * gradient * gradient * var;
  }
  result.mean = combined;
  result.std_error = std::sqrt(variance);
  return result;
}

ComplexityInstance default_complexity_instance(std::uint64_t seed) {
  ComplexityInstance instance;
  instance.d = 4;
  instance.q = 1;
  instance.weights.assign(4, 0.25);
  Rng rng = make_rng({seed, 0x1157A9CEULL});
  for (std::size_t i = 0; i < instance.d; ++i) {
    instance.channels.push_back(
        unitary_channel(random_unitary(2, rng), "random_u" + std::to_string(i + 1)));
  }
  instance.observable = gates::sigma_z();
  instance.target = QuantumState::basis(RegisterLayout::single(2), 0);
  return instance;
}

namespace {

std::size_t next_budget(std::size_t budget) {
  const std::size_t grown = static_cast<std::size_t>(static_cast<double>(budget) * 1.12);
  return grown > budget ? grown : budget + 1;
}

constexpr std::size_t kMaxBudget = 1u << 24;

}  // namespace

ComplexityReport complexity_sweep(const ComplexityInstance& instance,
                                  const std::vector<double>& epsilon_grid, double delta,
                                  std::uint64_t seed, std::size_t repetitions) {
  if (epsilon_grid.empty()) throw validation_error("complexity_sweep: empty epsilon grid");
  if (!(delta > 0.0 && delta < 1.0)) throw validation_error("complexity_sweep: delta must lie in (0,1)");
  if (repetitions < 1) throw validation_error("complexity_sweep: need at least one repetition");
  for (double eps : epsilon_grid) {
    if (!(eps > 0.0)) throw validation_error("complexity_sweep: epsilons must be positive");
  }

  const ForkSpec spec = make_power_sum_spec(instance.d, instance.q, instance.weights, instance.channels,
                                            instance.observable, instance.target);
  const double truth = oracle::power_sum(instance.d, instance.q, instance.weights, instance.channels,
                                         instance.observable, instance.target.to_density().density_matrix());
  std::vector<double> branch_truths;
  for (const Channel& ch : instance.channels) {
    const ComplexMatrix sigma = ch.apply(instance.target.to_density().density_matrix());
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < sigma.rows(); ++i) {
      for (std::size_t j = 0; j < sigma.cols(); ++j) acc += instance.observable(i, j) * sigma(j, i);
    }
    branch_truths.push_back(acc.real());
  }

  const std::size_t required = static_cast<std::size_t>(
      std::ceil((1.0 - delta) * static_cast<double>(repetitions)));

  ComplexityReport report;
  report.epsilon_grid = epsilon_grid;
  for (std::size_t e = 0; e < epsilon_grid.size(); ++e) {
    const double eps = epsilon_grid[e];
    const auto start_budget = [&] {
      const double guess = 0.05 / (eps * eps);
      return static_cast<std::size_t>(guess < 8.0 ? 8.0 : guess);
    };

    std::size_t forked = 0;
    for (std::size_t budget = start_budget(); budget <= kMaxBudget; budget = next_budget(budget)) {
      std::size_t hits = 0;
      for (std::size_t rep = 0; rep < repetitions; ++rep) {
        const EstimateResult est = estimate_qfs(spec, budget, mix_seed({seed, e, budget, rep, 0xF0}));
        if (std::abs(est.mean - truth) <= eps) ++hits;
      }
      if (hits >= required) {
        forked = budget;
        break;
      }
    }
    if (forked == 0) throw std::runtime_error("complexity_sweep: forked budget search did not converge");

    std::size_t per_branch = 0;
    for (std::size_t budget = start_budget(); budget <= kMaxBudget; budget = next_budget(budget)) {
      std::size_t hits = 0;
      for (std::size_t rep = 0; rep < repetitions; ++rep) {
        const auto means = sample_branch_means(instance.weights, instance.channels, instance.observable,
                                               instance.target, budget, mix_seed({seed, e, budget, rep, 0xBA}));
        bool all_within = true;
        for (std::size_t b = 0; b < means.size(); ++b) {
          if (std::abs(means[b] - branch_truths[b]) > eps) {
            all_within = false;
            break;
          }
        }
        if (all_within) ++hits;
      }
      if (hits >= required) {
        per_branch = budget;
        break;
      }
    }
    if (per_branch == 0) throw std::runtime_error("complexity_sweep: baseline budget search did not converge");

    const std::size_t naive = instance.d * instance.q * per_branch;
    report.naive_preps.push_back(naive);
    report.qfs_preps.push_back(forked);
    report.ratio.push_back(static_cast<double>(naive) / static_cast<double>(forked));
  }
  return report;
}

std::string to_csv(const ComplexityReport& report) {
  std::string out = "epsilon,naive_preps,qfs_preps,ratio\n";
  for (std::size_t i = 0; i < report.epsilon_grid.size(); ++i) {
    out += format_sig12(report.epsilon_grid[i]);
    out += ',';
    out += std::to_string(report.naive_preps[i]);
    out += ',';
    out += std::to_string(report.qfs_preps[i]);
    out += ',';
    out += format_sig12(report.ratio[i]);
    out += '\n';
  }
  return out;
}

}  // namespace qfs
