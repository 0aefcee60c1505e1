#include "avgcase/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace avgcase {

StoppingInstance::StoppingInstance(std::vector<DiscreteDistribution> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) throw std::invalid_argument("stopping instance needs at least one stage");
  for (const auto& d : stages_)
    if (d.min_value() < 0.0) throw std::invalid_argument("prize values must be nonnegative");
}

OptimalStopping backward_induction_policy(const StoppingInstance& inst) {
  const auto stages = inst.stages();
  OptimalStopping result;
  result.policy.thresholds.assign(stages.size(), 0.0);
  result.policy.modes.assign(stages.size(), AcceptMode::at_least);
  double continuation = 0.0;
  for (std::size_t i = stages.size(); i-- > 0;) {
    result.policy.thresholds[i] = continuation;
    double value = 0.0;
    for (const Atom& a : stages[i].support()) value += std::max(a.value, continuation) * a.prob;
    continuation = value;
  }
  result.value = continuation;
  return result;
}

namespace {

struct StageSplit {
  double fail_prob = 0.0;   // P(prize rejected)
  double accepted_mass = 0.0;  // E[v * 1{accepted}]
};

StageSplit split_stage(const DiscreteDistribution& d, double threshold, AcceptMode mode) {
  StageSplit s;
  for (const Atom& a : d.support()) {
    if (passes(a.value, threshold, mode))
      s.accepted_mass += a.value * a.prob;
    else
      s.fail_prob += a.prob;
  }
  s.fail_prob = std::min(s.fail_prob, 1.0);
  return s;
}

}  // namespace

double failure_probability(const StoppingInstance& inst, ThresholdRule rule) {
  double q = 1.0;
  for (const auto& d : inst.stages()) q *= split_stage(d, rule.threshold, rule.mode).fail_prob;
  return q;
}

double policy_value(const StoppingInstance& inst, const Policy& policy) {
  const auto stages = inst.stages();
  if (policy.thresholds.size() != stages.size() || policy.modes.size() != stages.size())
    throw std::invalid_argument("policy length does not match instance");
  double reach = 1.0;
  double value = 0.0;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageSplit s = split_stage(stages[i], policy.thresholds[i], policy.modes[i]);
    value += reach * s.accepted_mass;
    reach *= s.fail_prob;
  }
  return value;
}

Policy single_threshold_policy(std::size_t stages, ThresholdRule rule) {
  return Policy{std::vector<double>(stages, rule.threshold), std::vector<AcceptMode>(stages, rule.mode)};
}

double threshold_rule_value(const StoppingInstance& inst, ThresholdRule rule) {
  return policy_value(inst, single_threshold_policy(inst.size(), rule));
}

ThresholdRule median_threshold(const StoppingInstance& inst) {
  const std::vector<double> values = support_union(inst.stages());
  // all_at_most[j] = P(every prize <= values[j]); the failure probability of
  // an at-least rule at values[j+1].
  std::vector<double> all_at_most(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    double p = 1.0;
    for (const auto& d : inst.stages()) p *= d.cdf(values[j]);
    all_at_most[j] = p;
  }

  for (std::size_t j = 0; j + 1 < values.size(); ++j)
    if (std::abs(all_at_most[j] - 0.5) <= kProbabilitySumTolerance)
      return {values[j + 1], AcceptMode::at_least};

  std::size_t crossing = values.size() - 1;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (all_at_most[j] >= 0.5) {
      crossing = j;
      break;
    }
  }
  const ThresholdRule inclusive{values[crossing], AcceptMode::at_least};
  const ThresholdRule exclusive{values[crossing], AcceptMode::strictly_greater};
  return threshold_rule_value(inst, exclusive) > threshold_rule_value(inst, inclusive) ? exclusive
                                                                                       : inclusive;
}

double expected_max(const StoppingInstance& inst) { return expected_max(inst.stages()); }

SimulationSummary simulate_policy(const StoppingInstance& inst, const Policy& policy, std::size_t trials,
                                  Rng& rng) {
  const auto stages = inst.stages();
  if (policy.thresholds.size() != stages.size() || policy.modes.size() != stages.size())
    throw std::invalid_argument("policy length does not match instance");
  if (trials == 0) throw std::invalid_argument("simulation needs at least one trial");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    double reward = 0.0;
    for (std::size_t i = 0; i < stages.size(); ++i) {
      const double v = sample(stages[i], rng);
      if (passes(v, policy.thresholds[i], policy.modes[i])) {
        reward = v;
        break;
      }
    }
    sum += reward;
    sum_sq += reward * reward;
  }
  SimulationSummary s;
  s.trials = trials;
  s.mean = sum / static_cast<double>(trials);
  const double var = std::max(0.0, sum_sq / static_cast<double>(trials) - s.mean * s.mean);
  s.standard_error = std::sqrt(var / static_cast<double>(trials));
  return s;
}

StoppingInstance random_stopping_instance(std::size_t stages, std::size_t max_support, Rng& rng) {
  if (stages == 0 || max_support == 0)
    throw std::invalid_argument("random instance needs stages >= 1 and support size >= 1");
  std::vector<DiscreteDistribution> dists;
  dists.reserve(stages);
  for (std::size_t i = 0; i < stages; ++i) {
    const std::size_t size = 1 + static_cast<std::size_t>(rng.uniform_index(max_support));
    std::vector<double> values;
    for (std::size_t k = 0; k < size; ++k)
      values.push_back(static_cast<double>(rng.uniform_index(10000)) / 1000.0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<double> weights;
    double total = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      weights.push_back(0.05 + rng.uniform());
      total += weights.back();
    }
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < values.size(); ++k) atoms.push_back({values[k], weights[k] / total});
    dists.emplace_back(std::move(atoms));
  }
  return StoppingInstance(std::move(dists));
}

}  // namespace avgcase
