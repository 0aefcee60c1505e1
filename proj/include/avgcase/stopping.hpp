#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "avgcase/common.hpp"

namespace avgcase {

// Stage i prizes are drawn independently from stages()[i]; all support
// values are nonnegative.
class StoppingInstance {
 public:
  explicit StoppingInstance(std::vector<DiscreteDistribution> stages);

  std::span<const DiscreteDistribution> stages() const noexcept { return stages_; }
  std::size_t size() const noexcept { return stages_.size(); }

 private:
  std::vector<DiscreteDistribution> stages_;
};

enum class AcceptMode { at_least, strictly_greater };

inline bool passes(double value, double threshold, AcceptMode mode) noexcept {
  return mode == AcceptMode::at_least ? value >= threshold : value > threshold;
}

struct Policy {
  std::vector<double> thresholds;
  std::vector<AcceptMode> modes;
};

struct ThresholdRule {
  double threshold = 0.0;
  AcceptMode mode = AcceptMode::at_least;
};

struct OptimalStopping {
  Policy policy;
  double value = 0.0;
};

// Thresholds tau_i = V_{i+1}, with V_{n+1} = 0 and V_i = E[max(v_i, V_{i+1})].
// Ties are accepted.
OptimalStopping backward_induction_policy(const StoppingInstance& inst);

// q(t) = P(v_i < t for every stage); q(t) under strictly-greater mode is
// P(v_i <= t for every stage).
double failure_probability(const StoppingInstance& inst, ThresholdRule rule);

// Single threshold with failure probability 1/2. When the point masses make
// q skip over 1/2, returns the crossing support value with whichever accept
// mode has the larger exact value.
ThresholdRule median_threshold(const StoppingInstance& inst);

double threshold_rule_value(const StoppingInstance& inst, ThresholdRule rule);

// Exact forward evaluation of a per-stage threshold policy.
double policy_value(const StoppingInstance& inst, const Policy& policy);

double expected_max(const StoppingInstance& inst);

struct SimulationSummary {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

SimulationSummary simulate_policy(const StoppingInstance& inst, const Policy& policy, std::size_t trials,
                                  Rng& rng);

Policy single_threshold_policy(std::size_t stages, ThresholdRule rule);

// Random instance with `stages` stages, each with 1..max_support atoms on a
// 1e-3 grid in [0,10).
StoppingInstance random_stopping_instance(std::size_t stages, std::size_t max_support, Rng& rng);

}  // namespace avgcase
