#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "avgcase/records.hpp"

namespace avgcase {

struct ParamSpec {
  std::string_view name;
  std::string_view default_value;
  std::string_view help;
};

struct ExperimentSpec {
  std::string_view name;
  std::string_view summary;
  std::vector<ParamSpec> params;
};

// Every runnable experiment. Graph experiments are named `graphs.<sub>`.
std::span<const ExperimentSpec> experiment_catalog();
const ExperimentSpec* find_experiment(std::string_view name);

struct ExperimentConfig {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  // omitted ones take defaults
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

struct ExperimentOutcome {
  std::vector<ExperimentRecord> records;
  // Runtime property checks that failed (prophet ratio below 1/2, FFD worse
  // than TM, Stitch shorter than the exact tour, ...). Empty on success.
  std::vector<std::string> violations;
};

// Throws std::invalid_argument naming the offending parameter for unknown
// experiments, unknown parameters or malformed values.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

// Same checks as run_experiment without doing any work.
void validate_experiment(const ExperimentConfig& config);

}  // namespace avgcase
