#pragma once

#include <optional>
#include <vector>

#include "bapp/mission.hpp"

namespace bapp {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single value
};

MeanStd mean_std(const std::vector<double>& values);

struct ExperimentReport {
  MissionConfig config;
  std::vector<TrialResult> trials;
  // Per-round aggregates; trials that ended early carry their last value.
  std::vector<MeanStd> entropy_by_round;
  std::vector<MeanStd> losses_by_round;
  MeanStd final_entropy;
  MeanStd final_losses;
  std::optional<MeanStd> rounds_to_half;  // over trials that reached it
  int reached_half = 0;
};

/// Runs `trials` missions with seeds derived from config.master_seed. The
/// report does not depend on `workers`.
ExperimentReport run_experiment(const MissionConfig& config, int trials, unsigned workers = 1);

ExperimentReport aggregate(const MissionConfig& config, std::vector<TrialResult> trials);

}  // namespace bapp
