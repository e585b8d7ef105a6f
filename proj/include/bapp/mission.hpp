#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bapp/base_coordination.hpp"
#include "bapp/strategies.hpp"
#include "bapp/world.hpp"

namespace bapp {

struct MissionConfig {
  std::string name = "custom";
  GridDims dims{10, 10};
  double lethality = 0.7;
  double hazard_density = 0.15;
  int cluster_size = 6;
  int team_size = 1;          // n, one robot per sector per round
  int horizon = 15;           // T
  int deployment_budget = 150;  // rounds
  StrategyKind strategy = StrategyKind::StdItp;
  AgentSpec disposable = default_disposable(10000);
  AgentSpec high_fidelity = default_high_fidelity(0);
  StrategyPolicies policies;
  bool relocate_base = false;
  RelocationPolicy relocation;
  std::optional<CellIndex> base_cell;  // grid center when unset
  std::uint64_t master_seed = 1;

  void validate() const;
  [[nodiscard]] CellIndex initial_base() const;
  [[nodiscard]] AgentChannels channels() const;
  [[nodiscard]] const AgentSpec& agent(AgentClass cls) const {
    return cls == AgentClass::HighFidelity ? high_fidelity : disposable;
  }
};

struct DeploymentRecord {
  int trial = 0;
  int d = 0;  // round, 1-based
  int sector = 0;
  AgentClass agent = AgentClass::Disposable;
  double alpha_used = 1.0;
  bool triggered = false;
  Trajectory trajectory;
  PathOutcome outcome = PathOutcome::Returned;
  std::optional<std::size_t> failure_step;  // simulator-side only
  double entropy_bits = 1.0;                // after this deployment's update
  int cum_losses = 0;
};

struct TrialMetrics {
  std::vector<double> entropy;  // H_0 .. H_D per round, bits
  std::vector<int> losses;      // cumulative, aligned with entropy
  std::optional<int> rounds_to_half;  // first d with H_d <= 0.5

  [[nodiscard]] double final_entropy() const { return entropy.back(); }
  [[nodiscard]] int final_losses() const { return losses.back(); }
};

struct TrialResult {
  int trial = 0;
  std::uint64_t seed = 0;
  TrialMetrics metrics;
  std::vector<DeploymentRecord> records;
  std::vector<CellIndex> base_trail;  // base cell used in each round
  std::size_t hazard_count = 0;
};

inline constexpr double kHalfEntropy = 0.5;

std::uint64_t trial_seed(std::uint64_t master_seed, int trial);

/// One closed-loop mission: relocate, partition, select, execute, update, log.
TrialResult run_trial(const MissionConfig& config, int trial, std::uint64_t seed);

std::optional<int> first_reaching(const std::vector<double>& entropy, double threshold);

}  // namespace bapp
