#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bapp/belief_map.hpp"
#include "bapp/planner.hpp"
#include "bapp/rng.hpp"

namespace bapp {

enum class StrategyKind { StdItp, Random, BappSig, BappTid };
enum class AgentClass { Disposable, HighFidelity };

std::string_view to_string(StrategyKind kind);
std::string_view to_string(AgentClass cls);
StrategyKind parse_strategy(std::string_view name);

/// Loss-driven alpha interpolation plus a local sweep around it.
struct SigPolicy {
  double alpha_min = 0.5;
  double alpha_max = 1.5;
  double sweep_halfwidth = 0.2;  // epsilon
  double sweep_step = 0.1;       // delta

  void validate() const;
};

/// Entropy-stagnation trigger for high-fidelity deployments.
struct TriggerPolicy {
  int window = 3;              // tau, in deployment steps
  double theta_early = 0.02;   // bits of mean map entropy
  int phase_switch = 30;       // d^T
  double eps_min = 0.01;
  double eps_max = 0.05;
  double decay_rate = 0.001;   // per deployment step

  void validate() const;
  /// Late-phase threshold max(eps_min, eps_max - decay_rate * d).
  [[nodiscard]] double late_threshold(int d) const;
};

struct FleetState {
  int r_lost = 0;
  int r_total = 1;
  int disposable_remaining = 0;
  int high_fidelity_remaining = 0;
  int deployment_index = 0;            // d
  std::vector<double> entropy_history;  // H_0 .. H_d, bits
};

struct StrategyPolicies {
  SigPolicy sig;
  TriggerPolicy trigger;
  PlanConfig plan;             // horizon, beam, MI form and mask; alpha is set per strategy
  double alpha_explore = 1.2;  // BAPP-TID disposable explorers
  double alpha_high_fidelity = 1.0;
};

struct AgentChannels {
  BinaryChannel disposable;
  BinaryChannel high_fidelity;

  [[nodiscard]] const BinaryChannel& for_class(AgentClass cls) const {
    return cls == AgentClass::HighFidelity ? high_fidelity : disposable;
  }
};

struct Deployment {
  AgentClass agent = AgentClass::Disposable;
  Trajectory trajectory;
  double alpha_used = 1.0;
  double score = 0.0;
  bool triggered = false;
};

double sig_alpha(const FleetState& fleet, const SigPolicy& policy);

/// Sweep grid {a - eps, a - eps + delta, ..., a + eps}, positive entries only.
std::vector<double> sig_sweep_grid(double alpha_hat, const SigPolicy& policy);

struct SigChoice {
  PlanResult plan;
  double alpha_used = 1.0;
};

SigChoice sig_select_path(const FleetState& fleet, const SigPolicy& policy, const BeliefMap& belief,
                          CellIndex start, const PlanConfig& plan, const BinaryChannel& channel);

/// Entropy drop over the trailing window, H_{d - tau} - H_d (H_0 when d < tau).
double windowed_entropy_drop(const FleetState& fleet, int window);

bool tid_should_trigger(const FleetState& fleet, const TriggerPolicy& policy);

/// Picks agent class, alpha and path. Returns nullopt when no agent of a
/// usable class remains (mission over). `rng` is only consumed by Random.
std::optional<Deployment> select_deployment(StrategyKind strategy, const FleetState& fleet,
                                            const BeliefMap& belief, CellIndex start,
                                            const StrategyPolicies& policies, const AgentChannels& channels,
                                            Rng& rng);

}  // namespace bapp
