#include "bapp/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bapp/errors.hpp"

namespace bapp {

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::StdItp:
      return "std-itp";
    case StrategyKind::Random:
      return "random";
    case StrategyKind::BappSig:
      return "bapp-sig";
    case StrategyKind::BappTid:
      return "bapp-tid";
  }
  return "unknown";
}

std::string_view to_string(AgentClass cls) {
  return cls == AgentClass::HighFidelity ? "high-fidelity" : "disposable";
}

StrategyKind parse_strategy(std::string_view name) {
  for (auto kind : {StrategyKind::StdItp, StrategyKind::Random, StrategyKind::BappSig, StrategyKind::BappTid}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw ConfigError("unknown strategy '" + std::string(name) + "'");
}

void SigPolicy::validate() const {
  if (!(alpha_min > 0.0) || alpha_max < alpha_min) {
    throw ConfigError("SIG policy needs 0 < alpha_min <= alpha_max");
  }
  if (sweep_halfwidth < 0.0 || !(sweep_step > 0.0)) {
    throw ConfigError("SIG policy needs sweep_halfwidth >= 0 and sweep_step > 0");
  }
}

void TriggerPolicy::validate() const {
  if (window < 1 || !(theta_early > 0.0) || phase_switch < 0) {
    throw ConfigError("trigger policy needs window >= 1, theta_early > 0, phase_switch >= 0");
  }
  if (!(eps_min > 0.0) || eps_max < eps_min || decay_rate < 0.0) {
    throw ConfigError("trigger policy needs 0 < eps_min <= eps_max and decay_rate >= 0");
  }
}

double TriggerPolicy::late_threshold(int d) const {
  return std::max(eps_min, eps_max - decay_rate * static_cast<double>(d));
}

double sig_alpha(const FleetState& fleet, const SigPolicy& policy) {
  if (fleet.r_total <= 0) {
    throw InvalidParameter("fleet has no robots");
  }
  const double frac = static_cast<double>(fleet.r_lost) / static_cast<double>(fleet.r_total);
  const double a = policy.alpha_min + (policy.alpha_max - policy.alpha_min) * frac;
  return std::clamp(a, policy.alpha_min, policy.alpha_max);
}

std::vector<double> sig_sweep_grid(double alpha_hat, const SigPolicy& policy) {
  std::vector<double> grid;
  const auto steps = static_cast<long>(std::floor(2.0 * policy.sweep_halfwidth / policy.sweep_step + 1e-9));
  for (long k = 0; k <= steps; ++k) {
    const double a = alpha_hat - policy.sweep_halfwidth + static_cast<double>(k) * policy.sweep_step;
    if (a > 0.0) {
      grid.push_back(a);
    }
  }
  return grid;
}

SigChoice sig_select_path(const FleetState& fleet, const SigPolicy& policy, const BeliefMap& belief,
                          CellIndex start, const PlanConfig& plan, const BinaryChannel& channel) {
  const double alpha_hat = sig_alpha(fleet, policy);
  const auto grid = sig_sweep_grid(alpha_hat, policy);
  if (grid.empty()) {
    throw InvalidParameter("alpha sweep is empty after clipping to positive values");
  }
  std::optional<SigChoice> best;
  for (double a : grid) {
    PlanConfig cfg = plan;
    cfg.alpha = a;
    auto planned = plan_path(belief, start, cfg, channel);
    // Strictly greater keeps the smaller alpha on ties.
    if (!best || planned.score > best->plan.score) {
      best = SigChoice{std::move(planned), a};
    }
  }
  return *best;
}

double windowed_entropy_drop(const FleetState& fleet, int window) {
  const auto& h = fleet.entropy_history;
  if (h.empty()) {
    throw InvalidParameter("entropy history is empty");
  }
  const int d = std::min(fleet.deployment_index, static_cast<int>(h.size()) - 1);
  const int ref = std::max(0, d - window);
  return h[static_cast<std::size_t>(ref)] - h[static_cast<std::size_t>(d)];
}

bool tid_should_trigger(const FleetState& fleet, const TriggerPolicy& policy) {
  if (fleet.high_fidelity_remaining <= 0) {
    return false;
  }
  const double drop = windowed_entropy_drop(fleet, policy.window);
  const int d = fleet.deployment_index;
  if (d <= policy.phase_switch) {
    return drop < policy.theta_early;
  }
  return drop < policy.late_threshold(d);
}

std::optional<Deployment> select_deployment(StrategyKind strategy, const FleetState& fleet,
                                            const BeliefMap& belief, CellIndex start,
                                            const StrategyPolicies& policies, const AgentChannels& channels,
                                            Rng& rng) {
  auto planned = [&](AgentClass cls, double alpha) {
    PlanConfig cfg = policies.plan;
    cfg.alpha = alpha;
    auto result = plan_path(belief, start, cfg, channels.for_class(cls));
    Deployment dep;
    dep.agent = cls;
    dep.trajectory = std::move(result.trajectory);
    dep.alpha_used = alpha;
    dep.score = result.score;
    return dep;
  };

  switch (strategy) {
    case StrategyKind::StdItp:
      if (fleet.disposable_remaining <= 0) {
        return std::nullopt;
      }
      return planned(AgentClass::Disposable, 1.0);

    case StrategyKind::Random: {
      if (fleet.disposable_remaining <= 0) {
        return std::nullopt;
      }
      Deployment dep;
      dep.agent = AgentClass::Disposable;
      dep.trajectory = random_walk(start, policies.plan.horizon, belief.dims(), policies.plan.mask, rng);
      dep.alpha_used = 1.0;
      dep.score = score_path(belief, dep.trajectory, channels.disposable, 1.0, policies.plan.mi_form);
      return dep;
    }

    case StrategyKind::BappSig: {
      if (fleet.disposable_remaining <= 0) {
        return std::nullopt;
      }
      auto choice = sig_select_path(fleet, policies.sig, belief, start, policies.plan, channels.disposable);
      Deployment dep;
      dep.agent = AgentClass::Disposable;
      dep.trajectory = std::move(choice.plan.trajectory);
      dep.alpha_used = choice.alpha_used;
      dep.score = choice.plan.score;
      return dep;
    }

    case StrategyKind::BappTid: {
      if (tid_should_trigger(fleet, policies.trigger)) {
        auto dep = planned(AgentClass::HighFidelity, policies.alpha_high_fidelity);
        dep.triggered = true;
        return dep;
      }
      if (fleet.disposable_remaining > 0) {
        return planned(AgentClass::Disposable, policies.alpha_explore);
      }
      if (fleet.high_fidelity_remaining > 0) {
        return planned(AgentClass::HighFidelity, policies.alpha_high_fidelity);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace bapp
