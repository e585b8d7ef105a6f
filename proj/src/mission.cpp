#include "bapp/mission.hpp"

#include <utility>

#include "bapp/errors.hpp"

namespace bapp {
namespace {

enum StreamTag : std::uint64_t { kWorldStream = 1, kFailureStream = 2, kWalkStream = 3 };

}  // namespace

void MissionConfig::validate() const {
  if (team_size < 1 || horizon < 1) {
    throw ConfigError("team size and horizon must be >= 1");
  }
  if (deployment_budget < 0) {
    throw ConfigError("deployment budget must be >= 0");
  }
  if (!(lethality >= 0.0 && lethality <= 1.0)) {
    throw ConfigError("lethality must lie in [0, 1]");
  }
  if (!(hazard_density >= 0.0 && hazard_density < 1.0)) {
    throw ConfigError("hazard density must lie in [0, 1)");
  }
  if (cluster_size < 1) {
    throw ConfigError("cluster size must be >= 1");
  }
  if (base_cell && !dims.contains(*base_cell)) {
    throw ConfigError("base cell outside the grid");
  }
  if (disposable.agent_class != AgentClass::Disposable || high_fidelity.agent_class != AgentClass::HighFidelity) {
    throw ConfigError("agent specs have mismatched classes");
  }
  if (disposable.stock + high_fidelity.stock < 1) {
    throw ConfigError("fleet is empty");
  }
  disposable.validate();
  high_fidelity.validate();
  policies.sig.validate();
  policies.trigger.validate();
  if (policies.plan.beam_width < 1) {
    throw ConfigError("beam width must be >= 1");
  }
  if (!(policies.alpha_explore > 0.0) || !(policies.alpha_high_fidelity > 0.0)) {
    throw ConfigError("planning alphas must be > 0");
  }
  relocation.validate();
}

CellIndex MissionConfig::initial_base() const { return base_cell.value_or(dims.center()); }

AgentChannels MissionConfig::channels() const {
  return {BinaryChannel(lethality, disposable.malfunction_rate),
          BinaryChannel(lethality, high_fidelity.malfunction_rate)};
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  return derive_seed(master_seed, {static_cast<std::uint64_t>(trial)});
}

std::optional<int> first_reaching(const std::vector<double>& entropy, double threshold) {
  for (std::size_t d = 0; d < entropy.size(); ++d) {
    if (entropy[d] <= threshold) {
      return static_cast<int>(d);
    }
  }
  return std::nullopt;
}

TrialResult run_trial(const MissionConfig& config, int trial, std::uint64_t seed) {
  config.validate();
  const GridDims dims = config.dims;
  const int n = config.team_size;
  const auto channels = config.channels();

  TrialResult result;
  result.trial = trial;
  result.seed = seed;

  Rng world_rng(derive_seed(seed, {kWorldStream}));
  const WorldParams world_params{config.hazard_density, config.lethality, config.cluster_size,
                                 config.initial_base()};
  const GroundTruthMap truth = generate_world(dims, world_params, world_rng);
  result.hazard_count = truth.hazard_count();

  BasePose base{config.initial_base()};
  // The team starts on its own base, so that cell is known clear.
  std::vector<double> prior(dims.cell_count(), 0.5);
  prior[base.cell] = 0.0;
  BeliefMap belief(dims, std::move(prior));

  FleetState fleet;
  fleet.r_total = config.disposable.stock + config.high_fidelity.stock;
  fleet.disposable_remaining = config.disposable.stock;
  fleet.high_fidelity_remaining = config.high_fidelity.stock;
  fleet.entropy_history.push_back(global_entropy(belief));

  result.metrics.entropy.push_back(fleet.entropy_history.back());
  result.metrics.losses.push_back(0);

  for (int d = 1; d <= config.deployment_budget; ++d) {
    if (config.relocate_base && d > 1 && (d - 1) % config.relocation.cadence == 0) {
      base = select_base_site(belief, base, config.relocation, n);
    }
    const Partition partition = radial_partition(base, dims, n);

    // Decisions for the whole round are taken on the start-of-round snapshot.
    FleetState round = fleet;
    round.deployment_index = static_cast<int>(fleet.entropy_history.size()) - 1;
    std::vector<std::pair<int, Deployment>> planned;
    for (int s = 0; s < n; ++s) {
      StrategyPolicies policies = config.policies;
      policies.plan.horizon = config.horizon;
      policies.plan.mask = n == 1 ? CellMask::all() : partition.mask_for(s);
      Rng walk_rng(derive_seed(seed, {kWalkStream, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(s)}));
      auto dep = select_deployment(config.strategy, round, belief, base.cell, policies, channels, walk_rng);
      if (!dep) {
        break;
      }
      if (dep->agent == AgentClass::HighFidelity) {
        --round.high_fidelity_remaining;
      } else {
        --round.disposable_remaining;
      }
      planned.emplace_back(s, std::move(*dep));
    }
    if (planned.empty()) {
      break;
    }
    result.base_trail.push_back(base.cell);

    for (auto& [sector, dep] : planned) {
      const AgentSpec& agent = config.agent(dep.agent);
      const CoinFlips flips(
          derive_seed(seed, {kFailureStream, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(sector)}));
      const auto exec = execute_deployment(truth, dep.trajectory.cells, agent, flips);
      belief = update_on_outcome(belief, dep.trajectory.cells, channels.for_class(dep.agent), exec.outcome);
      if (exec.outcome == PathOutcome::Lost) {
        ++fleet.r_lost;
        if (dep.agent == AgentClass::HighFidelity) {
          --fleet.high_fidelity_remaining;
        } else {
          --fleet.disposable_remaining;
        }
      }

      DeploymentRecord rec;
      rec.trial = trial;
      rec.d = d;
      rec.sector = sector;
      rec.agent = dep.agent;
      rec.alpha_used = dep.alpha_used;
      rec.triggered = dep.triggered;
      rec.trajectory = std::move(dep.trajectory);
      rec.outcome = exec.outcome;
      rec.failure_step = exec.failure_step;
      rec.entropy_bits = global_entropy(belief);
      rec.cum_losses = fleet.r_lost;
      result.records.push_back(std::move(rec));
    }

    fleet.entropy_history.push_back(global_entropy(belief));
    result.metrics.entropy.push_back(fleet.entropy_history.back());
    result.metrics.losses.push_back(fleet.r_lost);
  }

  result.metrics.rounds_to_half = first_reaching(result.metrics.entropy, kHalfEntropy);
  return result;
}

}  // namespace bapp
