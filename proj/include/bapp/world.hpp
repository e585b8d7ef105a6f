#pragma once

#include <optional>
#include <span>

#include "bapp/belief_map.hpp"
#include "bapp/rng.hpp"
#include "bapp/strategies.hpp"

namespace bapp {

struct AgentSpec {
  AgentClass agent_class = AgentClass::Disposable;
  double malfunction_rate = 0.10;  // per step, in non-hazardous cells
  int stock = 0;

  void validate() const;
};

inline AgentSpec default_disposable(int stock) { return {AgentClass::Disposable, 0.10, stock}; }
inline AgentSpec default_high_fidelity(int stock) { return {AgentClass::HighFidelity, 0.01, stock}; }

struct WorldParams {
  double hazard_density = 0.15;
  double lethality = 0.7;
  int cluster_size = 6;                   // mean hazardous cells per seeded blob
  std::optional<CellIndex> keep_clear;    // never hazardous (the base site)
};

/// Seeded blob growth: cluster seeds are drawn first, then blobs grow
/// through 8-connected free neighbours until exactly
/// round(density * cells) cells are hazardous.
GroundTruthMap generate_world(const GridDims& dims, const WorldParams& params, Rng& rng);

struct ExecutionResult {
  PathOutcome outcome = PathOutcome::Returned;
  std::optional<std::size_t> failure_step;  // 0-based index into the path
};

/// Walks the path; at step k the robot fails when flips.at(k) falls below
/// the cell's lethality (hazardous) or the agent's malfunction rate.
ExecutionResult execute_deployment(const GroundTruthMap& truth, std::span<const CellIndex> path,
                                   const AgentSpec& agent, const CoinFlips& flips);

}  // namespace bapp
