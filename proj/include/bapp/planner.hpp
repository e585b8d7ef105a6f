#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "bapp/belief_map.hpp"
#include "bapp/grid.hpp"
#include "bapp/info_measures.hpp"
#include "bapp/rng.hpp"

namespace bapp {

inline constexpr std::size_t kUnboundedBeam = std::numeric_limits<std::size_t>::max();

struct PlanConfig {
  int horizon = 15;
  std::size_t beam_width = 64;
  double alpha = 1.0;
  MiForm mi_form = MiForm::Posterior;
  CellMask mask;

  void validate() const;
};

struct PlanResult {
  Trajectory trajectory;
  double score = 0.0;  // expected information, nats
};

/// 9-connected moves (8 neighbours + stay), row-major order, filtered by
/// grid bounds and mask. The cell itself is always included.
std::vector<CellIndex> neighbors(CellIndex cell, const GridDims& dims, const CellMask& mask = {});

/// Per-cell expected information used by the planner: I_B clamped at 0.
double cell_information(double p, const BinaryChannel& channel, double alpha, MiForm form);

/// Survival-discounted sum of first-visit information along the path.
double score_path(const BeliefMap& belief, const Trajectory& path, const BinaryChannel& channel,
                  double alpha, MiForm form = MiForm::Posterior);

/// Beam search over the motion-primitive graph; ties resolve to the
/// lexicographically smallest cell sequence.
PlanResult plan_path(const BeliefMap& belief, CellIndex start, const PlanConfig& config,
                     const BinaryChannel& channel);

/// Uniform random walk over neighbors(); baseline planner.
Trajectory random_walk(CellIndex start, int horizon, const GridDims& dims, const CellMask& mask, Rng& rng);

/// True when consecutive cells are 9-adjacent and every cell is in bounds
/// and in the mask.
bool is_valid_trajectory(const Trajectory& path, const GridDims& dims, const CellMask& mask = {});

}  // namespace bapp
