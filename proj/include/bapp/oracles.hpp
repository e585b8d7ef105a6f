#pragma once

// Brute-force reference computations. They deliberately avoid the
// incremental formulas of the belief and planner modules and are used only
// to check them.

#include <cstdint>
#include <vector>

#include "bapp/belief_map.hpp"
#include "bapp/planner.hpp"

namespace bapp::oracle {

/// Posterior marginals P(X_i = 1 | Theta) for every grid cell, by summing
/// over all hazard configurations of the distinct path cells and, for a
/// failure, every possible first-failure position.
std::vector<double> posterior_by_enumeration(const BeliefMap& belief, const std::vector<CellIndex>& path,
                                             const BinaryChannel& channel, PathOutcome outcome);

/// P(Theta = 1) by the same enumeration.
double failure_prob_by_enumeration(const BeliefMap& belief, const std::vector<CellIndex>& path,
                                   const BinaryChannel& channel);

/// I(X;Z) = H(X) + H(Z) - H(X,Z) from the 2x2 joint table.
double mutual_information_joint(double prior, const BinaryChannel& channel);

struct ExhaustivePlan {
  Trajectory best;
  double score = 0.0;
  std::uint64_t sequences = 0;
};

/// Enumerates every 9-connected move sequence of the configured horizon.
ExhaustivePlan plan_by_enumeration(const BeliefMap& belief, CellIndex start, const PlanConfig& config,
                                   const BinaryChannel& channel);

struct OracleSummary {
  std::uint64_t cases = 0;
  double max_abs_error = 0.0;
  bool passed = true;
};

/// Every path of length 1..max_len on a 3x3 grid, beliefs drawn from
/// {0.1, 0.5, 0.9} per cell (seeded), both outcomes, channels (0.7, 0.1)
/// and (0.9, 0.1). Also checks the martingale identity.
OracleSummary check_belief_updates(int max_len, int belief_draws, std::uint64_t seed, double tolerance);

/// plan_path with an unbounded beam vs plan_by_enumeration on 3x3, T = 3.
OracleSummary check_planner(int instances, std::uint64_t seed);

}  // namespace bapp::oracle
