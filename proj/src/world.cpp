#include "bapp/world.hpp"

#include <algorithm>
#include <cmath>

#include "bapp/errors.hpp"
#include "bapp/planner.hpp"

namespace bapp {

void AgentSpec::validate() const {
  if (!(malfunction_rate >= 0.0 && malfunction_rate < 1.0)) {
    throw ConfigError("agent malfunction rate must lie in [0, 1)");
  }
  if (stock < 0) {
    throw ConfigError("agent stock must be >= 0");
  }
}

GroundTruthMap generate_world(const GridDims& dims, const WorldParams& params, Rng& rng) {
  if (!(params.hazard_density >= 0.0 && params.hazard_density < 1.0)) {
    throw InvalidParameter("hazard density must lie in [0, 1)");
  }
  if (!(params.lethality >= 0.0 && params.lethality <= 1.0)) {
    throw InvalidParameter("lethality must lie in [0, 1]");
  }
  if (params.cluster_size < 1) {
    throw InvalidParameter("cluster size must be >= 1");
  }
  const std::size_t n = dims.cell_count();
  GroundTruthMap truth{dims, std::vector<std::uint8_t>(n, 0), std::vector<double>(n, 0.0)};

  std::vector<std::uint8_t> eligible(n, 1);
  if (params.keep_clear && dims.contains(*params.keep_clear)) {
    eligible[*params.keep_clear] = 0;
  }
  const std::size_t capacity = static_cast<std::size_t>(std::count(eligible.begin(), eligible.end(), 1));
  const auto target =
      std::min(capacity, static_cast<std::size_t>(std::llround(params.hazard_density * static_cast<double>(n))));
  if (target == 0) {
    return truth;
  }

  auto is_free = [&](CellIndex c) { return eligible[c] != 0 && truth.hazards[c] == 0; };
  auto mark = [&](CellIndex c) {
    truth.hazards[c] = 1;
    truth.lethality[c] = params.lethality;
  };
  auto random_free = [&]() {
    std::vector<CellIndex> free;
    for (CellIndex c = 0; c < n; ++c) {
      if (is_free(c)) {
        free.push_back(c);
      }
    }
    return free[rng.below(free.size())];
  };

  const std::size_t seeds = std::max<std::size_t>(
      1, (target + static_cast<std::size_t>(params.cluster_size) - 1) / static_cast<std::size_t>(params.cluster_size));
  std::vector<std::vector<CellIndex>> clusters;
  std::size_t placed = 0;
  for (std::size_t k = 0; k < seeds && placed < target; ++k) {
    const CellIndex c = random_free();
    mark(c);
    clusters.push_back({c});
    ++placed;
  }

  while (placed < target) {
    auto& blob = clusters[rng.below(clusters.size())];
    std::vector<CellIndex> frontier;
    for (CellIndex member : blob) {
      for (CellIndex nb : neighbors(member, dims)) {
        if (is_free(nb) && std::find(frontier.begin(), frontier.end(), nb) == frontier.end()) {
          frontier.push_back(nb);
        }
      }
    }
    if (frontier.empty()) {
      const CellIndex c = random_free();
      mark(c);
      clusters.push_back({c});
    } else {
      std::sort(frontier.begin(), frontier.end());
      const CellIndex c = frontier[rng.below(frontier.size())];
      mark(c);
      blob.push_back(c);
    }
    ++placed;
  }
  return truth;
}

ExecutionResult execute_deployment(const GroundTruthMap& truth, std::span<const CellIndex> path,
                                   const AgentSpec& agent, const CoinFlips& flips) {
  for (std::size_t k = 0; k < path.size(); ++k) {
    const CellIndex c = path[k];
    if (!truth.dims.contains(c)) {
      throw OutOfBounds("path cell outside the world");
    }
    const double rate = truth.hazards[c] ? truth.lethality[c] : agent.malfunction_rate;
    if (flips.at(k) < rate) {
      return {PathOutcome::Lost, k};
    }
  }
  return {};
}

}  // namespace bapp
