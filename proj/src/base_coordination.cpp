#include "bapp/base_coordination.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numbers>

#include "bapp/errors.hpp"
#include "bapp/planner.hpp"

namespace bapp {

void RelocationPolicy::validate() const {
  if (!(explore_radius > 0.0) || !(search_radius > 0.0)) {
    throw ConfigError("relocation radii must be > 0");
  }
  if (!(safety_threshold > 0.0 && safety_threshold < 1.0)) {
    throw ConfigError("relocation safety threshold must lie in (0, 1)");
  }
  if (cadence < 1) {
    throw ConfigError("relocation cadence must be >= 1");
  }
}

CellMask Partition::mask_for(int sector) const {
  CellMask mask(assignment.size());
  for (CellIndex c = 0; c < assignment.size(); ++c) {
    if (assignment[c] == sector || in_hub(c)) {
      mask.allow(c);
    }
  }
  return mask;
}

bool Partition::in_hub(CellIndex cell) const {
  const int dr = std::abs(dims.row(cell) - dims.row(base.cell));
  const int dc = std::abs(dims.col(cell) - dims.col(base.cell));
  return std::max(dr, dc) <= hub_radius;
}

std::vector<std::size_t> Partition::sector_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(sector_count), 0);
  for (int s : assignment) {
    ++sizes[static_cast<std::size_t>(s)];
  }
  return sizes;
}

Partition radial_partition(BasePose base, const GridDims& dims, int sector_count) {
  if (sector_count < 1) {
    throw InvalidParameter("sector count must be >= 1");
  }
  if (!dims.contains(base.cell)) {
    throw OutOfBounds("base outside the grid");
  }
  Partition part;
  part.base = base;
  part.dims = dims;
  part.sector_count = sector_count;
  part.assignment.assign(dims.cell_count(), 0);
  const int br = dims.row(base.cell);
  const int bc = dims.col(base.cell);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (CellIndex c = 0; c < dims.cell_count(); ++c) {
    if (c == base.cell) {
      continue;
    }
    double theta = std::atan2(static_cast<double>(dims.row(c) - br), static_cast<double>(dims.col(c) - bc));
    if (theta < 0.0) {
      theta += two_pi;
    }
    auto sector = static_cast<int>(std::floor(static_cast<double>(sector_count) * theta / two_pi));
    part.assignment[c] = std::min(sector, sector_count - 1);
  }

  const auto ring = [&](CellIndex c) { return std::max(std::abs(dims.row(c) - br), std::abs(dims.col(c) - bc)); };
  const int max_ring = std::max({br, bc, dims.rows - 1 - br, dims.cols - 1 - bc});
  for (int h = 0; h < max_ring; ++h) {
    std::vector<char> beyond(static_cast<std::size_t>(sector_count), 0);
    std::vector<char> entry(static_cast<std::size_t>(sector_count), 0);
    for (CellIndex c = 0; c < dims.cell_count(); ++c) {
      const int r = ring(c);
      const auto s = static_cast<std::size_t>(part.assignment[c]);
      if (r > h) {
        beyond[s] = 1;
      }
      if (r == h + 1) {
        entry[s] = 1;
      }
    }
    if (beyond == entry) {
      part.hub_radius = h;
      break;
    }
    part.hub_radius = h + 1;
  }
  return part;
}

RegionalEntropy regional_entropy(const BeliefMap& belief, CellIndex candidate, const RelocationPolicy& policy,
                                 const Partition& partition) {
  const GridDims& dims = belief.dims();
  if (!dims.contains(candidate)) {
    throw OutOfBounds("candidate outside the grid");
  }
  const auto n = static_cast<std::size_t>(partition.sector_count);
  std::vector<double> sums(n, 0.0);
  std::vector<std::size_t> counts(n, 0);
  const int cr = dims.row(candidate);
  const int cc = dims.col(candidate);
  const double r2 = policy.explore_radius * policy.explore_radius;
  for (CellIndex c = 0; c < dims.cell_count(); ++c) {
    const double dr = dims.row(c) - cr;
    const double dc = dims.col(c) - cc;
    if (dr * dr + dc * dc > r2) {
      continue;
    }
    const auto s = static_cast<std::size_t>(partition.assignment[c]);
    sums[s] += binary_entropy_bits(belief[c]);
    ++counts[s];
  }
  RegionalEntropy out;
  out.sector_means.resize(n, 0.0);
  double total = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    if (counts[s] > 0) {
      out.sector_means[s] = sums[s] / static_cast<double>(counts[s]);
    }
    total += out.sector_means[s];
  }
  out.score = total / static_cast<double>(n);
  return out;
}

bool is_reachable_safely(const BeliefMap& belief, CellIndex from, CellIndex to, double safety_threshold) {
  const GridDims& dims = belief.dims();
  if (!dims.contains(from) || !dims.contains(to)) {
    throw OutOfBounds("cell outside the grid");
  }
  auto free = [&](CellIndex c) { return belief[c] < safety_threshold; };
  if (!free(from) || !free(to)) {
    return false;
  }
  std::vector<std::uint8_t> seen(dims.cell_count(), 0);
  std::deque<CellIndex> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    const CellIndex at = queue.front();
    queue.pop_front();
    if (at == to) {
      return true;
    }
    for (CellIndex next : neighbors(at, dims)) {
      if (!seen[next] && free(next)) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return false;
}

BasePose select_base_site(const BeliefMap& belief, BasePose base, const RelocationPolicy& policy, int sector_count) {
  const GridDims& dims = belief.dims();
  const int reach = static_cast<int>(std::floor(policy.search_radius));
  const int br = dims.row(base.cell);
  const int bc = dims.col(base.cell);

  bool found = false;
  CellIndex best_cell = base.cell;
  double best_score = 0.0;
  // Row-major enumeration, so strict '>' keeps the smaller index on ties.
  for (int dr = -reach; dr <= reach; ++dr) {
    for (int dc = -reach; dc <= reach; ++dc) {
      const int r = br + dr;
      const int c = bc + dc;
      if (!dims.contains(r, c)) {
        continue;
      }
      const CellIndex cand = dims.index(r, c);
      if (!(belief[cand] < policy.safety_threshold) ||
          !is_reachable_safely(belief, base.cell, cand, policy.safety_threshold)) {
        continue;
      }
      const auto part = radial_partition(BasePose{cand}, dims, sector_count);
      const double score = regional_entropy(belief, cand, policy, part).score;
      if (!found || score > best_score) {
        found = true;
        best_cell = cand;
        best_score = score;
      }
    }
  }
  return BasePose{found ? best_cell : base.cell};
}

}  // namespace bapp
