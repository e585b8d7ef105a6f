#pragma once

#include <vector>

#include "bapp/belief_map.hpp"
#include "bapp/grid.hpp"

namespace bapp {

struct BasePose {
  CellIndex cell = 0;
  friend bool operator==(const BasePose&, const BasePose&) = default;
};

/// Angular sectors about the base. Angles are measured from the base cell
/// center with x along columns and y along rows, in [0, 2*pi).
struct Partition {
  BasePose base;
  GridDims dims;
  int sector_count = 1;
  std::vector<int> assignment;  // cell -> sector id
  // The base has only eight neighbours, so with many sectors some wedges do
  // not touch it. Cells within this Chebyshev radius of the base are shared
  // transit space, sized so every non-empty sector has a cell just outside it.
  int hub_radius = 0;

  /// Cells of one sector plus the shared hub around the base.
  [[nodiscard]] CellMask mask_for(int sector) const;
  [[nodiscard]] bool in_hub(CellIndex cell) const;
  [[nodiscard]] std::vector<std::size_t> sector_sizes() const;
};

struct RelocationPolicy {
  double explore_radius = 5.0;    // r_e, Euclidean
  double search_radius = 3.0;     // r_s, Chebyshev box
  double safety_threshold = 0.3;  // belief must be strictly below
  int cadence = 1;                // rounds between relocation attempts

  void validate() const;
};

struct RegionalEntropy {
  std::vector<double> sector_means;  // bits
  double score = 0.0;
};

Partition radial_partition(BasePose base, const GridDims& dims, int sector_count);

RegionalEntropy regional_entropy(const BeliefMap& belief, CellIndex candidate, const RelocationPolicy& policy,
                                 const Partition& partition);

/// 9-connected search through cells whose belief is below the threshold.
bool is_reachable_safely(const BeliefMap& belief, CellIndex from, CellIndex to, double safety_threshold);

BasePose select_base_site(const BeliefMap& belief, BasePose base, const RelocationPolicy& policy, int sector_count);

}  // namespace bapp
