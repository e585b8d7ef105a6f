#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bapp/grid.hpp"
#include "bapp/info_measures.hpp"

namespace bapp {

/// Per-cell hazard probabilities. Values are immutable once built; updates
/// return a new map.
class BeliefMap {
 public:
  BeliefMap(GridDims dims, std::vector<double> probs);

  [[nodiscard]] const GridDims& dims() const { return dims_; }
  [[nodiscard]] std::span<const double> probs() const { return probs_; }
  [[nodiscard]] double operator[](CellIndex cell) const { return probs_[cell]; }
  [[nodiscard]] double at(CellIndex cell) const;
  [[nodiscard]] std::size_t size() const { return probs_.size(); }

  friend bool operator==(const BeliefMap&, const BeliefMap&) = default;

 private:
  GridDims dims_;
  std::vector<double> probs_;
};

/// Latent world, visible to the simulator only.
struct GroundTruthMap {
  GridDims dims;
  std::vector<std::uint8_t> hazards;  // X_i
  std::vector<double> lethality;      // lambda_i, meaningful where X_i = 1

  [[nodiscard]] std::size_t hazard_count() const;
};

enum class PathOutcome : int { Returned = 0, Lost = 1 };

BeliefMap init_uniform(GridDims dims);

/// Probability a robot fails while in a cell with hazard belief p.
double cell_failure_prob(double p, const BinaryChannel& channel);

BeliefMap update_on_success(const BeliefMap& belief, std::span<const CellIndex> path,
                            const BinaryChannel& channel);

/// Exact marginal posterior after a non-return, marginalizing over the
/// unknown failure location.
BeliefMap update_on_failure(const BeliefMap& belief, std::span<const CellIndex> path,
                            const BinaryChannel& channel);

BeliefMap update_on_outcome(const BeliefMap& belief, std::span<const CellIndex> path,
                            const BinaryChannel& channel, PathOutcome outcome);

/// P(Theta = 1) for a path under the current belief.
double path_failure_prob(const BeliefMap& belief, std::span<const CellIndex> path,
                         const BinaryChannel& channel);

/// Mean per-cell binary entropy, in bits; 1.0 for an uninformed map.
double global_entropy(const BeliefMap& belief);

/// Binary entropy in bits.
double binary_entropy_bits(double p);

/// One row of the grid per line, comma separated, 9 significant digits.
void write_belief_csv(std::ostream& out, const BeliefMap& belief);

}  // namespace bapp
