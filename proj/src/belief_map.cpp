#include "bapp/belief_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "bapp/errors.hpp"
#include "bapp/report_io.hpp"

namespace bapp {
namespace {

std::vector<CellIndex> checked_distinct(const BeliefMap& belief, std::span<const CellIndex> path) {
  std::vector<CellIndex> cells;
  cells.reserve(path.size());
  for (CellIndex c : path) {
    if (!belief.dims().contains(c)) {
      throw OutOfBounds("path cell outside the grid");
    }
    if (std::find(cells.begin(), cells.end(), c) == cells.end()) {
      cells.push_back(c);
    }
  }
  return cells;
}

}  // namespace

std::vector<CellIndex> distinct_cells(const std::vector<CellIndex>& cells) {
  std::vector<CellIndex> out;
  out.reserve(cells.size());
  for (CellIndex c : cells) {
    if (std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(c);
    }
  }
  return out;
}

BeliefMap::BeliefMap(GridDims dims, std::vector<double> probs) : dims_(dims), probs_(std::move(probs)) {
  if (probs_.size() != dims_.cell_count()) {
    throw InvalidParameter("belief size does not match grid");
  }
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw InvalidParameter("belief entries must lie in [0, 1]");
    }
  }
}

double BeliefMap::at(CellIndex cell) const {
  if (cell >= probs_.size()) {
    throw OutOfBounds("cell outside the grid");
  }
  return probs_[cell];
}

std::size_t GroundTruthMap::hazard_count() const {
  return static_cast<std::size_t>(std::count(hazards.begin(), hazards.end(), std::uint8_t{1}));
}

BeliefMap init_uniform(GridDims dims) {
  if (dims.cell_count() == 0) {
    throw InvalidParameter("zero-area grid");
  }
  return BeliefMap(dims, std::vector<double>(dims.cell_count(), 0.5));
}

double cell_failure_prob(double p, const BinaryChannel& channel) {
  return p * channel.tpr + (1.0 - p) * channel.fpr;
}

BeliefMap update_on_success(const BeliefMap& belief, std::span<const CellIndex> path,
                            const BinaryChannel& channel) {
  const auto cells = checked_distinct(belief, path);
  std::vector<double> probs(belief.probs().begin(), belief.probs().end());
  for (CellIndex c : cells) {
    const double p = probs[c];
    const double hazard = p * (1.0 - channel.tpr);
    const double safe = (1.0 - p) * (1.0 - channel.fpr);
    const double evidence = hazard + safe;
    if (evidence <= 0.0) {
      throw InconsistentObservation("survival has zero probability at a visited cell");
    }
    probs[c] = hazard / evidence;
  }
  return BeliefMap(belief.dims(), std::move(probs));
}

BeliefMap update_on_failure(const BeliefMap& belief, std::span<const CellIndex> path,
                            const BinaryChannel& channel) {
  const auto cells = checked_distinct(belief, path);
  std::vector<double> survive(cells.size());
  double all_survive = 1.0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    survive[k] = 1.0 - cell_failure_prob(belief[cells[k]], channel);
    all_survive *= survive[k];
  }
  const double p_fail = 1.0 - all_survive;
  if (!(p_fail > 0.0)) {
    throw InconsistentObservation("failure observed on a path that cannot fail");
  }

  std::vector<double> probs(belief.probs().begin(), belief.probs().end());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const double prior = belief[cells[k]];
    if (prior == 0.0 || prior == 1.0) {
      continue;
    }
    // Product over the other cells, recomputed rather than divided out so
    // that survive[k] == 0 is handled.
    double others = 1.0;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j != k) {
        others *= survive[j];
      }
    }
    const double p_fail_given_hazard = 1.0 - (1.0 - channel.tpr) * others;
    const double posterior = prior * p_fail_given_hazard / p_fail;
    probs[cells[k]] = std::clamp(posterior, 0.0, 1.0);
  }
  return BeliefMap(belief.dims(), std::move(probs));
}

BeliefMap update_on_outcome(const BeliefMap& belief, std::span<const CellIndex> path,
                            const BinaryChannel& channel, PathOutcome outcome) {
  return outcome == PathOutcome::Lost ? update_on_failure(belief, path, channel)
                                      : update_on_success(belief, path, channel);
}

double path_failure_prob(const BeliefMap& belief, std::span<const CellIndex> path,
                         const BinaryChannel& channel) {
  double all_survive = 1.0;
  for (CellIndex c : checked_distinct(belief, path)) {
    all_survive *= 1.0 - cell_failure_prob(belief[c], channel);
  }
  return 1.0 - all_survive;
}

double binary_entropy_bits(double p) {
  return binary_entropy(p) / std::numbers::ln2;
}

double global_entropy(const BeliefMap& belief) {
  double total = 0.0;
  for (double p : belief.probs()) {
    total += binary_entropy_bits(p);
  }
  return total / static_cast<double>(belief.size());
}

void write_belief_csv(std::ostream& out, const BeliefMap& belief) {
  const auto& dims = belief.dims();
  for (int r = 0; r < dims.rows; ++r) {
    for (int c = 0; c < dims.cols; ++c) {
      if (c > 0) {
        out << ',';
      }
      out << format_number(belief[dims.index(r, c)]);
    }
    out << '\n';
  }
}

}  // namespace bapp
