#include "bapp/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "bapp/errors.hpp"

namespace bapp {
namespace {

struct Node {
  std::vector<CellIndex> cells;
  double score = 0.0;
  double survival = 1.0;
};

bool better(const Node& a, const Node& b) {
  if (a.score != b.score) {
    return a.score > b.score;
  }
  return a.cells < b.cells;
}

bool visited(const std::vector<CellIndex>& cells, CellIndex c) {
  return std::find(cells.begin(), cells.end(), c) != cells.end();
}

// Shared by score_path and plan_path so both accumulate identically.
struct Increment {
  double score;
  double survival;
};

Increment step(double score, double survival, bool first_visit, double info, double q) {
  return {first_visit ? score + survival * info : score, survival * (1.0 - q)};
}

// Keeps the best partial path per endpoint before filling by rank. Plain
// rank pruning collapses onto the lexicographically smallest prefixes when a
// whole neighbourhood scores zero, and the beam never leaves it.
void prune_diverse(std::vector<Node>& ranked, std::size_t width, std::size_t cell_count) {
  std::vector<char> taken(ranked.size(), 0);
  std::vector<char> end_seen(cell_count, 0);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < ranked.size() && kept < width; ++i) {
    const CellIndex end = ranked[i].cells.back();
    if (!end_seen[end]) {
      end_seen[end] = 1;
      taken[i] = 1;
      ++kept;
    }
  }
  for (std::size_t i = 0; i < ranked.size() && kept < width; ++i) {
    if (!taken[i]) {
      taken[i] = 1;
      ++kept;
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (taken[i]) {
      if (out != i) {
        ranked[out] = std::move(ranked[i]);
      }
      ++out;
    }
  }
  ranked.resize(out);
}

}  // namespace

void PlanConfig::validate() const {
  if (horizon < 1) {
    throw InvalidParameter("planning horizon must be >= 1");
  }
  if (beam_width < 1) {
    throw InvalidParameter("beam width must be >= 1");
  }
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw InvalidParameter("alpha must be finite and > 0");
  }
}

std::vector<CellIndex> neighbors(CellIndex cell, const GridDims& dims, const CellMask& mask) {
  if (!dims.contains(cell)) {
    throw OutOfBounds("cell outside the grid");
  }
  const int r0 = dims.row(cell);
  const int c0 = dims.col(cell);
  std::vector<CellIndex> out;
  out.reserve(9);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      const int r = r0 + dr;
      const int c = c0 + dc;
      if (!dims.contains(r, c)) {
        continue;
      }
      const CellIndex n = dims.index(r, c);
      if (n == cell || mask.allows(n)) {
        out.push_back(n);
      }
    }
  }
  return out;
}

double cell_information(double p, const BinaryChannel& channel, double alpha, MiForm form) {
  const double info = mi_behavioral(p, channel, alpha, form);
  return info > 0.0 ? info : 0.0;
}

double score_path(const BeliefMap& belief, const Trajectory& path, const BinaryChannel& channel,
                  double alpha, MiForm form) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw InvalidParameter("alpha must be finite and > 0");
  }
  double score = 0.0;
  double survival = 1.0;
  std::vector<CellIndex> seen;
  seen.reserve(path.cells.size());
  for (CellIndex c : path.cells) {
    const double p = belief.at(c);
    const bool first = !visited(seen, c);
    const auto inc = step(score, survival, first, first ? cell_information(p, channel, alpha, form) : 0.0,
                          cell_failure_prob(p, channel));
    score = inc.score;
    survival = inc.survival;
    seen.push_back(c);
  }
  return score;
}

PlanResult plan_path(const BeliefMap& belief, CellIndex start, const PlanConfig& config,
                     const BinaryChannel& channel) {
  config.validate();
  const GridDims& dims = belief.dims();
  if (!dims.contains(start)) {
    throw OutOfBounds("start cell outside the grid");
  }
  if (!config.mask.allows(start)) {
    throw OutOfBounds("start cell outside the planning mask");
  }

  const std::size_t n = dims.cell_count();
  std::vector<double> info(n, 0.0);
  std::vector<double> fail(n, 0.0);
  std::vector<std::vector<CellIndex>> moves(n);
  for (CellIndex c = 0; c < n; ++c) {
    if (!config.mask.allows(c)) {
      continue;
    }
    info[c] = cell_information(belief[c], channel, config.alpha, config.mi_form);
    fail[c] = cell_failure_prob(belief[c], channel);
    moves[c] = neighbors(c, dims, config.mask);
  }

  const auto depth = static_cast<std::size_t>(config.horizon);
  std::vector<Node> beam(1);
  beam.front().cells.reserve(depth);
  std::vector<Node> children;
  for (std::size_t d = 0; d < depth; ++d) {
    children.clear();
    for (const Node& node : beam) {
      const CellIndex at = node.cells.empty() ? start : node.cells.back();
      for (CellIndex next : moves[at]) {
        const bool first = !visited(node.cells, next);
        const auto inc = step(node.score, node.survival, first, info[next], fail[next]);
        Node child;
        child.cells.reserve(depth);
        child.cells = node.cells;
        child.cells.push_back(next);
        child.score = inc.score;
        child.survival = inc.survival;
        children.push_back(std::move(child));
      }
    }
    std::sort(children.begin(), children.end(), better);
    if (children.size() > config.beam_width) {
      prune_diverse(children, config.beam_width, n);
    }
    std::swap(beam, children);
  }

  PlanResult result;
  result.trajectory.start = start;
  result.trajectory.cells = std::move(beam.front().cells);
  result.score = beam.front().score;
  return result;
}

Trajectory random_walk(CellIndex start, int horizon, const GridDims& dims, const CellMask& mask, Rng& rng) {
  if (!dims.contains(start)) {
    throw OutOfBounds("start cell outside the grid");
  }
  Trajectory path;
  path.start = start;
  CellIndex at = start;
  for (int k = 0; k < horizon; ++k) {
    const auto options = neighbors(at, dims, mask);
    at = options[rng.below(options.size())];
    path.cells.push_back(at);
  }
  return path;
}

bool is_valid_trajectory(const Trajectory& path, const GridDims& dims, const CellMask& mask) {
  CellIndex prev = path.start;
  if (!dims.contains(prev)) {
    return false;
  }
  for (CellIndex c : path.cells) {
    if (!dims.contains(c) || !mask.allows(c)) {
      return false;
    }
    if (std::abs(dims.row(c) - dims.row(prev)) > 1 || std::abs(dims.col(c) - dims.col(prev)) > 1) {
      return false;
    }
    prev = c;
  }
  return true;
}

}  // namespace bapp
