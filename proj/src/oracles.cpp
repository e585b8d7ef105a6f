#include "bapp/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bapp/rng.hpp"

namespace bapp::oracle {
namespace {

struct Joint {
  double p_returned = 0.0;
  double p_lost = 0.0;
  std::vector<double> hazard_and_returned;  // per distinct cell
  std::vector<double> hazard_and_lost;
};

Joint enumerate(const BeliefMap& belief, const std::vector<CellIndex>& path, const BinaryChannel& channel) {
  std::vector<CellIndex> cells;
  for (CellIndex c : path) {
    if (std::find(cells.begin(), cells.end(), c) == cells.end()) {
      cells.push_back(c);
    }
  }
  const std::size_t k = cells.size();
  Joint j;
  j.hazard_and_returned.assign(k, 0.0);
  j.hazard_and_lost.assign(k, 0.0);
  for (std::uint64_t config = 0; config < (1ULL << k); ++config) {
    double weight = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double p = belief[cells[i]];
      weight *= (config >> i & 1ULL) ? p : 1.0 - p;
    }
    // Theta = 1 splits by the first cell at which the robot fails.
    double lost = 0.0;
    double alive = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double rate = (config >> i & 1ULL) ? channel.tpr : channel.fpr;
      lost += alive * rate;
      alive *= 1.0 - rate;
    }
    j.p_returned += weight * alive;
    j.p_lost += weight * lost;
    for (std::size_t i = 0; i < k; ++i) {
      if (config >> i & 1ULL) {
        j.hazard_and_returned[i] += weight * alive;
        j.hazard_and_lost[i] += weight * lost;
      }
    }
  }
  return j;
}

double entropy_of(std::initializer_list<double> ps) {
  double h = 0.0;
  for (double p : ps) {
    if (p > 0.0) {
      h -= p * std::log(p);
    }
  }
  return h;
}

}  // namespace

std::vector<double> posterior_by_enumeration(const BeliefMap& belief, const std::vector<CellIndex>& path,
                                             const BinaryChannel& channel, PathOutcome outcome) {
  const Joint j = enumerate(belief, path, channel);
  std::vector<double> post(belief.probs().begin(), belief.probs().end());
  std::vector<CellIndex> cells;
  for (CellIndex c : path) {
    if (std::find(cells.begin(), cells.end(), c) == cells.end()) {
      cells.push_back(c);
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    post[cells[i]] = outcome == PathOutcome::Lost ? j.hazard_and_lost[i] / j.p_lost
                                                  : j.hazard_and_returned[i] / j.p_returned;
  }
  return post;
}

double failure_prob_by_enumeration(const BeliefMap& belief, const std::vector<CellIndex>& path,
                                   const BinaryChannel& channel) {
  return enumerate(belief, path, channel).p_lost;
}

double mutual_information_joint(double prior, const BinaryChannel& channel) {
  const double j11 = prior * channel.tpr;
  const double j10 = prior * (1.0 - channel.tpr);
  const double j01 = (1.0 - prior) * channel.fpr;
  const double j00 = (1.0 - prior) * (1.0 - channel.fpr);
  return entropy_of({prior, 1.0 - prior}) + entropy_of({j11 + j01, j10 + j00}) - entropy_of({j11, j10, j01, j00});
}

ExhaustivePlan plan_by_enumeration(const BeliefMap& belief, CellIndex start, const PlanConfig& config,
                                   const BinaryChannel& channel) {
  const GridDims& dims = belief.dims();
  ExhaustivePlan out;
  bool have = false;
  std::vector<CellIndex> seq;

  auto evaluate = [&]() {
    double score = 0.0;
    double survival = 1.0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      const double p = belief[seq[k]];
      const bool first = std::find(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k), seq[k]) ==
                         seq.begin() + static_cast<std::ptrdiff_t>(k);
      if (first) {
        score += survival * std::max(0.0, mi_behavioral(p, channel, config.alpha, config.mi_form));
      }
      survival *= 1.0 - (p * channel.tpr + (1.0 - p) * channel.fpr);
    }
    return score;
  };

  std::function<void(CellIndex)> recurse = [&](CellIndex at) {
    if (seq.size() == static_cast<std::size_t>(config.horizon)) {
      ++out.sequences;
      const double s = evaluate();
      if (!have || s > out.score || (s == out.score && seq < out.best.cells)) {
        have = true;
        out.score = s;
        out.best.cells = seq;
      }
      return;
    }
    const int r0 = dims.row(at);
    const int c0 = dims.col(at);
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (!dims.contains(r0 + dr, c0 + dc)) {
          continue;
        }
        const CellIndex next = dims.index(r0 + dr, c0 + dc);
        if (next != at && !config.mask.allows(next)) {
          continue;
        }
        seq.push_back(next);
        recurse(next);
        seq.pop_back();
      }
    }
  };
  out.best.start = start;
  recurse(start);
  return out;
}

OracleSummary check_belief_updates(int max_len, int belief_draws, std::uint64_t seed, double tolerance) {
  const GridDims dims(3, 3);
  const double levels[3] = {0.1, 0.5, 0.9};
  const BinaryChannel channels[2] = {BinaryChannel(0.7, 0.1), BinaryChannel(0.9, 0.1)};
  Rng rng(seed);
  OracleSummary summary;

  auto note = [&](double err) {
    summary.max_abs_error = std::max(summary.max_abs_error, err);
    if (!(err <= tolerance)) {
      summary.passed = false;
    }
  };

  std::vector<CellIndex> path;
  std::function<void(const BeliefMap&, const BinaryChannel&)> walk = [&](const BeliefMap& belief,
                                                                       const BinaryChannel& ch) {
    if (!path.empty()) {
      ++summary.cases;
      const auto ok = update_on_success(belief, path, ch);
      const auto lost = update_on_failure(belief, path, ch);
      const auto want_ok = posterior_by_enumeration(belief, path, ch, PathOutcome::Returned);
      const auto want_lost = posterior_by_enumeration(belief, path, ch, PathOutcome::Lost);
      const double p_lost = failure_prob_by_enumeration(belief, path, ch);
      note(std::abs(path_failure_prob(belief, path, ch) - p_lost));
      for (CellIndex c = 0; c < dims.cell_count(); ++c) {
        note(std::abs(ok[c] - want_ok[c]));
        note(std::abs(lost[c] - want_lost[c]));
        note(std::abs((1.0 - p_lost) * ok[c] + p_lost * lost[c] - belief[c]));
      }
    }
    if (static_cast<int>(path.size()) == max_len) {
      return;
    }
    const auto options = path.empty() ? std::vector<CellIndex>{0, 1, 2, 3, 4, 5, 6, 7, 8}
                                      : neighbors(path.back(), dims);
    for (CellIndex next : options) {
      path.push_back(next);
      walk(belief, ch);
      path.pop_back();
    }
  };

  for (int draw = 0; draw < belief_draws; ++draw) {
    std::vector<double> probs(dims.cell_count());
    for (auto& p : probs) {
      p = levels[rng.below(3)];
    }
    const BeliefMap belief(dims, probs);
    for (const auto& ch : channels) {
      walk(belief, ch);
    }
  }
  return summary;
}

OracleSummary check_planner(int instances, std::uint64_t seed) {
  const GridDims dims(3, 3);
  const BinaryChannel channel(0.7, 0.1);
  Rng rng(seed);
  OracleSummary summary;
  for (int i = 0; i < instances; ++i) {
    std::vector<double> probs(dims.cell_count());
    for (auto& p : probs) {
      p = rng.uniform();
    }
    const BeliefMap belief(dims, probs);
    PlanConfig cfg;
    cfg.horizon = 3;
    cfg.beam_width = kUnboundedBeam;
    cfg.alpha = 0.25 + 1.5 * rng.uniform();
    const CellIndex start = rng.below(dims.cell_count());
    const auto got = plan_path(belief, start, cfg, channel);
    const auto want = plan_by_enumeration(belief, start, cfg, channel);
    ++summary.cases;
    summary.max_abs_error = std::max(summary.max_abs_error, std::abs(got.score - want.score));
    if (got.trajectory.cells != want.best.cells || std::abs(got.score - want.score) > 1e-12) {
      summary.passed = false;
    }
  }
  return summary;
}

}  // namespace bapp::oracle
