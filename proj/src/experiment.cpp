#include "bapp/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "bapp/errors.hpp"
#include "bapp/parallel.hpp"

namespace bapp {

MeanStd mean_std(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) {
    return out;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) {
      ss += (v - out.mean) * (v - out.mean);
    }
    out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

ExperimentReport aggregate(const MissionConfig& config, std::vector<TrialResult> trials) {
  ExperimentReport report;
  report.config = config;
  report.trials = std::move(trials);

  std::size_t rounds = 0;
  for (const auto& t : report.trials) {
    rounds = std::max(rounds, t.metrics.entropy.size());
  }
  std::vector<double> h;
  std::vector<double> l;
  for (std::size_t d = 0; d < rounds; ++d) {
    h.clear();
    l.clear();
    for (const auto& t : report.trials) {
      const std::size_t k = std::min(d, t.metrics.entropy.size() - 1);
      h.push_back(t.metrics.entropy[k]);
      l.push_back(static_cast<double>(t.metrics.losses[k]));
    }
    report.entropy_by_round.push_back(mean_std(h));
    report.losses_by_round.push_back(mean_std(l));
  }

  std::vector<double> final_h;
  std::vector<double> final_l;
  std::vector<double> half;
  for (const auto& t : report.trials) {
    final_h.push_back(t.metrics.final_entropy());
    final_l.push_back(static_cast<double>(t.metrics.final_losses()));
    if (t.metrics.rounds_to_half) {
      half.push_back(static_cast<double>(*t.metrics.rounds_to_half));
    }
  }
  report.final_entropy = mean_std(final_h);
  report.final_losses = mean_std(final_l);
  report.reached_half = static_cast<int>(half.size());
  if (!half.empty()) {
    report.rounds_to_half = mean_std(half);
  }
  return report;
}

ExperimentReport run_experiment(const MissionConfig& config, int trials, unsigned workers) {
  if (trials < 1) {
    throw ConfigError("trials must be >= 1");
  }
  config.validate();
  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  parallel_for(results.size(), workers, [&](std::size_t i) {
    const int trial = static_cast<int>(i);
    results[i] = run_trial(config, trial, trial_seed(config.master_seed, trial));
  });
  return aggregate(config, std::move(results));
}

}  // namespace bapp
