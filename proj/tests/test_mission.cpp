#include <algorithm>
#include <cmath>
#include <vector>

#include "bapp/errors.hpp"
#include "bapp/experiment.hpp"
#include "bapp/mission.hpp"
#include "bapp/world.hpp"
#include "doctest.h"

using namespace bapp;

namespace {

MissionConfig small_config(StrategyKind strategy) {
  MissionConfig cfg;
  cfg.dims = GridDims(8, 8);
  cfg.horizon = 8;
  cfg.deployment_budget = 30;
  cfg.strategy = strategy;
  cfg.hazard_density = 0.1;
  cfg.cluster_size = 3;
  cfg.disposable = default_disposable(40);
  cfg.high_fidelity = default_high_fidelity(5);
  cfg.policies.plan.beam_width = 16;
  cfg.policies.trigger.phase_switch = 10;
  return cfg;
}

}  // namespace

TEST_CASE("world generation places exactly the target hazard count") {
  const GridDims g(10, 10);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto truth = generate_world(g, WorldParams{0.2, 0.7, 4, g.center()}, rng);
    CHECK(truth.hazard_count() == 20);
    CHECK(truth.hazards[g.center()] == 0);
    for (CellIndex c = 0; c < g.cell_count(); ++c) {
      CHECK(truth.lethality[c] == (truth.hazards[c] ? 0.7 : 0.0));
    }
  }
  Rng rng(1);
  CHECK(generate_world(g, WorldParams{0.0, 0.7, 4, {}}, rng).hazard_count() == 0);
  CHECK(generate_world(g, WorldParams{0.004, 0.7, 4, {}}, rng).hazard_count() == 0);

  Rng a(7);
  Rng b(7);
  CHECK(generate_world(g, WorldParams{}, a).hazards == generate_world(g, WorldParams{}, b).hazards);
  CHECK_THROWS_AS(generate_world(g, WorldParams{1.0, 0.7, 4, {}}, a), InvalidParameter);
  CHECK_THROWS_AS(generate_world(g, WorldParams{0.1, 0.7, 0, {}}, a), InvalidParameter);
}

TEST_CASE("hazards form clusters") {
  const GridDims g(20, 20);
  Rng rng(11);
  const auto truth = generate_world(g, WorldParams{0.1, 0.9, 8, {}}, rng);
  // most hazardous cells have a hazardous 8-neighbour
  std::size_t touching = 0;
  for (CellIndex c = 0; c < g.cell_count(); ++c) {
    if (!truth.hazards[c]) {
      continue;
    }
    for (CellIndex nb : neighbors(c, g)) {
      if (nb != c && truth.hazards[nb]) {
        ++touching;
        break;
      }
    }
  }
  CHECK(touching >= truth.hazard_count() * 8 / 10);
}

TEST_CASE("execution outcomes") {
  const GridDims g(1, 3);
  GroundTruthMap truth{g, {0, 1, 0}, {0.0, 1.0, 0.0}};
  const AgentSpec safe{AgentClass::HighFidelity, 0.0, 1};
  const std::vector<CellIndex> path{0, 1, 2};
  const auto r = execute_deployment(truth, path, safe, CoinFlips(3));
  CHECK(r.outcome == PathOutcome::Lost);
  CHECK(r.failure_step == 1);
  const std::vector<CellIndex> clear{0, 2, 2};
  CHECK(execute_deployment(truth, clear, safe, CoinFlips(3)).outcome == PathOutcome::Returned);
  const std::vector<CellIndex> outside{0, 5};
  CHECK_THROWS_AS(execute_deployment(truth, outside, safe, CoinFlips(3)), OutOfBounds);
}

TEST_CASE("simulated loss rate matches the belief-model failure probability") {
  // Worlds drawn from the belief itself, so the model is exact.
  const GridDims g(1, 3);
  const BeliefMap belief(g, {0.5, 0.2, 0.8});
  const BinaryChannel ch(0.7, 0.1);
  const AgentSpec agent = default_disposable(1);
  const std::vector<CellIndex> path{0, 1, 2};
  const double expected = path_failure_prob(belief, path, ch);
  constexpr int kRuns = 100000;
  Rng rng(2024);
  int lost = 0;
  for (int k = 0; k < kRuns; ++k) {
    GroundTruthMap truth{g, std::vector<std::uint8_t>(3, 0), std::vector<double>(3, 0.0)};
    for (CellIndex c = 0; c < 3; ++c) {
      if (rng.uniform() < belief[c]) {
        truth.hazards[c] = 1;
        truth.lethality[c] = 0.7;
      }
    }
    lost += execute_deployment(truth, path, agent, CoinFlips(rng.next())).outcome == PathOutcome::Lost;
  }
  const double rate = static_cast<double>(lost) / kRuns;
  const double sigma = std::sqrt(expected * (1.0 - expected) / kRuns);
  CHECK(std::abs(rate - expected) < 5.0 * sigma);
}

TEST_CASE("zero budget leaves the prior") {
  MissionConfig cfg = small_config(StrategyKind::StdItp);
  cfg.deployment_budget = 0;
  const auto t = run_trial(cfg, 0, 5);
  REQUIRE(t.metrics.entropy.size() == 1);
  // every cell but the base at 0.5
  CHECK(t.metrics.entropy[0] == doctest::Approx(63.0 / 64.0).epsilon(1e-15));
  CHECK(t.records.empty());
  CHECK_FALSE(t.metrics.rounds_to_half.has_value());
}

TEST_CASE("fleet accounting is conserved") {
  for (auto k : {StrategyKind::StdItp, StrategyKind::Random, StrategyKind::BappSig, StrategyKind::BappTid}) {
    MissionConfig cfg = small_config(k);
    cfg.team_size = 3;
    const auto t = run_trial(cfg, 0, 77);
    // returned robots are reused, so only losses draw down the stock
    int disposable = 0;
    int high = 0;
    int lost = 0;
    for (const auto& r : t.records) {
      const bool gone = r.outcome == PathOutcome::Lost;
      if (r.agent == AgentClass::HighFidelity) {
        high += gone;
        CHECK(k == StrategyKind::BappTid);
      } else {
        disposable += gone;
      }
      lost += gone;
      CHECK(r.cum_losses == lost);
      CHECK(r.trajectory.cells.size() == static_cast<std::size_t>(cfg.horizon));
      CHECK(r.failure_step.has_value() == (r.outcome == PathOutcome::Lost));
    }
    CHECK(disposable <= cfg.disposable.stock);
    CHECK(high <= cfg.high_fidelity.stock);
    CHECK(t.metrics.final_losses() == lost);
    CHECK(t.metrics.entropy.size() == t.metrics.losses.size());
  }
}

TEST_CASE("stock runs out before the budget") {
  MissionConfig cfg = small_config(StrategyKind::StdItp);
  cfg.disposable = default_disposable(4);
  cfg.high_fidelity = default_high_fidelity(0);
  cfg.deployment_budget = 100;
  const auto t = run_trial(cfg, 0, 9);
  // robots that return are reused, so rounds continue until four are lost
  CHECK(t.metrics.final_losses() <= 4);
  if (t.metrics.final_losses() == 4) {
    CHECK(static_cast<int>(t.metrics.entropy.size()) - 1 <= cfg.deployment_budget);
  }
}

TEST_CASE("trials are deterministic and missions reduce entropy") {
  for (auto k : {StrategyKind::StdItp, StrategyKind::Random, StrategyKind::BappSig, StrategyKind::BappTid}) {
    const MissionConfig cfg = small_config(k);
    const auto a = run_trial(cfg, 2, trial_seed(1, 2));
    const auto b = run_trial(cfg, 2, trial_seed(1, 2));
    CHECK(a.metrics.entropy == b.metrics.entropy);
    CHECK(a.records.size() == b.records.size());
    CHECK(a.metrics.final_entropy() < a.metrics.entropy.front());
  }
}

TEST_CASE("degenerate sig reproduces std-itp missions") {
  MissionConfig itp = small_config(StrategyKind::StdItp);
  MissionConfig sig = small_config(StrategyKind::BappSig);
  sig.policies.sig = SigPolicy{1.0, 1.0, 0.0, 0.1};
  for (int trial = 0; trial < 3; ++trial) {
    const auto a = run_trial(itp, trial, trial_seed(4, trial));
    const auto b = run_trial(sig, trial, trial_seed(4, trial));
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.metrics.entropy == b.metrics.entropy);
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].trajectory.cells == b.records[i].trajectory.cells);
      CHECK(a.records[i].outcome == b.records[i].outcome);
    }
  }
}

TEST_CASE("experiment output does not depend on worker count") {
  MissionConfig cfg = small_config(StrategyKind::BappTid);
  cfg.team_size = 2;
  cfg.relocate_base = true;
  const auto one = run_experiment(cfg, 6, 1);
  const auto four = run_experiment(cfg, 6, 4);
  REQUIRE(one.trials.size() == four.trials.size());
  for (std::size_t i = 0; i < one.trials.size(); ++i) {
    CHECK(one.trials[i].seed == four.trials[i].seed);
    CHECK(one.trials[i].metrics.entropy == four.trials[i].metrics.entropy);
    CHECK(one.trials[i].base_trail == four.trials[i].base_trail);
  }
  CHECK(one.final_entropy.mean == four.final_entropy.mean);
  CHECK_THROWS_AS(run_experiment(cfg, 0, 1), ConfigError);
}

TEST_CASE("relocation keeps the base on safe ground") {
  MissionConfig cfg = small_config(StrategyKind::BappTid);
  cfg.team_size = 3;
  cfg.relocate_base = true;
  for (int trial = 0; trial < 4; ++trial) {
    const auto t = run_trial(cfg, trial, trial_seed(2, trial));
    REQUIRE(t.base_trail.size() + 1 == t.metrics.entropy.size());
    CHECK(t.base_trail.front() == cfg.initial_base());
  }
}

TEST_CASE("aggregation") {
  CHECK(mean_std({}).mean == 0.0);
  const auto m = mean_std({1.0, 2.0, 3.0, 4.0});
  CHECK(m.mean == 2.5);
  CHECK(m.std == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(mean_std({7.0}).std == 0.0);
  CHECK(first_reaching({1.0, 0.6, 0.5, 0.4}, 0.5) == 2);
  CHECK_FALSE(first_reaching({1.0, 0.6}, 0.5).has_value());

  // shorter trials carry their last value
  TrialResult a;
  a.metrics.entropy = {1.0, 0.5};
  a.metrics.losses = {0, 1};
  a.metrics.rounds_to_half = 1;
  TrialResult b;
  b.metrics.entropy = {1.0, 0.9, 0.7};
  b.metrics.losses = {0, 0, 2};
  const auto r = aggregate(MissionConfig{}, {a, b});
  REQUIRE(r.entropy_by_round.size() == 3);
  CHECK(r.entropy_by_round[2].mean == doctest::Approx(0.6));
  CHECK(r.reached_half == 1);
  REQUIRE(r.rounds_to_half);
  CHECK(r.rounds_to_half->mean == 1.0);
  CHECK(r.final_losses.mean == 1.5);
}

TEST_CASE("config validation") {
  MissionConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.team_size = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = MissionConfig{};
  cfg.base_cell = 100;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = MissionConfig{};
  cfg.disposable.stock = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = MissionConfig{};
  cfg.lethality = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK(MissionConfig{}.initial_base() == GridDims(10, 10).index(5, 5));
}
