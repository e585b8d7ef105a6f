// bapp: run missions, theory sweeps and the brute-force oracle checks.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bapp/errors.hpp"
#include "bapp/experiment.hpp"
#include "bapp/info_measures.hpp"
#include "bapp/oracles.hpp"
#include "bapp/parallel.hpp"
#include "bapp/report_io.hpp"
#include "bapp/scenario.hpp"
#include "bapp/theory_sweep.hpp"

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw bapp::ConfigError("cannot write " + path.string());
  }
  return out;
}

bapp::MissionConfig preset(const std::string& name) {
  using bapp::StrategyKind;
  if (name == "poc-0.7") {
    return bapp::proof_of_concept_scenario(0.7, StrategyKind::StdItp);
  }
  if (name == "poc-0.9") {
    return bapp::proof_of_concept_scenario(0.9, StrategyKind::StdItp);
  }
  for (int n : {3, 5, 7, 15}) {
    if (name == "scale-n" + std::to_string(n)) {
      return bapp::scalability_scenario(n);
    }
  }
  for (auto [n, t] : {std::pair{15, 7}, {7, 15}, {5, 21}, {3, 35}}) {
    if (name == "energy-" + std::to_string(n) + "x" + std::to_string(t)) {
      return bapp::energy_budget_scenario(n, t);
    }
  }
  throw bapp::ConfigError("unknown preset '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavior-adaptive path planning simulator"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run Monte Carlo missions from a scenario file");
  std::string scenario_path;
  std::vector<std::string> strategies;
  int trials = 25;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  unsigned workers = bapp::default_workers();
  sim->add_option("--scenario", scenario_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  sim->add_option("--strategy", strategies, "std-itp|random|bapp-sig|bapp-tid (comma separated for paired runs)")
      ->delimiter(',');
  sim->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "Master seed");
  sim->add_option("--out", out_dir, "Output directory");
  sim->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  // theory-sweep
  auto* sweep = app.add_subcommand("theory-sweep", "Tabulate I_B - I_BGS over alpha, prior and channel grids");
  std::string sweep_out = "out";
  double a_lo = 0.1, a_hi = 5.0, a_step = 0.05;
  double p_lo = 0.05, p_hi = 0.95, p_step = 0.05;
  double avg_step = 0.01;
  std::vector<double> lambdas{0.7, 0.8, 0.9};
  std::vector<double> gammas{0.1, 0.2};
  sweep->add_option("--out", sweep_out, "Output directory");
  sweep->add_option("--alpha-min", a_lo);
  sweep->add_option("--alpha-max", a_hi);
  sweep->add_option("--alpha-step", a_step);
  sweep->add_option("--p-min", p_lo);
  sweep->add_option("--p-max", p_hi);
  sweep->add_option("--p-step", p_step);
  sweep->add_option("--lambdas", lambdas, "Channel true-positive rates for per-configuration rows")->delimiter(',');
  sweep->add_option("--gammas", gammas, "Channel false-positive rates for per-configuration rows")->delimiter(',');
  sweep->add_option("--avg-step", avg_step, "Grid step of the averaged (lambda, gamma) box");
  sweep->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  // oracle-check
  auto* oracle = app.add_subcommand("oracle-check", "Compare belief updates and planner against brute force");
  int max_len = 4;
  int draws = 3;
  int planner_instances = 50;
  oracle->add_option("--max-len", max_len, "Longest path enumerated on the 3x3 grid");
  oracle->add_option("--belief-draws", draws, "Random belief maps per channel");
  oracle->add_option("--planner-instances", planner_instances, "Random beliefs for the planner check");

  // export-scenario
  auto* exp = app.add_subcommand("export-scenario", "Write a built-in scenario as JSON");
  std::string preset_name;
  std::string preset_out;
  exp->add_option("name", preset_name, "poc-0.7|poc-0.9|scale-n{3,5,7,15}|energy-{15x7,7x15,5x21,3x35}")
      ->required();
  exp->add_option("--out", preset_out, "Output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      auto base = bapp::load_scenario(scenario_path);
      if (sim->count("--seed")) {
        base.master_seed = seed;
      }
      if (strategies.empty()) {
        strategies.emplace_back(bapp::to_string(base.strategy));
      }
      std::vector<bapp::ExperimentReport> reports;
      for (const auto& s : strategies) {
        auto cfg = base;
        cfg.strategy = bapp::parse_strategy(s);
        reports.push_back(bapp::run_experiment(cfg, trials, workers));
        const auto& r = reports.back();
        std::cerr << s << ": final entropy " << bapp::format_number(r.final_entropy.mean) << " bits, losses "
                  << bapp::format_number(r.final_losses.mean) << ", reached 50% in " << r.reached_half << "/"
                  << trials << " trials";
        if (r.rounds_to_half) {
          std::cerr << " (mean " << bapp::format_number(r.rounds_to_half->mean) << " rounds)";
        }
        std::cerr << '\n';
      }
      std::vector<const bapp::ExperimentReport*> ptrs;
      for (const auto& r : reports) {
        ptrs.push_back(&r);
      }
      fs::create_directories(out_dir);
      auto dep = open_out(fs::path(out_dir) / "deployments.csv");
      bapp::write_deployments_csv(dep, ptrs);
      auto traj = open_out(fs::path(out_dir) / "trajectories.csv");
      bapp::write_trajectories_csv(traj, ptrs);
      auto summary = open_out(fs::path(out_dir) / "summary.json");
      bapp::write_summary_json(summary, ptrs);
      return 0;
    }

    if (*sweep) {
      bapp::SweepGrid grid;
      grid.alphas = bapp::linspace_step(a_lo, a_hi, a_step);
      grid.priors = bapp::linspace_step(p_lo, p_hi, p_step);
      grid.lambdas = lambdas;
      grid.gammas = gammas;
      grid.avg_lambdas = bapp::linspace_step(0.70, 0.99, avg_step);
      grid.avg_gammas = bapp::linspace_step(0.01, 0.30, avg_step);
      const auto report = bapp::theory_sweep(grid, workers);
      fs::create_directories(sweep_out);
      auto rows = open_out(fs::path(sweep_out) / "theory_sweep.csv");
      bapp::write_theory_csv(rows, report);
      auto avg = open_out(fs::path(sweep_out) / "theory_sweep_avg.csv");
      bapp::write_theory_average_csv(avg, report);
      auto contour = open_out(fs::path(sweep_out) / "theory_sweep_contour.csv");
      bapp::write_theory_contour_csv(contour, report);
      std::cerr << "existence check: " << report.configurations_non_negative << "/" << report.configurations_checked
                << " (p, lambda, gamma) configurations have max_alpha delta_i >= 0\n";
      return report.configurations_non_negative == report.configurations_checked ? 0 : 1;
    }

    if (*oracle) {
      const auto beliefs = bapp::oracle::check_belief_updates(max_len, draws, 7, 1e-10);
      std::cout << "belief updates: " << beliefs.cases << " paths, max error "
                << bapp::format_number(beliefs.max_abs_error) << (beliefs.passed ? "  PASS\n" : "  FAIL\n");
      const auto planner = bapp::oracle::check_planner(planner_instances, 11);
      std::cout << "planner: " << planner.cases << " instances, max score error "
                << bapp::format_number(planner.max_abs_error) << (planner.passed ? "  PASS\n" : "  FAIL\n");
      return beliefs.passed && planner.passed ? 0 : 1;
    }

    if (*exp) {
      const auto text = bapp::scenario_to_json(preset(preset_name));
      if (preset_out.empty()) {
        std::cout << text;
      } else {
        auto out = open_out(preset_out);
        out << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
