#include "bapp/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bapp/errors.hpp"
#include "json.hpp"

namespace bapp {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Wraps one JSON object and remembers which keys were read, so leftovers
// can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) {
      throw ConfigError(path_ + " must be an object");
    }
  }

  template <typename T>
  void read(const char* key, T& target) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end()) {
      return;
    }
    try {
      target = it->get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(path_ + "." + key + ": " + e.what());
    }
  }

  const json* child(const char* key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  [[nodiscard]] std::string path(const char* key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& item : obj_.items()) {
      if (!seen_.count(item.key())) {
        throw ConfigError("unknown scenario key '" + path_ + "." + item.key() + "'");
      }
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

MiForm parse_form(const std::string& s) {
  if (s == "posterior") {
    return MiForm::Posterior;
  }
  if (s == "channel") {
    return MiForm::Channel;
  }
  throw ConfigError("mi_form must be 'posterior' or 'channel'");
}

void read_agent(ObjectReader& parent, const char* key, AgentSpec& agent) {
  if (const json* j = parent.child(key)) {
    ObjectReader r(*j, parent.path(key));
    r.read("malfunction_rate", agent.malfunction_rate);
    r.read("stock", agent.stock);
    r.finish();
  }
}

}  // namespace

MissionConfig parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  MissionConfig cfg;
  ObjectReader root(doc, "scenario");
  root.read("name", cfg.name);
  if (const json* j = root.child("grid")) {
    ObjectReader r(*j, "scenario.grid");
    int rows = cfg.dims.rows;
    int cols = cfg.dims.cols;
    r.read("rows", rows);
    r.read("cols", cols);
    r.finish();
    try {
      cfg.dims = GridDims(rows, cols);
    } catch (const InvalidParameter& e) {
      throw ConfigError(e.what());
    }
  }
  root.read("lethality", cfg.lethality);
  root.read("hazard_density", cfg.hazard_density);
  root.read("cluster_size", cfg.cluster_size);
  root.read("team_size", cfg.team_size);
  root.read("horizon", cfg.horizon);
  root.read("deployment_budget", cfg.deployment_budget);
  std::string strategy(to_string(cfg.strategy));
  root.read("strategy", strategy);
  cfg.strategy = parse_strategy(strategy);
  if (const json* j = root.child("base_cell")) {
    if (!j->is_null()) {
      ObjectReader r(*j, "scenario.base_cell");
      int row = 0;
      int col = 0;
      r.read("row", row);
      r.read("col", col);
      r.finish();
      if (!cfg.dims.contains(row, col)) {
        throw ConfigError("base cell outside the grid");
      }
      cfg.base_cell = cfg.dims.index(row, col);
    }
  }
  root.read("master_seed", cfg.master_seed);

  if (const json* j = root.child("agents")) {
    ObjectReader r(*j, "scenario.agents");
    read_agent(r, "disposable", cfg.disposable);
    read_agent(r, "high_fidelity", cfg.high_fidelity);
    r.finish();
  }
  if (const json* j = root.child("planner")) {
    ObjectReader r(*j, "scenario.planner");
    r.read("beam_width", cfg.policies.plan.beam_width);
    std::string form = cfg.policies.plan.mi_form == MiForm::Channel ? "channel" : "posterior";
    r.read("mi_form", form);
    cfg.policies.plan.mi_form = parse_form(form);
    r.read("alpha_explore", cfg.policies.alpha_explore);
    r.read("alpha_high_fidelity", cfg.policies.alpha_high_fidelity);
    r.finish();
  }
  if (const json* j = root.child("sig")) {
    ObjectReader r(*j, "scenario.sig");
    r.read("alpha_min", cfg.policies.sig.alpha_min);
    r.read("alpha_max", cfg.policies.sig.alpha_max);
    r.read("sweep_halfwidth", cfg.policies.sig.sweep_halfwidth);
    r.read("sweep_step", cfg.policies.sig.sweep_step);
    r.finish();
  }
  if (const json* j = root.child("trigger")) {
    ObjectReader r(*j, "scenario.trigger");
    r.read("window", cfg.policies.trigger.window);
    r.read("theta_early", cfg.policies.trigger.theta_early);
    r.read("phase_switch", cfg.policies.trigger.phase_switch);
    r.read("eps_min", cfg.policies.trigger.eps_min);
    r.read("eps_max", cfg.policies.trigger.eps_max);
    r.read("decay_rate", cfg.policies.trigger.decay_rate);
    r.finish();
  }
  if (const json* j = root.child("relocation")) {
    ObjectReader r(*j, "scenario.relocation");
    r.read("enabled", cfg.relocate_base);
    r.read("explore_radius", cfg.relocation.explore_radius);
    r.read("search_radius", cfg.relocation.search_radius);
    r.read("safety_threshold", cfg.relocation.safety_threshold);
    r.read("cadence", cfg.relocation.cadence);
    r.finish();
  }
  root.finish();
  cfg.policies.plan.horizon = cfg.horizon;
  cfg.validate();
  return cfg;
}

MissionConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario file " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const MissionConfig& cfg) {
  ordered_json j;
  j["name"] = cfg.name;
  j["grid"] = {{"rows", cfg.dims.rows}, {"cols", cfg.dims.cols}};
  j["lethality"] = cfg.lethality;
  j["hazard_density"] = cfg.hazard_density;
  j["cluster_size"] = cfg.cluster_size;
  j["team_size"] = cfg.team_size;
  j["horizon"] = cfg.horizon;
  j["deployment_budget"] = cfg.deployment_budget;
  j["strategy"] = std::string(to_string(cfg.strategy));
  if (cfg.base_cell) {
    j["base_cell"] = {{"row", cfg.dims.row(*cfg.base_cell)}, {"col", cfg.dims.col(*cfg.base_cell)}};
  } else {
    j["base_cell"] = nullptr;
  }
  j["master_seed"] = cfg.master_seed;
  j["agents"] = {
      {"disposable", {{"malfunction_rate", cfg.disposable.malfunction_rate}, {"stock", cfg.disposable.stock}}},
      {"high_fidelity",
       {{"malfunction_rate", cfg.high_fidelity.malfunction_rate}, {"stock", cfg.high_fidelity.stock}}}};
  j["planner"] = {{"beam_width", cfg.policies.plan.beam_width},
                  {"mi_form", cfg.policies.plan.mi_form == MiForm::Channel ? "channel" : "posterior"},
                  {"alpha_explore", cfg.policies.alpha_explore},
                  {"alpha_high_fidelity", cfg.policies.alpha_high_fidelity}};
  const auto& s = cfg.policies.sig;
  j["sig"] = {{"alpha_min", s.alpha_min},
              {"alpha_max", s.alpha_max},
              {"sweep_halfwidth", s.sweep_halfwidth},
              {"sweep_step", s.sweep_step}};
  const auto& t = cfg.policies.trigger;
  j["trigger"] = {{"window", t.window},         {"theta_early", t.theta_early}, {"phase_switch", t.phase_switch},
                  {"eps_min", t.eps_min},       {"eps_max", t.eps_max},         {"decay_rate", t.decay_rate}};
  const auto& r = cfg.relocation;
  j["relocation"] = {{"enabled", cfg.relocate_base},
                     {"explore_radius", r.explore_radius},
                     {"search_radius", r.search_radius},
                     {"safety_threshold", r.safety_threshold},
                     {"cadence", r.cadence}};
  return j.dump(2) + "\n";
}

MissionConfig proof_of_concept_scenario(double lethality, StrategyKind strategy) {
  MissionConfig cfg;
  cfg.name = "proof-of-concept";
  cfg.dims = GridDims(10, 10);
  cfg.lethality = lethality;
  cfg.team_size = 1;
  cfg.horizon = 15;
  cfg.strategy = strategy;
  // Sparse clustered hazards and a corner base: at 10% malfunction per step a
  // disposable survives a 15-step sortie only ~21% of the time, so denser maps
  // never reach half entropy within a desk-scale budget.
  cfg.hazard_density = 0.05;
  cfg.cluster_size = 5;
  cfg.base_cell = GridDims(10, 10).index(0, 0);
  cfg.deployment_budget = 600;
  cfg.disposable = default_disposable(cfg.deployment_budget);
  cfg.high_fidelity = default_high_fidelity(20);
  cfg.policies.plan.horizon = cfg.horizon;
  cfg.policies.trigger.phase_switch = cfg.deployment_budget * 3 / 10;
  // SIG always keeps the top of its sweep (scores grow with alpha), so the
  // interpolation range is kept at or below neutral.
  cfg.policies.sig.alpha_min = 0.3;
  cfg.policies.sig.alpha_max = 1.0;
  return cfg;
}

MissionConfig scalability_scenario(int team_size) {
  MissionConfig cfg;
  cfg.name = "scalability-n" + std::to_string(team_size);
  cfg.dims = GridDims(20, 20);
  cfg.lethality = 0.9;
  cfg.team_size = team_size;
  cfg.horizon = 15;
  cfg.strategy = StrategyKind::BappTid;
  cfg.hazard_density = 0.05;
  cfg.cluster_size = 5;
  cfg.deployment_budget = 200;  // rounds of n deployments
  cfg.disposable = default_disposable(team_size * cfg.deployment_budget);
  cfg.high_fidelity = default_high_fidelity(20);
  cfg.policies.plan.horizon = cfg.horizon;
  cfg.policies.trigger.phase_switch = cfg.deployment_budget * 3 / 10;
  cfg.relocate_base = false;
  return cfg;
}

MissionConfig energy_budget_scenario(int team_size, int horizon) {
  MissionConfig cfg = scalability_scenario(team_size);
  cfg.name = "energy-" + std::to_string(team_size) + "x" + std::to_string(horizon);
  cfg.horizon = horizon;
  cfg.policies.plan.horizon = horizon;
  cfg.deployment_budget = 40;
  cfg.disposable = default_disposable(team_size * cfg.deployment_budget);
  cfg.policies.trigger.phase_switch = cfg.deployment_budget * 3 / 10;
  cfg.relocate_base = true;
  return cfg;
}

}  // namespace bapp
