#pragma once

#include <filesystem>
#include <string>

#include "bapp/mission.hpp"

namespace bapp {

/// Parses a JSON scenario. Every key is optional and falls back to the
/// MissionConfig default; unknown keys raise ConfigError.
MissionConfig parse_scenario(const std::string& text);
MissionConfig load_scenario(const std::filesystem::path& path);
std::string scenario_to_json(const MissionConfig& config);

// Built-in experiment setups.

/// Single agent on 10x10, T = 15, disposable malfunction 0.10.
MissionConfig proof_of_concept_scenario(double lethality, StrategyKind strategy);
/// 20x20, lethality 0.9, T = 15, BAPP-TID, n robots, static base.
MissionConfig scalability_scenario(int team_size);
/// 20x20, lethality 0.9, BAPP-TID, n robots with paths of length T.
MissionConfig energy_budget_scenario(int team_size, int horizon);

}  // namespace bapp
