#pragma once

#include <string>

#include <json.hpp>

#include "tsgpr/baselines.hpp"
#include "tsgpr/material.hpp"

namespace tsgpr {

using Json = nlohmann::json;

Json to_json(const GprModel& m);
GprModel gpr_from_json(const Json& j);

Json to_json(const OutputScaledGpr& m);
OutputScaledGpr scaled_gpr_from_json(const Json& j);

Json to_json(const DamageModel& m);
DamageModel damage_from_json(const Json& j);

/// tsm-1 model bundle.
Json to_json(const TwoStageModel& m);
TwoStageModel two_stage_from_json(const Json& j);

Json to_json(const BlackBoxModel& m);
BlackBoxModel blackbox_from_json(const Json& j);
Json to_json(const DirectModel& m);
DirectModel direct_from_json(const Json& j);

void save_model(const TwoStageModel& m, const std::string& path);
TwoStageModel load_model(const std::string& path);

// ---- run configuration ----

struct RunConfig {
  GeneratorConfig generator = paper_synthetic_config();
  bool use_generator = true;
  std::string dataset_csv;
  double cutoff = 1.25;
  Stage1NuggetPolicy stage1_nuggets;
  double dam_nugget = 1e-4;
  double blackbox_nugget = 1e-2;
  ConstraintConfig constraints;
  unsigned long long seed = 42;
  int restarts = 5;
  std::string output_dir = ".";
};

GeneratorConfig generator_from_json(const Json& j);
Json to_json(const GeneratorConfig& g);
RunConfig run_config_from_json(const Json& j);

PathMode path_mode_from_string(const std::string& s);
std::string to_string(PathMode m);

}  // namespace tsgpr
