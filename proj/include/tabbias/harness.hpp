// Copyright 2026 The tabbias Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tabbias/bias.hpp"
#include "tabbias/encoder.hpp"
#include "tabbias/validate.hpp"

// Scenario grid runner: trains generators per scenario on a carved subset of
// a source table, validates them and writes scenario and gain tables.

namespace tabbias {

enum class Scenario { big_data, low_data, pretrain, avg, maml, drs };

std::string_view to_string(Scenario s);
Scenario parse_scenario(std::string_view name);
const std::vector<Scenario>& all_scenarios();
inline bool is_bias_scenario(Scenario s) { return s != Scenario::big_data && s != Scenario::low_data; }

struct MlPreset {
  std::string name;
  Index m = 0;
  Index l = 0;
  bool operator==(const MlPreset&) const = default;
};

/// "reliable" (7500, 1000) or "unreliable" (100, 100).
MlPreset ml_preset(std::string_view name);

/// Latent size by dataset name: adult/intrusion 10, news 20, king 15,
/// otherwise min(16, ceil(width / 4)).
Index default_latent_dim(std::string_view dataset, Index encoded_width);

struct ScenarioConfig {
  std::vector<Scenario> scenarios = {Scenario::low_data};
  std::string dataset;  // name used for presets and tables; defaults to the data file stem
  std::filesystem::path data;
  std::filesystem::path schema;
  std::filesystem::path out = "results";
  Index n = 300;          // training rows for low_data and the bias scenarios
  Index big_n = 10000;    // training rows for big_data
  std::vector<MlPreset> ml = {ml_preset("reliable")};
  std::size_t seeds = 10;  // S
  int repeats = 5;
  std::uint64_t master_seed = 0;
  std::optional<Index> latent_dim;  // preset by dataset when absent
  VaeConfig vae;
  MamlConfig maml;
  DiscriminatorConfig discriminator;
  Index synthetic_rows = 10000;  // rows generated for pre-training
  Index task_rows = 1000;        // rows per meta-learning / DRS task
  std::size_t workers = 1;       // does not affect results
  bool save_models = true;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

nlohmann::json to_json(const ScenarioConfig& c);
/// Relative paths in the document are resolved against `base_dir`.
ScenarioConfig scenario_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

struct ScenarioReport {
  Scenario scenario = Scenario::low_data;
  MlPreset preset;
  DivergenceReport report;
};

struct CarvedIndices {
  std::vector<std::size_t> low_train;  // source-table rows
  std::vector<std::size_t> big_train;
  std::vector<std::size_t> pool;       // validation pool, disjoint from both
};

/// Carves training rows and the validation pool from a permutation of the
/// source rows seeded by master_seed. Throws DataError listing the
/// requirement when the table is too small.
CarvedIndices carve_indices(std::size_t source_rows, const ScenarioConfig& config);

struct ExperimentResult {
  std::string dataset;
  nlohmann::json config;
  std::vector<ScenarioReport> reports;
  std::vector<double> ensemble_val_losses;
  std::optional<std::size_t> best_seed;
  nlohmann::json provenance;  // per scenario: how theta_0 was built
  std::vector<std::pair<std::string, double>> timings;  // stage -> seconds
};

nlohmann::json to_json(const ExperimentResult& r);

/// Runs every configured scenario. The seed ensemble is trained once and
/// shared by the bias scenarios. Writes models and index sets under
/// config.out when it is non-empty.
ExperimentResult run_scenarios(const ScenarioConfig& config);

/// Convenience wrapper for a single scenario.
ExperimentResult run_scenario(ScenarioConfig config, Scenario scenario);

struct GainEntry {
  std::string dataset;
  std::string preset;
  std::string strategy;
  std::string metric;  // "js" or "kl"
  double low_mean = 0.0;
  double method_mean = 0.0;
  double absolute = 0.0;
  std::optional<double> relative;  // absent when low_mean <= 0
};

/// absolute = low - method (positive = improvement), relative = absolute / low.
std::vector<GainEntry> compute_gains(const DivergenceReport& low, const DivergenceReport& method);

/// Gains of every bias scenario against low_data under the same preset.
std::vector<GainEntry> gain_table(const ExperimentResult& result);

/// "0.157 (0.004)"
std::string format_mean_std(double mean, double std);

/// Writes scenario_table.{csv,md} and gain_table.{csv,md} into `out_dir`.
void emit_tables(const std::vector<ExperimentResult>& results, const std::filesystem::path& out_dir);

/// result.json, the tables and timings.json.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& out_dir);

}  // namespace tabbias
