// Copyright 2026 The synthsurvey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// The experiment commands behind the command-line verbs. Each command reads
// an ExperimentConfig, talks to the model through a cached gateway and writes
// its tables into the output directory.

#ifndef SYNTHSURVEY_WORKFLOWS_HPP
#define SYNTHSURVEY_WORKFLOWS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "synthsurvey/config.hpp"
#include "synthsurvey/data_io.hpp"
#include "synthsurvey/gateway.hpp"
#include "synthsurvey/table.hpp"

namespace synthsurvey {

struct CommandOptions {
  /// Answer from the mock respondent and the cache only.
  bool offline = false;
  /// Response cache file; defaults to <out_dir>/cache.jsonl.
  std::optional<std::filesystem::path> cache;
  /// Overrides the config's output directory.
  std::optional<std::filesystem::path> out_dir;
  /// Progress and request counts; nothing is logged when null.
  std::ostream* log = nullptr;
};

struct CommandResult {
  std::vector<std::filesystem::path> files;  // in write order
  std::size_t backend_calls = 0;
  std::size_t failures = 0;  // isolated per-persona or per-step failures
};

/// Shared state of one command: resolved config, gateway and sample.
class Session {
 public:
  Session(ExperimentConfig config, CommandOptions options);

  const ExperimentConfig& config() const { return config_; }
  const std::filesystem::path& out_dir() const { return out_dir_; }
  Gateway& gateway() { return *gateway_; }

  /// The configured sample with its benchmark answers, loaded on first use.
  const Microdata& data();
  const SurveySample& sample() { return data().sample; }
  std::vector<double> weights();
  /// Benchmark answers at a horizon, or nullopt if the sample has none.
  std::optional<std::vector<MaybeValue>> benchmark(int horizon);

  Scenario scenario();
  /// Component series, if the scenario is built from a file.
  const SeriesSet* series();

  ModelConfig model(double temperature) const;
  ModelConfig model() const { return model(config_.model.temperature); }

  /// Writes `content` to <out_dir>/<name> and records the path.
  void write(const std::string& name, std::string_view content);
  void write_table(const std::string& stem, const Table& table, bool markdown = false);
  void log(const std::string& line);

  CommandResult finish();
  void add_failures(std::size_t n) { failures_ += n; }

 private:
  ExperimentConfig config_;
  CommandOptions options_;
  std::filesystem::path out_dir_;
  std::shared_ptr<Gateway> gateway_;
  std::optional<Microdata> data_;
  std::optional<SeriesSet> series_;
  bool series_loaded_ = false;
  std::vector<std::filesystem::path> files_;
  std::size_t failures_ = 0;
};

CommandResult cmd_calibrate(const ExperimentConfig& config, const CommandOptions& options);
CommandResult cmd_run(const ExperimentConfig& config, const CommandOptions& options);
CommandResult cmd_profile(const ExperimentConfig& config, const CommandOptions& options);
CommandResult cmd_decompose(const ExperimentConfig& config, const CommandOptions& options);
CommandResult cmd_scan(const ExperimentConfig& config, const CommandOptions& options);
CommandResult cmd_regress(const ExperimentConfig& config, const CommandOptions& options);
CommandResult cmd_probe(const ExperimentConfig& config, const CommandOptions& options);

struct SynthDataOptions {
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  Marginals marginals;
  std::filesystem::path output;
};
/// Writes a synthetic microdata file; returns its path.
std::filesystem::path cmd_synth_data(const SynthDataOptions& options);

/// System prompt used for knowledge probes.
inline constexpr std::string_view kProbeSystemPrompt = "You are a helpful assistant.";

/// One prompt per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> parse_probe_prompts(std::string_view text);
/// The shipped knowledge-validation prompts (data/probes.txt).
std::vector<std::string> default_probe_prompts();

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_WORKFLOWS_HPP
