// Copyright 2026 The mtmeta Authors
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

#ifndef MTMETA_COMMANDS_HPP
#define MTMETA_COMMANDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collection.hpp"
#include "diagnostics.hpp"

namespace mtmeta {

inline constexpr std::string_view kVersion = "1.0.0";

// String-keyed options shared by every command; keys mirror the long CLI
// flags without dashes ("system-a", "resamples", ...).
class Options {
 public:
  void set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, std::string fallback) const;
  double number(const std::string& key, double fallback) const;
  std::size_t count(const std::string& key, std::size_t fallback) const;
  std::uint64_t u64(const std::string& key, std::uint64_t fallback) const;
  bool flag(const std::string& key) const;
  std::vector<std::string> list(const std::string& key, char sep = ',') const;
  std::vector<double> numbers(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct RunManifest {
  std::string tool_version{kVersion};
  std::string collection_hash;
  std::uint64_t seed = 0;
  std::vector<double> alphas;
  std::size_t cluster_resamples = 0;
  std::size_t sigtest_resamples = 0;
  std::string command_line;
  std::string timestamp;

  // The fields that determine analysis output; embedded in every report.
  std::string analysis_json() const;
  std::string json() const;
};

struct Artifact {
  std::string name;
  std::string content;
};

struct CommandOutput {
  std::vector<Artifact> artifacts;
  std::vector<std::string> warnings;
  // The primary artifact, printed by the CLI.
  const std::string& text() const { return artifacts.front().content; }
};

const std::vector<std::string>& command_names();
bool command_needs_collection(std::string_view command);

// Throws Error; the kind doubles as the process exit code.
CommandOutput run_command(std::string_view command, const Collection* collection, const Options& opts);

}  // namespace mtmeta

#endif  // MTMETA_COMMANDS_HPP
