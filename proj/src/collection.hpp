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

#ifndef MTMETA_COLLECTION_HPP
#define MTMETA_COLLECTION_HPP

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagnostics.hpp"

namespace mtmeta {

enum class Orientation { HigherBetter, LowerBetter };
enum class Granularity { Segment, System };

std::string_view to_string(Orientation o);
std::string_view to_string(Granularity g);
std::optional<Orientation> parse_orientation(std::string_view s);
std::optional<Granularity> parse_granularity(std::string_view s);

// Line number of the JSONL record an object was read from. Ignored by
// equality so that re-serialised collections compare equal.
struct RecordRef {
  std::size_t line = 0;
  friend bool operator==(const RecordRef&, const RecordRef&) { return true; }
};

struct Segment {
  std::string segment_id;
  std::string source_text;
  std::optional<std::string> reference_text;
  RecordRef record;
  bool operator==(const Segment&) const = default;
};

struct SystemOutput {
  std::string system_id;
  std::string segment_id;
  std::string hypothesis_text;
  RecordRef record;
  bool operator==(const SystemOutput&) const = default;
};

struct Judgement {
  std::string annotator_id;
  std::string system_id;
  std::string segment_id;
  double score = 0.0;
  RecordRef record;
  bool operator==(const Judgement&) const = default;
};

// Scores are stored higher-better: sets declared lower-better are negated
// when ingested. `orientation` keeps the declared direction so the set can
// be written back out in its original form.
struct MetricScoreSet {
  std::string metric_name;
  Orientation orientation = Orientation::HigherBetter;
  Granularity granularity = Granularity::System;
  std::map<std::string, std::map<std::string, double>> segment_scores;
  std::map<std::string, double> system_scores;
  RecordRef record;

  bool covers(const std::string& system_id) const;
  // System-level score; the mean over segments for segment granularity.
  std::optional<double> system_score(const std::string& system_id) const;
  bool operator==(const MetricScoreSet&) const = default;
};

struct SystemPair {
  std::string campaign_id;
  std::string system_a;
  std::string system_b;
  auto operator<=>(const SystemPair&) const = default;
};

struct Campaign {
  std::string campaign_id;
  std::string source_lang;
  std::string target_lang;
  std::string domain_tag;
  std::string group_tag;
  // Per-pair group overrides, keyed by canonical (system_a, system_b).
  std::map<std::pair<std::string, std::string>, std::string> pair_groups;
  std::vector<Segment> segments;
  std::vector<SystemOutput> outputs;
  std::vector<Judgement> judgements;
  std::vector<MetricScoreSet> metric_scores;
  RecordRef record;

  // Derived at finalisation: sorted system ids, and hypotheses per system
  // aligned with `segments`.
  std::vector<std::string> systems;
  std::map<std::string, std::vector<std::string>> hypotheses;

  bool has_outputs() const { return !outputs.empty(); }
  bool has_references() const;
  const MetricScoreSet* metric(std::string_view name) const;
  const std::vector<std::string>* hypotheses_of(const std::string& system_id) const;
  std::string group_of(const SystemPair& pair) const;
  bool has_system(const std::string& system_id) const;

  bool operator==(const Campaign& o) const {
    return campaign_id == o.campaign_id && source_lang == o.source_lang &&
           target_lang == o.target_lang && domain_tag == o.domain_tag &&
           group_tag == o.group_tag && pair_groups == o.pair_groups &&
           segments == o.segments && outputs == o.outputs &&
           judgements == o.judgements && metric_scores == o.metric_scores;
  }
};

struct CollectionManifest {
  int schema_version = 1;
  std::vector<double> alphas{0.05, 0.01, 0.001};
  std::map<std::string, Orientation> orientations;
  bool operator==(const CollectionManifest&) const = default;
};

struct Collection {
  CollectionManifest manifest;
  std::vector<Campaign> campaigns;
  // FNV-1a of the input bytes (or of the serialised form when built in memory).
  std::string content_hash;

  const Campaign* find(std::string_view campaign_id) const;
  // Names of all ingested metric score sets, sorted.
  std::vector<std::string> metric_names() const;
  bool has_judgements() const;

  bool operator==(const Collection& o) const {
    return manifest == o.manifest && campaigns == o.campaigns;
  }
};

// Reads a JSONL collection. Lower-better metric sets are negated. Extra
// files hold external metric scores, one row per score.
Collection load_collection(const std::filesystem::path& path,
                           const std::vector<std::filesystem::path>& score_files = {},
                           Diagnostics* diag = nullptr);
Collection parse_collection(std::string_view text, std::string_view source_name = "<memory>",
                            Diagnostics* diag = nullptr);

// Adds rows {metric_name, campaign_id, system_id, segment_id?, score}.
void ingest_external_scores(Collection& collection, std::string_view jsonl,
                            std::string_view source_name, Diagnostics* diag = nullptr);

// Validates referential integrity and coverage and derives the per-campaign
// indices. Scores are taken as already orientation-normalised.
void finalize_collection(Collection& collection);

std::string serialize_collection(const Collection& collection);

// All k(k-1)/2 pairs, lexicographic on system id.
std::vector<SystemPair> enumerate_pairs(const Campaign& campaign);

}  // namespace mtmeta

#endif  // MTMETA_COLLECTION_HPP
