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

#ifndef MTMETA_SCORING_HPP
#define MTMETA_SCORING_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "bleu.hpp"
#include "chrf.hpp"
#include "collection.hpp"
#include "diagnostics.hpp"
#include "ter.hpp"
#include "tokenizer.hpp"

namespace mtmeta {

enum class BuiltinMetric { Bleu, Chrf, Ter };

// Case-insensitive: "bleu", "chrf", "ter".
std::optional<BuiltinMetric> parse_builtin_metric(std::string_view name);
std::string_view canonical_name(BuiltinMetric m);

struct ScoringConfig {
  // Unset: the cjk-char scheme for Chinese and Japanese targets, the default
  // scheme otherwise.
  std::optional<TokenizerKind> tokenizer;
  bool lowercase = false;
  BleuOptions bleu;
  TerOptions ter;

  TokenizationScheme scheme_for(std::string_view target_lang) const;
};

// Per-segment sufficient statistics of one system under one metric. Corpus
// scores are recomputed from sums, so any multiset of segment indices
// (a bootstrap resample) can be scored. `Mean` holds segment-level external
// scores whose corpus score is their average.
class SegmentStats {
 public:
  using Bleu = std::vector<BleuSegmentStats>;
  using Chrf = std::vector<ChrfSegmentStats>;
  using Ter = std::vector<TerSegmentStats>;
  struct Mean {
    std::vector<double> values;
    bool operator==(const Mean&) const = default;
  };

  SegmentStats() = default;
  SegmentStats(Bleu s, BleuOptions opts) : data_(std::move(s)), bleu_(opts) {}
  explicit SegmentStats(Chrf s) : data_(std::move(s)) {}
  explicit SegmentStats(Ter s) : data_(std::move(s)) {}
  explicit SegmentStats(Mean s) : data_(std::move(s)) {}

  bool empty() const { return size() == 0; }
  std::size_t size() const;
  std::string_view kind() const;
  bool same_kind(const SegmentStats& o) const { return data_.index() == o.data_.index(); }

  // Orientation-normalised corpus score (TER negated).
  double corpus_score() const;
  // Corpus score over the segments at `indices`, repetitions counted.
  double resampled_score(std::span<const std::size_t> indices) const;

  const auto& data() const { return data_; }

 private:
  std::variant<std::monostate, Bleu, Chrf, Ter, Mean> data_;
  BleuOptions bleu_;
};

struct SystemScore {
  std::string metric;
  std::string system_id;
  double score = 0.0;  // higher-better
  // Empty for system-level external scores.
  SegmentStats stats;
};

// Built-in metrics are computed from the campaign's outputs and references;
// any other name resolves to an ingested score set.
SystemScore score_system(const Campaign& campaign, const std::string& system_id,
                         std::string_view metric_name, const ScoringConfig& cfg = {});

SegmentStats builtin_segment_stats(BuiltinMetric metric, std::span<const std::string> hyps,
                                   std::span<const std::string> refs, const TokenizationScheme& scheme,
                                   const ScoringConfig& cfg = {});

// Scores of every (campaign, system, metric) that can be resolved. Missing
// combinations are reported through the diagnostics.
class ScoreTable {
 public:
  const SystemScore* find(const std::string& campaign_id, const std::string& system_id,
                          const std::string& metric) const;
  std::optional<double> score(const std::string& campaign_id, const std::string& system_id,
                              const std::string& metric) const;
  const std::vector<std::string>& metrics() const { return metrics_; }
  void insert(const std::string& campaign_id, SystemScore s);
  void set_metrics(std::vector<std::string> m) { metrics_ = std::move(m); }

 private:
  std::map<std::tuple<std::string, std::string, std::string>, SystemScore> scores_;
  std::vector<std::string> metrics_;
};

// Ingested metric names plus BLEU, ChrF and TER when any campaign has outputs
// with references.
std::vector<std::string> available_metrics(const Collection& collection);

ScoreTable compute_scores(const Collection& collection, const std::vector<std::string>& metrics,
                          const ScoringConfig& cfg = {}, Diagnostics* diag = nullptr);

}  // namespace mtmeta

#endif  // MTMETA_SCORING_HPP
