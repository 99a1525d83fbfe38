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

#ifndef MTMETA_PAIRWISE_HPP
#define MTMETA_PAIRWISE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "collection.hpp"
#include "diagnostics.hpp"
#include "human_eval.hpp"
#include "records.hpp"
#include "scoring.hpp"
#include "subset.hpp"

namespace mtmeta {

struct DeltaOptions {
  MatchingMode matching = MatchingMode::AnnotatorWithFallback;
  WilcoxonOptions wilcoxon;
  // Keep only pairs that have a delta for every requested metric.
  bool intersect_metrics = false;
};

// One record per enumerated pair of every campaign with judgements.
std::vector<DeltaRecord> build_delta_records(const Collection& collection, const ScoreTable& scores,
                                             const std::vector<std::string>& metrics,
                                             const DeltaOptions& opts = {}, Diagnostics* diag = nullptr);

struct AccuracyResult {
  std::string metric;
  std::size_t n_pairs = 0;
  std::size_t n_agree = 0;
  double accuracy = 0.0;
};

inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

// sign(metric delta) == sign(human delta); a zero metric delta agrees only
// with a zero human delta.
bool agrees(const DeltaRecord& r, const std::string& metric);

// Over records already selected; those lacking the metric are skipped.
// Throws when no record carries the metric.
AccuracyResult accuracy_over(std::span<const DeltaRecord> records, const std::string& metric,
                             const std::string& description = "subset");
AccuracyResult accuracy(const std::vector<DeltaRecord>& records, const std::string& metric,
                        const SubsetSpec& subset = {});

struct DeltaCorrelations {
  double pearson = 0.0;
  double spearman = 0.0;
  std::size_t n = 0;
};

double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);
std::vector<double> average_ranks(std::span<const double> values);

DeltaCorrelations delta_correlations(const std::vector<DeltaRecord>& records, const std::string& metric,
                                     const SubsetSpec& subset = {});

struct AccuracyColumn {
  SubsetSpec spec;
  std::string title;
  std::size_t n = 0;  // pairs in the subset
  std::string fingerprint;
};

struct AccuracyTable {
  std::vector<AccuracyColumn> columns;
  std::vector<std::string> metrics;  // row order
  // metric -> one cell per column; empty when the metric has no pair there.
  std::map<std::string, std::vector<std::optional<AccuracyResult>>> cells;
  std::size_t sort_column = 0;
  std::vector<std::string> notes;
};

// Columns All, one per alpha, and the band between the smallest and largest
// alpha; rows sorted by the first alpha column.
AccuracyTable accuracy_table(const std::vector<DeltaRecord>& records, const std::vector<std::string>& metrics,
                             std::span<const double> alphas);
AccuracyTable accuracy_table(const std::vector<DeltaRecord>& records, const std::vector<std::string>& metrics,
                             const std::vector<SubsetSpec>& columns, std::size_t sort_column = 0,
                             Diagnostics* diag = nullptr);

}  // namespace mtmeta

#endif  // MTMETA_PAIRWISE_HPP
