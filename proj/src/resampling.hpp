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

#ifndef MTMETA_RESAMPLING_HPP
#define MTMETA_RESAMPLING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diagnostics.hpp"
#include "human_eval.hpp"
#include "pairwise.hpp"
#include "records.hpp"
#include "scoring.hpp"
#include "subset.hpp"

namespace mtmeta {

inline constexpr std::size_t kClusterResamples = 10000;
inline constexpr std::size_t kSigtestResamples = 1000;

struct ResampleConfig {
  std::size_t n_resamples = kClusterResamples;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  double alpha = 0.05;
  bool one_sided = false;  // metric test only: H1 = "A better than B"
  unsigned threads = 0;    // 0: hardware concurrency, capped at 8

  void validate() const;
};

struct ClusterReport {
  std::string best_metric;
  std::set<std::string> tied_with_best;
  // Fraction of resamples in which the best metric strictly beat each metric.
  std::map<std::string, double> win_fraction;
  std::map<std::string, double> accuracy;  // on the full subset
  std::size_t n = 0;
  std::size_t n_resamples = 0;
  std::uint64_t seed = 0;
  std::string fingerprint;  // subset_fingerprint of the records analysed

  bool tied(const std::string& metric) const { return tied_with_best.count(metric) > 0; }
};

// Best metric by accuracy on `records` (ties: earliest in `metrics`), then
// one-vs-best bootstrap over pairs. A metric is tied with the best when the
// best wins in fewer than `confidence` of the resamples.
ClusterReport bootstrap_accuracy_clusters(const std::vector<DeltaRecord>& records,
                                          const std::vector<std::string>& metrics, const ResampleConfig& cfg);
ClusterReport bootstrap_accuracy_clusters(const std::vector<DeltaRecord>& records,
                                          const std::vector<std::string>& metrics, const SubsetSpec& subset,
                                          const ResampleConfig& cfg);

struct PairedBootstrapResult {
  TestOutcome outcome;
  double score_a = 0.0;
  double score_b = 0.0;
  std::size_t wins_a = 0;
  std::size_t wins_b = 0;
  std::size_t ties = 0;
  std::size_t n_resamples = 0;
  std::uint64_t seed = 0;
};

// Paired bootstrap over segments. Resamples where the scores are equal count
// for neither system, so p = 2 * min(1 - wins_a/R, 1 - wins_b/R) (one-sided:
// 1 - wins_a/R), clamped to [0, 1].
PairedBootstrapResult paired_bootstrap_metric_test(const SegmentStats& a, const SegmentStats& b,
                                                   const ResampleConfig& cfg);

struct QuadrantReport {
  std::string metric;
  std::size_t truly_differing = 0;  // human significant, metric significant
  std::size_t type_i = 0;           // human not significant, metric significant
  std::size_t type_ii = 0;          // human significant, metric not significant
  std::size_t equal_quality = 0;    // neither
  double type_ii_rate = 0.0;        // type_ii / (type_ii + equal_quality)
  std::size_t n_pairs = 0;          // pairs classified
  std::optional<AccuracyResult> no_test;    // every pair with a metric delta
  std::optional<AccuracyResult> boot_only;  // pairs the metric test calls significant
  double human_alpha = 0.05;
  double metric_alpha = 0.05;
  std::size_t n_resamples = 0;
  std::uint64_t seed = 0;
};

// Metric-test outcome per record, in record order; empty where segment
// statistics are unavailable.
std::vector<std::optional<PairedBootstrapResult>> metric_significance(
    const std::vector<DeltaRecord>& records, const ScoreTable& scores, const std::string& metric,
    const ResampleConfig& cfg);

QuadrantReport quadrant_analysis(const std::vector<DeltaRecord>& records, const ScoreTable& scores,
                                 const std::string& metric, double human_alpha, const ResampleConfig& cfg,
                                 Diagnostics* diag = nullptr);
// Same, with the metric-test decisions already computed (one per record).
QuadrantReport quadrant_analysis(const std::vector<DeltaRecord>& records,
                                 const std::vector<std::optional<bool>>& metric_significant,
                                 const std::string& metric, double human_alpha);

}  // namespace mtmeta

#endif  // MTMETA_RESAMPLING_HPP
