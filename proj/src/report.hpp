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

#ifndef MTMETA_REPORT_HPP
#define MTMETA_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "human_eval.hpp"
#include "meta_analysis.hpp"
#include "pairwise.hpp"
#include "records.hpp"
#include "resampling.hpp"

namespace mtmeta {

enum class Style { Markdown, Tsv };

std::optional<Style> parse_style(std::string_view s);

struct RenderOptions {
  Style style = Style::Markdown;
  int accuracy_precision = 1;  // accuracies are printed as percentages
  int p_precision = 3;
  int score_precision = 4;
};

std::string format_fixed(double value, int precision);

// One cluster report per column (or none). Bold marks the best metric and
// the tie marker (`*` in TSV, `†` in markdown) every other metric tied with it;
// TSV has no bold, so `*` there also marks the best.
// Throws a validation error when a cluster was computed on a different
// subset than its column.
std::string render_accuracy_table(const AccuracyTable& table, const std::vector<std::optional<ClusterReport>>& clusters,
                                  const RenderOptions& opts = {});

// Rows sorted by the significance-filtered accuracy, descending.
std::string render_quadrant_table(const std::vector<QuadrantReport>& reports, const RenderOptions& opts = {});

struct CorrelationRow {
  std::string metric;
  std::optional<DeltaCorrelations> value;
};
std::string render_correlation_table(const std::vector<CorrelationRow>& rows, const RenderOptions& opts = {});

struct HumanTestRow {
  SystemPair pair;
  double human_delta = 0.0;
  std::optional<TestOutcome> outcome;
  std::size_t unmatched = 0;
  std::string matching;
};
// TSV: campaign, system_a, system_b, delta, p, band, n, method.
std::string render_human_tests(const std::vector<HumanTestRow>& rows, std::span<const double> alphas,
                               const RenderOptions& opts = {});

// TSV triplets (metric delta, human delta, direction) plus pair identity.
std::string render_scatter(const std::vector<DeltaRecord>& records, const std::string& metric,
                           const RenderOptions& opts = {});

std::string render_cluster_report(const ClusterReport& report, const std::string& subset,
                                  const RenderOptions& opts = {});

struct SigtestRow {
  SystemPair pair;
  std::string metric;
  PairedBootstrapResult result;
};
std::string render_sigtests(const std::vector<SigtestRow>& rows, double alpha, const RenderOptions& opts = {});

std::string render_meta(const std::vector<CorrelationObservation>& obs, const AggregatedCorrelation& agg,
                        const RenderOptions& opts = {});

}  // namespace mtmeta

#endif  // MTMETA_REPORT_HPP
