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

#ifndef MTMETA_HUMAN_EVAL_HPP
#define MTMETA_HUMAN_EVAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collection.hpp"

namespace mtmeta {

inline const std::vector<double> kDefaultAlphas{0.05, 0.01, 0.001};

struct HumanSystemScore {
  std::string campaign_id;
  std::string system_id;
  double mean_score = 0.0;
  std::size_t n_judgements = 0;
};

// Plain mean of the raw 0-100 judgements, no standardisation.
HumanSystemScore human_system_score(const Campaign& campaign, const std::string& system_id);

enum class MatchingMode {
  // (segment, annotator) units judged on both sides.
  Annotator,
  // Per-segment mean of each system.
  Segment,
  // Annotator units; segment units when no annotator overlaps.
  AnnotatorWithFallback,
};

std::optional<MatchingMode> parse_matching_mode(std::string_view s);
std::string_view to_string(MatchingMode m);

struct PairedDifferences {
  SystemPair pair;
  std::vector<double> diffs;  // A minus B
  std::size_t unmatched = 0;  // judgements not part of any matched unit
  MatchingMode matching = MatchingMode::Annotator;
};

PairedDifferences paired_differences(const Campaign& campaign, const SystemPair& pair,
                                     MatchingMode mode = MatchingMode::AnnotatorWithFallback);

enum class ZeroMethod {
  // Drop zero differences before ranking.
  Discard,
  // Rank zeros with the rest, then drop them.
  Pratt,
};

struct WilcoxonOptions {
  ZeroMethod zero_method = ZeroMethod::Discard;
  // Exact null distribution up to this many nonzero differences.
  std::size_t exact_threshold = 25;
  bool continuity = true;
  std::vector<double> alphas = kDefaultAlphas;
};

struct TestOutcome {
  double p_value = 1.0;
  double statistic = 0.0;
  // alpha -> significant (p <= alpha)
  std::map<double, bool> decisions;
  std::string method_note;
  bool degenerate = false;
  std::size_t n_used = 0;
  std::size_t n_zero = 0;
};

// Two-sided paired Wilcoxon signed-rank test. The statistic is
// min(W+, W-); tied magnitudes get average ranks.
TestOutcome wilcoxon_signed_rank(std::span<const double> diffs, const WilcoxonOptions& opts = {});

std::map<double, bool> decide(double p, std::span<const double> alphas);

struct SignificanceBand {
  // "ns" or the smallest alpha at which p is significant, e.g. "0.01".
  std::string label;
  std::map<double, bool> significant;
  // min(alphas) < p <= max(alphas)
  bool within = false;
};

SignificanceBand significance_band(double p, std::span<const double> alphas = kDefaultAlphas);

std::string format_alpha(double alpha);

}  // namespace mtmeta

#endif  // MTMETA_HUMAN_EVAL_HPP
