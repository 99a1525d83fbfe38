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

#ifndef MTMETA_META_ANALYSIS_HPP
#define MTMETA_META_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtmeta {

struct CorrelationObservation {
  std::string group_label;
  double r = 0.0;
  std::int64_t n = 0;  // systems in the group
};

struct AggregatedCorrelation {
  double r = 0.0;
  std::int64_t n_total = 0;
};

// Hunter-Schmidt bare-bones aggregate: the n-weighted mean of raw r.
AggregatedCorrelation hunter_schmidt(std::span<const CorrelationObservation> observations);

// TSV with columns group, r, n. A header line whose r column is not numeric
// is skipped, as are blank lines and lines starting with '#'.
std::vector<CorrelationObservation> parse_correlations_tsv(std::string_view text);

}  // namespace mtmeta

#endif  // MTMETA_META_ANALYSIS_HPP
