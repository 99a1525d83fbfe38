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

#ifndef MTMETA_SUBSET_HPP
#define MTMETA_SUBSET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagnostics.hpp"
#include "language.hpp"
#include "records.hpp"

namespace mtmeta {

// Selection over delta records. Unset fields do not constrain. Human
// significance is "p <= alpha"; a band selects p in (lower, upper].
struct SubsetSpec {
  std::optional<Direction> direction;
  std::optional<ScriptClass> script;  // NonLatin also matches Logogram
  std::optional<std::string> domain;
  std::optional<std::string> group;
  std::optional<std::string> language_pair;  // "src-tgt"
  std::optional<double> alpha;
  std::optional<std::pair<double, double>> band;
  std::string label;

  static SubsetSpec all() { return {}; }
  static SubsetSpec significant(double alpha);
  static SubsetSpec within(double lower, double upper);

  // "all", or comma-separated key=value terms: direction=into-en|from-en|non-en,
  // script=latin|non-latin|logogram, domain=, group=, lang=src-tgt,
  // alpha=0.05, within=0.001:0.05, label=.
  static SubsetSpec parse(std::string_view text);

  bool matches(const DeltaRecord& r) const;
  // Canonical text form, parseable by parse().
  std::string describe() const;
  // Column heading.
  std::string title() const;
};

std::vector<DeltaRecord> filter_pairs(const std::vector<DeltaRecord>& records, const SubsetSpec& spec,
                                      Diagnostics* diag = nullptr);

// Fingerprint of the pair identities in a record set, order-sensitive.
std::string subset_fingerprint(const std::vector<DeltaRecord>& records);

}  // namespace mtmeta

#endif  // MTMETA_SUBSET_HPP
