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

#ifndef MTMETA_RECORDS_HPP
#define MTMETA_RECORDS_HPP

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "collection.hpp"
#include "language.hpp"

namespace mtmeta {

// One enumerated system pair with its human and metric deltas (A minus B
// under canonical order) plus the campaign tags used for subsetting.
struct DeltaRecord {
  SystemPair pair;
  double human_delta = std::numeric_limits<double>::quiet_NaN();
  // NaN when no paired human differences exist for the pair.
  double human_p = std::numeric_limits<double>::quiet_NaN();
  std::map<std::string, double> metric_deltas;

  std::string source_lang;
  std::string target_lang;
  Direction direction = Direction::NonEnglish;
  ScriptClass script = ScriptClass::Unknown;
  std::string domain;
  std::string group;

  bool has_human() const { return !std::isnan(human_delta); }
  bool has_human_p() const { return !std::isnan(human_p); }
  std::optional<double> metric_delta(const std::string& metric) const {
    auto it = metric_deltas.find(metric);
    if (it == metric_deltas.end()) return std::nullopt;
    return it->second;
  }
};

}  // namespace mtmeta

#endif  // MTMETA_RECORDS_HPP
