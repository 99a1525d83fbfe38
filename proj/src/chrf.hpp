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

#ifndef MTMETA_CHRF_HPP
#define MTMETA_CHRF_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace mtmeta {

inline constexpr int kChrfOrder = 6;
inline constexpr double kChrfBeta = 2.0;

struct ChrfSegmentStats {
  std::array<std::int64_t, kChrfOrder> tp{};
  std::array<std::int64_t, kChrfOrder> hyp_count{};
  std::array<std::int64_t, kChrfOrder> ref_count{};

  ChrfSegmentStats& operator+=(const ChrfSegmentStats& o);
  bool operator==(const ChrfSegmentStats&) const = default;
};

// Character n-grams over code points with all whitespace removed.
ChrfSegmentStats chrf_segment_stats(std::string_view hyp, std::string_view ref);

// F-beta in [0, 100]: precision and recall averaged over the orders that
// have both hypothesis and reference n-grams.
double corpus_chrf(std::span<const ChrfSegmentStats> stats, double beta = kChrfBeta);
double chrf_from_totals(const ChrfSegmentStats& totals, double beta = kChrfBeta);

}  // namespace mtmeta

#endif  // MTMETA_CHRF_HPP
