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

#ifndef MTMETA_BLEU_HPP
#define MTMETA_BLEU_HPP

#include <array>
#include <cstdint>
#include <span>

#include "tokenizer.hpp"

namespace mtmeta {

inline constexpr int kBleuOrder = 4;

struct BleuSegmentStats {
  std::array<std::int64_t, kBleuOrder> matches{};
  std::array<std::int64_t, kBleuOrder> totals{};
  std::int64_t hyp_length = 0;
  std::int64_t ref_length = 0;

  BleuSegmentStats& operator+=(const BleuSegmentStats& o);
  bool operator==(const BleuSegmentStats&) const = default;
};

struct BleuOptions {
  // Hard zero when some order has no hypothesis n-grams corpus-wide,
  // instead of skipping that order.
  bool strict = false;
};

// Clipped n-gram matches against a single reference.
BleuSegmentStats bleu_segment_stats(const Tokens& hyp, const Tokens& ref);

// Corpus BLEU in [0, 100] from summed statistics. Throws on empty input.
double corpus_bleu(std::span<const BleuSegmentStats> stats, const BleuOptions& opts = {});
double bleu_from_totals(const BleuSegmentStats& totals, const BleuOptions& opts = {});

}  // namespace mtmeta

#endif  // MTMETA_BLEU_HPP
