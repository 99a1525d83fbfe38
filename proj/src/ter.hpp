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

#ifndef MTMETA_TER_HPP
#define MTMETA_TER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tokenizer.hpp"

namespace mtmeta {

struct TerSegmentStats {
  std::int64_t edits = 0;  // insertions + deletions + substitutions + shifts
  std::int64_t ref_length = 0;

  TerSegmentStats& operator+=(const TerSegmentStats& o) {
    edits += o.edits;
    ref_length += o.ref_length;
    return *this;
  }
  bool operator==(const TerSegmentStats&) const = default;
};

struct TerOptions {
  int max_shifts = 10;
  // Up to this many hypothesis plus reference tokens the shift sequence is
  // found by exhaustive search instead of greedily.
  std::size_t exact_search_length = 8;
  // Hypotheses up to this length try every block move as a shift candidate;
  // longer ones use reference-matched spans at aligned destinations.
  std::size_t full_search_length = 12;
  std::size_t max_span = 10;
  std::size_t max_shift_distance = 50;
};

// Greedy shift search: repeatedly apply the block move that most reduces the
// edit distance, then add the remaining word edit distance. Short segments
// get the exact minimum over all shift sequences.
TerSegmentStats ter_segment(const Tokens& hyp, const Tokens& ref, const TerOptions& opts = {});

// Sum of edits over sum of reference lengths (an error rate; lower is better).
double corpus_ter(std::span<const TerSegmentStats> stats);
double ter_from_totals(const TerSegmentStats& totals);

// Word-level Levenshtein distance with unit costs.
std::size_t edit_distance(std::span<const int> a, std::span<const int> b);

}  // namespace mtmeta

#endif  // MTMETA_TER_HPP
