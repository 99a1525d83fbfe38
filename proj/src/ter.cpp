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

#include "ter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "error.hpp"

namespace mtmeta {

std::size_t edit_distance(std::span<const int> a, std::span<const int> b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

// For each reference position j, the number of hypothesis tokens consumed
// before reference token j along one optimal alignment. Entry ref.size()
// is the hypothesis length.
std::vector<std::size_t> hyp_offsets(std::span<const int> hyp, std::span<const int> ref) {
  const std::size_t n = hyp.size(), m = ref.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = std::min({at(i - 1, j) + 1, at(i, j - 1) + 1,
                           at(i - 1, j - 1) + (hyp[i - 1] != ref[j - 1] ? 1 : 0)});
  std::vector<std::size_t> offsets(m + 1, n);
  std::size_t i = n, j = m;
  while (j > 0) {
    if (i > 0 && at(i, j) == at(i - 1, j - 1) + (hyp[i - 1] != ref[j - 1] ? 1 : 0)) {
      offsets[j - 1] = i - 1;
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      --i;
    } else {
      offsets[j - 1] = i;
      --j;
    }
  }
  return offsets;
}

std::vector<int> move_block(const std::vector<int>& seq, std::size_t start, std::size_t len,
                            std::size_t dest) {
  // dest indexes the sequence with the block removed.
  std::vector<int> rest;
  rest.reserve(seq.size());
  rest.insert(rest.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(start));
  rest.insert(rest.end(), seq.begin() + static_cast<std::ptrdiff_t>(start + len), seq.end());
  std::vector<int> out;
  out.reserve(seq.size());
  out.insert(out.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(dest));
  out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(start),
             seq.begin() + static_cast<std::ptrdiff_t>(start + len));
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(dest), rest.end());
  return out;
}

struct Move {
  std::size_t start, len, dest;
  bool operator<(const Move& o) const {
    return std::tie(start, len, dest) < std::tie(o.start, o.len, o.dest);
  }
};

std::set<Move> full_candidates(std::size_t n) {
  std::set<Move> moves;
  for (std::size_t start = 0; start < n; ++start)
    for (std::size_t len = 1; start + len <= n; ++len)
      for (std::size_t dest = 0; dest <= n - len; ++dest)
        if (dest != start) moves.insert({start, len, dest});
  return moves;
}

std::set<Move> aligned_candidates(const std::vector<int>& hyp, const std::vector<int>& ref,
                                  const TerOptions& opts) {
  std::set<Move> moves;
  const auto offsets = hyp_offsets(hyp, ref);
  const std::size_t n = hyp.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = 1; len <= opts.max_span && start + len <= n; ++len) {
      for (std::size_t j = 0; j + len <= ref.size(); ++j) {
        if (!std::equal(hyp.begin() + static_cast<std::ptrdiff_t>(start),
                        hyp.begin() + static_cast<std::ptrdiff_t>(start + len),
                        ref.begin() + static_cast<std::ptrdiff_t>(j)))
          continue;
        // Already in place.
        if (offsets[j] == start) continue;
        for (std::size_t target : {offsets[j], offsets[j] + 1}) {
          if (target > n) continue;
          if (target > start && target < start + len) continue;
          std::size_t dest = target >= start + len ? target - len : target;
          if (dest == start || dest > n - len) continue;
          std::size_t dist = dest > start ? dest - start : start - dest;
          if (dist > opts.max_shift_distance) continue;
          moves.insert({start, len, dest});
        }
      }
    }
  }
  return moves;
}

// Minimum of shifts + edit distance over all block-move sequences, breadth
// first by number of shifts.
std::size_t exact_edits(const std::vector<int>& hyp, const std::vector<int>& ref) {
  std::size_t best = edit_distance(hyp, ref);
  std::set<std::vector<int>> seen{hyp};
  std::vector<std::vector<int>> frontier{hyp};
  const auto moves = full_candidates(hyp.size());
  for (std::size_t depth = 1; depth < best && !frontier.empty(); ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& seq : frontier)
      for (const auto& mv : moves) {
        auto cand = move_block(seq, mv.start, mv.len, mv.dest);
        if (!seen.insert(cand).second) continue;
        best = std::min(best, depth + edit_distance(cand, ref));
        next.push_back(std::move(cand));
      }
    frontier = std::move(next);
  }
  return best;
}

}  // namespace

TerSegmentStats ter_segment(const Tokens& hyp, const Tokens& ref, const TerOptions& opts) {
  if (ref.empty()) fail(ErrorKind::Validation, "empty reference for TER");
  std::map<std::string_view, int> vocab;
  auto encode = [&](const Tokens& toks) {
    std::vector<int> ids;
    ids.reserve(toks.size());
    for (const auto& t : toks) ids.push_back(vocab.emplace(t, static_cast<int>(vocab.size())).first->second);
    return ids;
  };
  const std::vector<int> ref_ids = encode(ref);
  std::vector<int> cur = encode(hyp);
  if (hyp.size() + ref.size() <= opts.exact_search_length)
    return {static_cast<std::int64_t>(exact_edits(cur, ref_ids)), static_cast<std::int64_t>(ref.size())};

  std::size_t base = edit_distance(cur, ref_ids);
  std::int64_t shifts = 0;
  while (shifts < opts.max_shifts && base > 0 && cur.size() > 1) {
    const auto moves = cur.size() <= opts.full_search_length ? full_candidates(cur.size())
                                                             : aligned_candidates(cur, ref_ids, opts);
    std::size_t best_gain = 0;
    std::vector<int> best;
    for (const auto& mv : moves) {
      auto cand = move_block(cur, mv.start, mv.len, mv.dest);
      std::size_t e = edit_distance(cand, ref_ids);
      if (e < base && base - e > best_gain) {
        best_gain = base - e;
        best = std::move(cand);
      }
    }
    if (best_gain == 0) break;
    cur = std::move(best);
    base -= best_gain;
    ++shifts;
  }
  return {shifts + static_cast<std::int64_t>(base), static_cast<std::int64_t>(ref.size())};
}

double ter_from_totals(const TerSegmentStats& t) {
  if (t.ref_length == 0) fail(ErrorKind::Validation, "empty reference for TER");
  return static_cast<double>(t.edits) / static_cast<double>(t.ref_length);
}

double corpus_ter(std::span<const TerSegmentStats> stats) {
  if (stats.empty()) fail(ErrorKind::Degenerate, "no segments");
  TerSegmentStats total;
  for (const auto& s : stats) total += s;
  return ter_from_totals(total);
}

}  // namespace mtmeta
