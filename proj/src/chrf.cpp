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

#include "chrf.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "error.hpp"
#include "tokenizer.hpp"

namespace mtmeta {

ChrfSegmentStats& ChrfSegmentStats::operator+=(const ChrfSegmentStats& o) {
  for (int n = 0; n < kChrfOrder; ++n) {
    tp[n] += o.tp[n];
    hyp_count[n] += o.hyp_count[n];
    ref_count[n] += o.ref_count[n];
  }
  return *this;
}

namespace {

std::u32string strip_whitespace(std::string_view text) {
  std::u32string out;
  for (char32_t cp : utf8::decode(text))
    if (!utf8::is_space(cp)) out.push_back(cp);
  return out;
}

std::map<std::u32string_view, std::int64_t> char_ngrams(const std::u32string& s, std::size_t n) {
  std::map<std::u32string_view, std::int64_t> counts;
  std::u32string_view v(s);
  for (std::size_t i = 0; i + n <= s.size(); ++i) ++counts[v.substr(i, n)];
  return counts;
}

}  // namespace

ChrfSegmentStats chrf_segment_stats(std::string_view hyp, std::string_view ref) {
  ChrfSegmentStats s;
  std::u32string h = strip_whitespace(hyp), r = strip_whitespace(ref);
  for (int n = 1; n <= kChrfOrder; ++n) {
    auto hc = char_ngrams(h, static_cast<std::size_t>(n));
    auto rc = char_ngrams(r, static_cast<std::size_t>(n));
    std::int64_t tp = 0;
    for (const auto& [g, c] : hc) {
      auto it = rc.find(g);
      if (it != rc.end()) tp += std::min(c, it->second);
    }
    s.tp[n - 1] = tp;
    s.ref_count[n - 1] = static_cast<std::int64_t>(r.size() >= static_cast<std::size_t>(n) ? r.size() - n + 1 : 0);
    // Hypothesis n-grams count only where the reference has some.
    if (s.ref_count[n - 1] > 0)
      s.hyp_count[n - 1] = static_cast<std::int64_t>(h.size() >= static_cast<std::size_t>(n) ? h.size() - n + 1 : 0);
  }
  return s;
}

double chrf_from_totals(const ChrfSegmentStats& t, double beta) {
  double precision = 0.0, recall = 0.0;
  int effective = 0;
  for (int n = 0; n < kChrfOrder; ++n) {
    if (t.hyp_count[n] == 0 || t.ref_count[n] == 0) continue;
    precision += static_cast<double>(t.tp[n]) / static_cast<double>(t.hyp_count[n]);
    recall += static_cast<double>(t.tp[n]) / static_cast<double>(t.ref_count[n]);
    ++effective;
  }
  if (effective == 0) return 0.0;
  precision /= effective;
  recall /= effective;
  if (precision + recall == 0.0) return 0.0;
  double b2 = beta * beta;
  return 100.0 * (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

double corpus_chrf(std::span<const ChrfSegmentStats> stats, double beta) {
  if (stats.empty()) fail(ErrorKind::Degenerate, "no segments");
  ChrfSegmentStats total;
  for (const auto& s : stats) total += s;
  return chrf_from_totals(total, beta);
}

}  // namespace mtmeta
