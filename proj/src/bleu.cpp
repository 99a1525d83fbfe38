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

#include "bleu.hpp"

#include <cmath>
#include <map>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace mtmeta {

BleuSegmentStats& BleuSegmentStats::operator+=(const BleuSegmentStats& o) {
  for (int n = 0; n < kBleuOrder; ++n) {
    matches[n] += o.matches[n];
    totals[n] += o.totals[n];
  }
  hyp_length += o.hyp_length;
  ref_length += o.ref_length;
  return *this;
}

namespace {

using Ngram = std::vector<std::string_view>;

std::map<Ngram, std::int64_t> count_ngrams(const Tokens& toks, std::size_t n) {
  std::map<Ngram, std::int64_t> counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i)
    ++counts[Ngram(toks.begin() + static_cast<std::ptrdiff_t>(i),
                   toks.begin() + static_cast<std::ptrdiff_t>(i + n))];
  return counts;
}

}  // namespace

BleuSegmentStats bleu_segment_stats(const Tokens& hyp, const Tokens& ref) {
  BleuSegmentStats s;
  s.hyp_length = static_cast<std::int64_t>(hyp.size());
  s.ref_length = static_cast<std::int64_t>(ref.size());
  for (int n = 1; n <= kBleuOrder; ++n) {
    auto h = count_ngrams(hyp, static_cast<std::size_t>(n));
    auto r = count_ngrams(ref, static_cast<std::size_t>(n));
    std::int64_t m = 0;
    for (const auto& [gram, c] : h) {
      auto it = r.find(gram);
      if (it != r.end()) m += std::min(c, it->second);
    }
    s.matches[n - 1] = m;
    s.totals[n - 1] = std::max<std::int64_t>(0, s.hyp_length - n + 1);
  }
  return s;
}

double bleu_from_totals(const BleuSegmentStats& t, const BleuOptions& opts) {
  if (t.hyp_length == 0) return 0.0;
  double log_sum = 0.0;
  int used = 0;
  for (int n = 0; n < kBleuOrder; ++n) {
    if (t.totals[n] == 0) {
      if (opts.strict) return 0.0;
      continue;
    }
    if (t.matches[n] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(t.matches[n]) / static_cast<double>(t.totals[n]));
    ++used;
  }
  double bp = 1.0;
  if (t.hyp_length < t.ref_length)
    bp = std::exp(1.0 - static_cast<double>(t.ref_length) / static_cast<double>(t.hyp_length));
  return 100.0 * bp * std::exp(log_sum / used);
}

double corpus_bleu(std::span<const BleuSegmentStats> stats, const BleuOptions& opts) {
  if (stats.empty()) fail(ErrorKind::Degenerate, "no segments");
  BleuSegmentStats total;
  for (const auto& s : stats) total += s;
  return bleu_from_totals(total, opts);
}

}  // namespace mtmeta
