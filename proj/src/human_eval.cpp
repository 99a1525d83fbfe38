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

#include "human_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace mtmeta {

HumanSystemScore human_system_score(const Campaign& campaign, const std::string& system_id) {
  HumanSystemScore out{campaign.campaign_id, system_id, 0.0, 0};
  double sum = 0.0;
  for (const auto& j : campaign.judgements) {
    if (j.system_id != system_id) continue;
    sum += j.score;
    ++out.n_judgements;
  }
  if (out.n_judgements == 0)
    fail(ErrorKind::Validation,
         "no judgements for system " + system_id + " in campaign " + campaign.campaign_id);
  out.mean_score = sum / static_cast<double>(out.n_judgements);
  return out;
}

std::optional<MatchingMode> parse_matching_mode(std::string_view s) {
  if (s == "annotator") return MatchingMode::Annotator;
  if (s == "segment") return MatchingMode::Segment;
  if (s == "auto" || s == "annotator-fallback") return MatchingMode::AnnotatorWithFallback;
  return std::nullopt;
}

std::string_view to_string(MatchingMode m) {
  switch (m) {
    case MatchingMode::Annotator: return "annotator";
    case MatchingMode::Segment: return "segment";
    case MatchingMode::AnnotatorWithFallback: break;
  }
  return "auto";
}

namespace {

struct Acc {
  double sum = 0.0;
  std::size_t n = 0;
  double mean() const { return sum / static_cast<double>(n); }
};

template <class Key, class KeyFn>
std::size_t match_units(const Campaign& c, const SystemPair& pair, KeyFn key, std::vector<double>& diffs) {
  std::map<Key, Acc> a, b;
  std::size_t total = 0;
  for (const auto& j : c.judgements) {
    if (j.system_id == pair.system_a) {
      auto& acc = a[key(j)];
      acc.sum += j.score;
      ++acc.n;
      ++total;
    } else if (j.system_id == pair.system_b) {
      auto& acc = b[key(j)];
      acc.sum += j.score;
      ++acc.n;
      ++total;
    }
  }
  std::size_t used = 0;
  for (const auto& [k, acc] : a) {
    auto it = b.find(k);
    if (it == b.end()) continue;
    diffs.push_back(acc.mean() - it->second.mean());
    used += acc.n + it->second.n;
  }
  return total - used;
}

}  // namespace

PairedDifferences paired_differences(const Campaign& campaign, const SystemPair& pair, MatchingMode mode) {
  PairedDifferences out;
  out.pair = pair;
  auto by_annotator = [](const Judgement& j) { return std::make_pair(j.segment_id, j.annotator_id); };
  auto by_segment = [](const Judgement& j) { return j.segment_id; };
  if (mode != MatchingMode::Segment) {
    out.matching = MatchingMode::Annotator;
    out.unmatched = match_units<std::pair<std::string, std::string>>(campaign, pair, by_annotator, out.diffs);
  }
  if (mode == MatchingMode::Segment || (mode == MatchingMode::AnnotatorWithFallback && out.diffs.empty())) {
    out.diffs.clear();
    out.matching = MatchingMode::Segment;
    out.unmatched = match_units<std::string>(campaign, pair, by_segment, out.diffs);
  }
  if (out.diffs.empty())
    fail(ErrorKind::Degenerate, "no matched units for " + pair.system_a + " vs " + pair.system_b +
                                    " in campaign " + pair.campaign_id);
  return out;
}

std::map<double, bool> decide(double p, std::span<const double> alphas) {
  std::map<double, bool> out;
  for (double a : alphas) out[a] = p <= a;
  return out;
}

namespace {

// Average ranks (1-based) of the values.
std::vector<double> average_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return values[x] < values[y]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

TestOutcome wilcoxon_signed_rank(std::span<const double> diffs, const WilcoxonOptions& opts) {
  TestOutcome out;
  std::vector<double> magnitudes;
  std::vector<bool> positive;
  std::vector<bool> zero;
  for (double d : diffs) {
    if (d == 0.0) {
      ++out.n_zero;
      if (opts.zero_method == ZeroMethod::Discard) continue;
    }
    magnitudes.push_back(std::fabs(d));
    positive.push_back(d > 0.0);
    zero.push_back(d == 0.0);
  }
  std::vector<double> all_ranks = average_ranks(magnitudes);
  std::vector<double> ranks;
  double w_plus = 0.0;
  for (std::size_t i = 0; i < all_ranks.size(); ++i) {
    if (zero[i]) continue;
    ranks.push_back(all_ranks[i]);
    if (positive[i]) w_plus += all_ranks[i];
  }
  out.n_used = ranks.size();
  if (ranks.empty()) {
    out.degenerate = true;
    out.p_value = 1.0;
    out.method_note = "degenerate: all differences are zero";
    out.decisions = decide(out.p_value, opts.alphas);
    return out;
  }
  const double total = std::accumulate(ranks.begin(), ranks.end(), 0.0);
  out.statistic = std::min(w_plus, total - w_plus);

  if (ranks.size() <= opts.exact_threshold) {
    // Ranks are multiples of 1/2; count sign assignments over doubled ranks.
    std::vector<std::int64_t> r2;
    std::int64_t max_sum = 0;
    for (double r : ranks) {
      r2.push_back(std::llround(2.0 * r));
      max_sum += r2.back();
    }
    std::vector<std::uint64_t> count(static_cast<std::size_t>(max_sum) + 1, 0);
    count[0] = 1;
    std::int64_t reach = 0;
    for (std::int64_t r : r2) {
      for (std::int64_t s = reach; s >= 0; --s)
        if (count[static_cast<std::size_t>(s)]) count[static_cast<std::size_t>(s + r)] += count[static_cast<std::size_t>(s)];
      reach += r;
    }
    const std::int64_t w = std::llround(2.0 * w_plus);
    std::uint64_t le = 0, ge = 0;
    for (std::int64_t s = 0; s <= max_sum; ++s) {
      if (s <= w) le += count[static_cast<std::size_t>(s)];
      if (s >= w) ge += count[static_cast<std::size_t>(s)];
    }
    const double denom = std::ldexp(1.0, static_cast<int>(r2.size()));
    out.p_value = std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) / denom);
    out.method_note = "exact";
  } else {
    double mean = total / 2.0, var = 0.0;
    for (double r : ranks) var += r * r / 4.0;
    double dev = std::fabs(w_plus - mean);
    if (opts.continuity) dev = std::max(0.0, dev - 0.5);
    if (var <= 0.0) {
      out.p_value = 1.0;
    } else {
      double z = dev / std::sqrt(var);
      out.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    }
    out.method_note = opts.continuity ? "normal approximation, tie and continuity corrected"
                                      : "normal approximation, tie corrected";
  }
  out.decisions = decide(out.p_value, opts.alphas);
  return out;
}

std::string format_alpha(double alpha) {
  std::ostringstream os;
  os << alpha;
  return os.str();
}

SignificanceBand significance_band(double p, std::span<const double> alphas) {
  SignificanceBand band;
  band.significant = decide(p, alphas);
  band.label = "ns";
  if (alphas.empty()) return band;
  auto [lo, hi] = std::minmax_element(alphas.begin(), alphas.end());
  for (auto it = band.significant.begin(); it != band.significant.end(); ++it) {
    if (it->second) {
      band.label = format_alpha(it->first);
      break;
    }
  }
  band.within = p > *lo && p <= *hi;
  return band;
}

}  // namespace mtmeta
