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

#include "pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"
#include "language.hpp"

namespace mtmeta {

std::vector<DeltaRecord> build_delta_records(const Collection& collection, const ScoreTable& scores,
                                             const std::vector<std::string>& metrics, const DeltaOptions& opts,
                                             Diagnostics* diag) {
  std::vector<DeltaRecord> out;
  for (const auto& c : collection.campaigns) {
    if (c.judgements.empty()) {
      if (diag) diag->warn("campaign " + c.campaign_id + " has no judgements; its pairs are skipped");
      continue;
    }
    std::map<std::string, double> human;
    for (const auto& s : c.systems) {
      try {
        human[s] = human_system_score(c, s).mean_score;
      } catch (const Error& e) {
        if (diag) diag->warn(e.what());
      }
    }
    for (const auto& pair : enumerate_pairs(c)) {
      if (!human.count(pair.system_a) || !human.count(pair.system_b)) continue;
      DeltaRecord r;
      r.pair = pair;
      r.human_delta = human[pair.system_a] - human[pair.system_b];
      try {
        auto pd = paired_differences(c, pair, opts.matching);
        r.human_p = wilcoxon_signed_rank(pd.diffs, opts.wilcoxon).p_value;
      } catch (const Error& e) {
        if (diag) diag->warn(std::string(e.what()) + "; pair kept without a human p-value");
      }
      for (const auto& m : metrics) {
        auto a = scores.score(c.campaign_id, pair.system_a, m);
        auto b = scores.score(c.campaign_id, pair.system_b, m);
        if (a && b) r.metric_deltas[m] = *a - *b;
      }
      if (opts.intersect_metrics && r.metric_deltas.size() != metrics.size()) {
        if (diag) diag->warn("pair " + pair.system_a + "/" + pair.system_b + " of campaign " + c.campaign_id +
                             " dropped: not every metric is scored");
        continue;
      }
      r.source_lang = c.source_lang;
      r.target_lang = c.target_lang;
      r.direction = direction(c.source_lang, c.target_lang);
      r.script = script_class(c.target_lang);
      r.domain = c.domain_tag;
      r.group = c.group_of(pair);
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool agrees(const DeltaRecord& r, const std::string& metric) {
  auto d = r.metric_delta(metric);
  return d && sign(*d) == sign(r.human_delta);
}

AccuracyResult accuracy_over(std::span<const DeltaRecord> records, const std::string& metric,
                             const std::string& description) {
  AccuracyResult res;
  res.metric = metric;
  for (const auto& r : records) {
    auto d = r.metric_delta(metric);
    if (!d || !r.has_human()) continue;
    ++res.n_pairs;
    if (sign(*d) == sign(r.human_delta)) ++res.n_agree;
  }
  if (res.n_pairs == 0)
    fail(ErrorKind::Degenerate, "empty subset '" + description + "' for metric " + metric);
  res.accuracy = static_cast<double>(res.n_agree) / static_cast<double>(res.n_pairs);
  return res;
}

AccuracyResult accuracy(const std::vector<DeltaRecord>& records, const std::string& metric,
                        const SubsetSpec& subset) {
  auto sel = filter_pairs(records, subset);
  return accuracy_over(sel, metric, subset.describe());
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    double r = (static_cast<double>(i + j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) fail(ErrorKind::Degenerate, "constant deltas");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  auto rx = average_ranks(x), ry = average_ranks(y);
  return pearson(rx, ry);
}

DeltaCorrelations delta_correlations(const std::vector<DeltaRecord>& records, const std::string& metric,
                                     const SubsetSpec& subset) {
  std::vector<double> m, h;
  for (const auto& r : filter_pairs(records, subset)) {
    auto d = r.metric_delta(metric);
    if (!d || !r.has_human()) continue;
    m.push_back(*d);
    h.push_back(r.human_delta);
  }
  if (m.size() < 3)
    fail(ErrorKind::Degenerate, "delta correlations need at least 3 pairs for " + metric + " (have " +
                                    std::to_string(m.size()) + ")");
  return {pearson(m, h), spearman(m, h), m.size()};
}

AccuracyTable accuracy_table(const std::vector<DeltaRecord>& records, const std::vector<std::string>& metrics,
                             std::span<const double> alphas) {
  std::vector<SubsetSpec> cols{SubsetSpec::all()};
  std::vector<double> sorted(alphas.begin(), alphas.end());
  std::sort(sorted.rbegin(), sorted.rend());
  for (double a : sorted) cols.push_back(SubsetSpec::significant(a));
  if (sorted.size() >= 2) cols.push_back(SubsetSpec::within(sorted.back(), sorted.front()));
  return accuracy_table(records, metrics, cols, sorted.empty() ? 0 : 1);
}

AccuracyTable accuracy_table(const std::vector<DeltaRecord>& records, const std::vector<std::string>& metrics,
                             const std::vector<SubsetSpec>& columns, std::size_t sort_column,
                             Diagnostics* diag) {
  AccuracyTable t;
  t.sort_column = std::min(sort_column, columns.empty() ? 0 : columns.size() - 1);
  std::vector<std::vector<DeltaRecord>> selected;
  for (const auto& spec : columns) {
    auto sel = filter_pairs(records, spec, diag);
    AccuracyColumn col{spec, spec.title(), 0, subset_fingerprint(sel)};
    col.n = static_cast<std::size_t>(
        std::count_if(sel.begin(), sel.end(), [](const DeltaRecord& r) { return r.has_human(); }));
    t.columns.push_back(col);
    selected.push_back(std::move(sel));
  }
  for (const auto& m : metrics) {
    auto& row = t.cells[m];
    for (std::size_t c = 0; c < columns.size(); ++c) {
      try {
        row.push_back(accuracy_over(selected[c], m, columns[c].describe()));
      } catch (const Error&) {
        row.push_back(std::nullopt);
      }
      if (row.back() && row.back()->n_pairs != t.columns[c].n)
        t.notes.push_back(m + ": n=" + std::to_string(row.back()->n_pairs) + " in column " +
                          t.columns[c].title + " (scores missing for some systems)");
    }
  }
  t.metrics = metrics;
  const std::size_t sc = t.sort_column;
  std::stable_sort(t.metrics.begin(), t.metrics.end(), [&](const std::string& a, const std::string& b) {
    const auto& ca = t.cells[a], &cb = t.cells[b];
    bool ha = !ca.empty() && ca[sc].has_value(), hb = !cb.empty() && cb[sc].has_value();
    if (ha != hb) return ha;
    if (ha && ca[sc]->accuracy != cb[sc]->accuracy) return ca[sc]->accuracy > cb[sc]->accuracy;
    return a < b;
  });
  return t;
}

}  // namespace mtmeta
