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

#include "resampling.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "error.hpp"
#include "rng.hpp"

namespace mtmeta {

void ResampleConfig::validate() const {
  if (n_resamples < 100) fail(ErrorKind::Usage, "n_resamples must be at least 100");
  if (!(confidence > 0.0 && confidence < 1.0)) fail(ErrorKind::Usage, "confidence must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::Usage, "alpha must lie in (0, 1)");
}

namespace {

unsigned worker_count(const ResampleConfig& cfg, std::size_t jobs) {
  unsigned hw = cfg.threads ? cfg.threads : std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(hw, jobs)));
}

// Runs body(i) for i in [0, n) on a small pool. Callers write to slot i only.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body body) {
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
}

}  // namespace

ClusterReport bootstrap_accuracy_clusters(const std::vector<DeltaRecord>& records,
                                          const std::vector<std::string>& metrics, const ResampleConfig& cfg) {
  cfg.validate();
  ClusterReport rep;
  rep.n = records.size();
  rep.n_resamples = cfg.n_resamples;
  rep.seed = cfg.seed;
  rep.fingerprint = subset_fingerprint(records);
  if (records.empty()) fail(ErrorKind::Degenerate, "empty subset for bootstrap clustering");

  // has[m][i], agree[m][i]
  std::vector<std::string> used;
  std::vector<std::vector<std::uint8_t>> has, agree;
  for (const auto& m : metrics) {
    std::vector<std::uint8_t> h(records.size()), a(records.size());
    std::size_t n = 0, k = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
      auto d = records[i].metric_delta(m);
      h[i] = d && records[i].has_human();
      a[i] = h[i] && sign(*d) == sign(records[i].human_delta);
      n += h[i];
      k += a[i];
    }
    if (n == 0) continue;
    used.push_back(m);
    rep.accuracy[m] = static_cast<double>(k) / static_cast<double>(n);
    has.push_back(std::move(h));
    agree.push_back(std::move(a));
  }
  if (used.empty()) fail(ErrorKind::Degenerate, "no metric has pairs in the subset");

  std::size_t best = 0;
  for (std::size_t m = 1; m < used.size(); ++m)
    if (rep.accuracy[used[m]] > rep.accuracy[used[best]]) best = m;
  rep.best_metric = used[best];

  const std::size_t R = cfg.n_resamples, N = records.size(), M = used.size();
  // wins[r * M + m] = 1 when the best metric strictly beat m in resample r.
  std::vector<std::uint8_t> wins(R * M, 0);
  parallel_for(R, worker_count(cfg, R), [&](std::size_t r) {
    auto idx = resample_indices(cfg.seed, r, N);
    std::vector<double> acc(M, 0.0);
    for (std::size_t m = 0; m < M; ++m) {
      std::size_t n = 0, k = 0;
      for (auto i : idx) {
        n += has[m][i];
        k += agree[m][i];
      }
      acc[m] = n ? static_cast<double>(k) / static_cast<double>(n) : 0.0;
    }
    for (std::size_t m = 0; m < M; ++m) wins[r * M + m] = acc[best] > acc[m];
  });
  for (std::size_t m = 0; m < M; ++m) {
    std::size_t w = 0;
    for (std::size_t r = 0; r < R; ++r) w += wins[r * M + m];
    double frac = static_cast<double>(w) / static_cast<double>(R);
    rep.win_fraction[used[m]] = frac;
    if (frac < cfg.confidence) rep.tied_with_best.insert(used[m]);
  }
  return rep;
}

ClusterReport bootstrap_accuracy_clusters(const std::vector<DeltaRecord>& records,
                                          const std::vector<std::string>& metrics, const SubsetSpec& subset,
                                          const ResampleConfig& cfg) {
  return bootstrap_accuracy_clusters(filter_pairs(records, subset), metrics, cfg);
}

PairedBootstrapResult paired_bootstrap_metric_test(const SegmentStats& a, const SegmentStats& b,
                                                   const ResampleConfig& cfg) {
  cfg.validate();
  if (a.empty() || b.empty()) fail(ErrorKind::Validation, "segment stats required");
  if (a.size() != b.size() || !a.same_kind(b))
    fail(ErrorKind::Validation, "segment sets differ between the two systems");
  PairedBootstrapResult res;
  res.n_resamples = cfg.n_resamples;
  res.seed = cfg.seed;
  res.score_a = a.corpus_score();
  res.score_b = b.corpus_score();

  const std::size_t R = cfg.n_resamples, N = a.size();
  std::vector<std::int8_t> outcome(R, 0);
  parallel_for(R, worker_count(cfg, R), [&](std::size_t r) {
    auto idx = resample_indices(cfg.seed, r, N);
    double sa = a.resampled_score(idx), sb = b.resampled_score(idx);
    outcome[r] = static_cast<std::int8_t>((sa > sb) - (sa < sb));
  });
  for (auto o : outcome) {
    if (o > 0) ++res.wins_a;
    else if (o < 0) ++res.wins_b;
    else ++res.ties;
  }
  const double fa = static_cast<double>(res.wins_a) / static_cast<double>(R);
  const double fb = static_cast<double>(res.wins_b) / static_cast<double>(R);
  double p = cfg.one_sided ? 1.0 - fa : 2.0 * std::min(1.0 - fa, 1.0 - fb);
  res.outcome.p_value = std::clamp(p, 0.0, 1.0);
  res.outcome.statistic = res.score_a - res.score_b;
  res.outcome.decisions = decide(res.outcome.p_value, std::vector<double>{cfg.alpha});
  res.outcome.method_note = cfg.one_sided ? "paired bootstrap, one-sided" : "paired bootstrap, two-sided";
  res.outcome.degenerate = res.ties == R;
  res.outcome.n_used = N;
  return res;
}

std::vector<std::optional<PairedBootstrapResult>> metric_significance(const std::vector<DeltaRecord>& records,
                                                                      const ScoreTable& scores,
                                                                      const std::string& metric,
                                                                      const ResampleConfig& cfg) {
  cfg.validate();
  std::vector<std::optional<PairedBootstrapResult>> out(records.size());
  ResampleConfig inner = cfg;
  inner.threads = 1;
  parallel_for(records.size(), worker_count(cfg, records.size()), [&](std::size_t i) {
    const auto& r = records[i];
    const auto* a = scores.find(r.pair.campaign_id, r.pair.system_a, metric);
    const auto* b = scores.find(r.pair.campaign_id, r.pair.system_b, metric);
    if (!a || !b || a->stats.empty() || b->stats.empty()) return;
    out[i] = paired_bootstrap_metric_test(a->stats, b->stats, inner);
  });
  return out;
}

QuadrantReport quadrant_analysis(const std::vector<DeltaRecord>& records,
                                 const std::vector<std::optional<bool>>& metric_significant,
                                 const std::string& metric, double human_alpha) {
  if (metric_significant.size() != records.size())
    fail(ErrorKind::Validation, "one metric-test decision per record required");
  QuadrantReport q;
  q.metric = metric;
  q.human_alpha = human_alpha;
  std::vector<DeltaRecord> boot;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!metric_significant[i] || !r.has_human_p() || !r.metric_delta(metric)) continue;
    bool human = r.human_p <= human_alpha;
    bool test = *metric_significant[i];
    ++q.n_pairs;
    if (human && test) ++q.truly_differing;
    else if (!human && test) ++q.type_i;
    else if (human) ++q.type_ii;
    else ++q.equal_quality;
    if (test) boot.push_back(r);
  }
  const std::size_t non_sig = q.type_ii + q.equal_quality;
  q.type_ii_rate = non_sig ? static_cast<double>(q.type_ii) / static_cast<double>(non_sig) : 0.0;
  try {
    q.no_test = accuracy_over(records, metric, "all");
  } catch (const Error&) {
  }
  try {
    q.boot_only = accuracy_over(boot, metric, "metric-significant");
  } catch (const Error&) {
  }
  return q;
}

QuadrantReport quadrant_analysis(const std::vector<DeltaRecord>& records, const ScoreTable& scores,
                                 const std::string& metric, double human_alpha, const ResampleConfig& cfg,
                                 Diagnostics* diag) {
  auto tests = metric_significance(records, scores, metric, cfg);
  std::vector<std::optional<bool>> sig(records.size());
  std::size_t missing = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (tests[i]) sig[i] = tests[i]->outcome.p_value <= cfg.alpha;
    else if (records[i].metric_delta(metric)) ++missing;
  }
  if (missing && diag)
    diag->warn(metric + ": " + std::to_string(missing) +
               " pairs lack segment statistics and are left out of the quadrant counts");
  auto q = quadrant_analysis(records, sig, metric, human_alpha);
  q.metric_alpha = cfg.alpha;
  q.n_resamples = cfg.n_resamples;
  q.seed = cfg.seed;
  return q;
}

}  // namespace mtmeta
