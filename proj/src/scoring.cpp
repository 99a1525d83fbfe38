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

#include "scoring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

#include "error.hpp"
#include "language.hpp"

namespace mtmeta {

std::optional<BuiltinMetric> parse_builtin_metric(std::string_view name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "bleu") return BuiltinMetric::Bleu;
  if (lower == "chrf") return BuiltinMetric::Chrf;
  if (lower == "ter") return BuiltinMetric::Ter;
  return std::nullopt;
}

std::string_view canonical_name(BuiltinMetric m) {
  switch (m) {
    case BuiltinMetric::Bleu: return "BLEU";
    case BuiltinMetric::Chrf: return "ChrF";
    case BuiltinMetric::Ter: break;
  }
  return "TER";
}

TokenizationScheme ScoringConfig::scheme_for(std::string_view target_lang) const {
  TokenizationScheme s;
  s.lowercase = lowercase;
  if (tokenizer) {
    s.kind = *tokenizer;
  } else {
    std::string code;
    for (char c : target_lang) {
      if (c == '-' || c == '_') break;
      code.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    s.kind = (code == "zh" || code == "ja") ? TokenizerKind::CjkChar : TokenizerKind::InternationalDefault;
  }
  return s;
}

std::size_t SegmentStats::size() const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::monostate>) return 0;
        else if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Mean>) return v.values.size();
        else return v.size();
      },
      data_);
}

std::string_view SegmentStats::kind() const {
  switch (data_.index()) {
    case 1: return "bleu";
    case 2: return "chrf";
    case 3: return "ter";
    case 4: return "mean";
    default: return "none";
  }
}

double SegmentStats::corpus_score() const {
  if (empty()) fail(ErrorKind::Degenerate, "segment stats required");
  if (auto* b = std::get_if<Bleu>(&data_)) return corpus_bleu(*b, bleu_);
  if (auto* c = std::get_if<Chrf>(&data_)) return corpus_chrf(*c);
  if (auto* t = std::get_if<Ter>(&data_)) return -corpus_ter(*t);
  const auto& m = std::get<Mean>(data_).values;
  double sum = 0.0;
  for (double v : m) sum += v;
  return sum / static_cast<double>(m.size());
}

double SegmentStats::resampled_score(std::span<const std::size_t> idx) const {
  if (empty() || idx.empty()) fail(ErrorKind::Degenerate, "segment stats required");
  if (auto* b = std::get_if<Bleu>(&data_)) {
    BleuSegmentStats t;
    for (auto i : idx) t += (*b)[i];
    return bleu_from_totals(t, bleu_);
  }
  if (auto* c = std::get_if<Chrf>(&data_)) {
    ChrfSegmentStats t;
    for (auto i : idx) t += (*c)[i];
    return chrf_from_totals(t);
  }
  if (auto* tr = std::get_if<Ter>(&data_)) {
    TerSegmentStats t;
    for (auto i : idx) t += (*tr)[i];
    return -ter_from_totals(t);
  }
  const auto& m = std::get<Mean>(data_).values;
  double sum = 0.0;
  for (auto i : idx) sum += m[i];
  return sum / static_cast<double>(idx.size());
}

SegmentStats builtin_segment_stats(BuiltinMetric metric, std::span<const std::string> hyps,
                                   std::span<const std::string> refs, const TokenizationScheme& scheme,
                                   const ScoringConfig& cfg) {
  if (hyps.size() != refs.size()) fail(ErrorKind::Validation, "hypothesis and reference counts differ");
  switch (metric) {
    case BuiltinMetric::Bleu: {
      SegmentStats::Bleu s;
      for (std::size_t i = 0; i < hyps.size(); ++i)
        s.push_back(bleu_segment_stats(tokenize(hyps[i], scheme), tokenize(refs[i], scheme)));
      return SegmentStats(std::move(s), cfg.bleu);
    }
    case BuiltinMetric::Chrf: {
      SegmentStats::Chrf s;
      for (std::size_t i = 0; i < hyps.size(); ++i) s.push_back(chrf_segment_stats(hyps[i], refs[i]));
      return SegmentStats(std::move(s));
    }
    case BuiltinMetric::Ter: {
      SegmentStats::Ter s;
      for (std::size_t i = 0; i < hyps.size(); ++i)
        s.push_back(ter_segment(tokenize(hyps[i], scheme), tokenize(refs[i], scheme), cfg.ter));
      return SegmentStats(std::move(s));
    }
  }
  return {};
}

SystemScore score_system(const Campaign& campaign, const std::string& system_id,
                         std::string_view metric_name, const ScoringConfig& cfg) {
  if (!campaign.has_system(system_id))
    fail(ErrorKind::Validation, "campaign " + campaign.campaign_id + " has no system " + system_id);
  SystemScore out;
  out.metric = std::string(metric_name);
  out.system_id = system_id;

  if (const MetricScoreSet* set = campaign.metric(metric_name)) {
    auto s = set->system_score(system_id);
    if (!s)
      fail(ErrorKind::Validation, std::string(metric_name) + " has no score for " + system_id +
                                      " in campaign " + campaign.campaign_id);
    out.score = *s;
    if (set->granularity == Granularity::Segment) {
      SegmentStats::Mean m;
      const auto& segs = set->segment_scores.at(system_id);
      for (const auto& seg : campaign.segments) m.values.push_back(segs.at(seg.segment_id));
      out.stats = SegmentStats(std::move(m));
    }
    return out;
  }

  auto builtin = parse_builtin_metric(metric_name);
  if (!builtin)
    fail(ErrorKind::Usage, "metric '" + std::string(metric_name) +
                               "' is not built in (bleu, chrf, ter); ingest its scores as an external "
                               "score file");
  out.metric = std::string(canonical_name(*builtin));
  const auto* hyps = campaign.hypotheses_of(system_id);
  if (!hyps) fail(ErrorKind::Validation, "no outputs for " + system_id + " in campaign " + campaign.campaign_id);
  if (!campaign.has_references())
    fail(ErrorKind::Validation, "missing references in campaign " + campaign.campaign_id + " for " +
                                    out.metric);
  std::vector<std::string> refs;
  refs.reserve(campaign.segments.size());
  for (const auto& s : campaign.segments) refs.push_back(*s.reference_text);
  out.stats = builtin_segment_stats(*builtin, *hyps, refs, cfg.scheme_for(campaign.target_lang), cfg);
  out.score = out.stats.corpus_score();
  return out;
}

const SystemScore* ScoreTable::find(const std::string& campaign_id, const std::string& system_id,
                                    const std::string& metric) const {
  auto it = scores_.find({campaign_id, system_id, metric});
  return it == scores_.end() ? nullptr : &it->second;
}

std::optional<double> ScoreTable::score(const std::string& campaign_id, const std::string& system_id,
                                        const std::string& metric) const {
  const auto* s = find(campaign_id, system_id, metric);
  if (!s) return std::nullopt;
  return s->score;
}

void ScoreTable::insert(const std::string& campaign_id, SystemScore s) {
  std::string system = s.system_id, metric = s.metric;
  scores_.insert_or_assign({campaign_id, system, metric}, std::move(s));
}

std::vector<std::string> available_metrics(const Collection& collection) {
  std::vector<std::string> names = collection.metric_names();
  bool texts = std::any_of(collection.campaigns.begin(), collection.campaigns.end(),
                           [](const Campaign& c) { return c.has_outputs() && c.has_references(); });
  if (texts)
    for (auto m : {BuiltinMetric::Bleu, BuiltinMetric::Chrf, BuiltinMetric::Ter}) {
      std::string n(canonical_name(m));
      if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    }
  return names;
}

ScoreTable compute_scores(const Collection& collection, const std::vector<std::string>& metrics,
                          const ScoringConfig& cfg, Diagnostics* diag) {
  struct Job {
    const Campaign* campaign;
    std::string system, metric;
    std::optional<SystemScore> result;
    std::string error;
  };
  const std::vector<std::string> ingested = collection.metric_names();
  std::vector<std::string> names;
  for (const auto& m : metrics) {
    std::string n = m;
    if (std::find(ingested.begin(), ingested.end(), m) == ingested.end())
      if (auto b = parse_builtin_metric(m)) n = canonical_name(*b);
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  std::vector<Job> jobs;
  for (const auto& c : collection.campaigns)
    for (const auto& s : c.systems)
      for (const auto& m : names) jobs.push_back({&c, s, m, std::nullopt, {}});

  // Jobs are independent; results land in fixed slots so the table does not
  // depend on scheduling.
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      Job& j = jobs[i];
      const bool builtin = parse_builtin_metric(j.metric) && !j.campaign->metric(j.metric);
      if (!j.campaign->metric(j.metric) &&
          (!builtin || !j.campaign->has_outputs() || !j.campaign->has_references())) {
        j.error = "no " + j.metric + " score for system " + j.system + " in campaign " + j.campaign->campaign_id;
        continue;
      }
      try {
        j.result = score_system(*j.campaign, j.system, j.metric, cfg);
        j.result->metric = j.metric;
      } catch (const Error& e) {
        j.error = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
  }

  ScoreTable table;
  for (auto& j : jobs) {
    if (j.result) table.insert(j.campaign->campaign_id, std::move(*j.result));
    else if (diag) diag->warn(j.error);
  }
  table.set_metrics(names);
  return table;
}

}  // namespace mtmeta
