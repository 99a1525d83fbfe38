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

#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bleu.hpp"
#include "chrf.hpp"
#include "collection.hpp"
#include "commands.hpp"
#include "error.hpp"
#include "human_eval.hpp"
#include "meta_analysis.hpp"
#include "mtmeta/mtmeta.h"
#include "oracles.hpp"
#include "pairwise.hpp"
#include "random_collection.hpp"
#include "resampling.hpp"
#include "rng.hpp"
#include "scoring.hpp"
#include "subset.hpp"
#include "ter.hpp"
#include "tokenizer.hpp"

namespace checks {

std::string Result::summary() const {
  std::ostringstream os;
  if (skipped) return "skipped: " + note;
  os << cases << " cases, " << (violations.empty() ? 0 : violations.size()) << " violations";
  if (!note.empty()) os << "; " << note;
  for (const auto& v : violations) os << "\n    " << v;
  return os.str();
}

namespace {

using mtmeta::DeltaRecord;
using mtmeta::SubsetSpec;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const std::vector<std::string> kMetrics{"SEG", "SYS", "LOW"};

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// ------------------------------------------------------------ oracle pairs

struct OraclePair {
  std::string campaign, a, b, src, tgt, domain;
  double human_delta = 0;
  double p = kNaN;
  std::map<std::string, double> metric;
  std::vector<int> seg_a, seg_b;
};

std::vector<OraclePair> oracle_pairs(const gen::PlainCollection& pc) {
  std::vector<OraclePair> out;
  for (const auto& c : pc.campaigns) {
    if (c.judgements.empty()) continue;
    std::vector<std::string> systems = c.systems;
    std::sort(systems.begin(), systems.end());
    std::map<std::string, std::pair<double, int>> human;
    for (const auto& j : c.judgements) {
      human[j.system].first += j.score;
      human[j.system].second += 1;
    }
    for (std::size_t i = 0; i < systems.size(); ++i)
      for (std::size_t k = i + 1; k < systems.size(); ++k) {
        const auto &sa = systems[i], &sb = systems[k];
        if (!human.count(sa) || !human.count(sb)) continue;
        OraclePair p;
        p.campaign = c.id;
        p.a = sa;
        p.b = sb;
        p.src = c.src;
        p.tgt = c.tgt;
        p.domain = c.domain;
        p.human_delta = human[sa].first / human[sa].second - human[sb].first / human[sb].second;

        std::map<std::pair<int, std::string>, int> ua, ub;
        std::map<int, std::pair<double, int>> sa_seg, sb_seg;
        for (const auto& j : c.judgements) {
          if (j.system == sa) {
            ua[{j.segment, j.annotator}] = j.score;
            sa_seg[j.segment].first += j.score;
            sa_seg[j.segment].second += 1;
          } else if (j.system == sb) {
            ub[{j.segment, j.annotator}] = j.score;
            sb_seg[j.segment].first += j.score;
            sb_seg[j.segment].second += 1;
          }
        }
        std::vector<double> diffs;
        for (const auto& [key, v] : ua)
          if (ub.count(key)) diffs.push_back(static_cast<double>(v) - ub[key]);
        if (diffs.empty())
          for (const auto& [s, acc] : sa_seg)
            if (sb_seg.count(s))
              diffs.push_back(acc.first / acc.second - sb_seg[s].first / sb_seg[s].second);
        if (!diffs.empty()) p.p = oracle::wilcoxon_p(diffs);

        p.seg_a = c.seg.at(sa);
        p.seg_b = c.seg.at(sb);
        double ma = 0, mb = 0;
        for (int v : p.seg_a) ma += v;
        for (int v : p.seg_b) mb += v;
        p.metric["SEG"] = ma / c.n_segments - mb / c.n_segments;
        p.metric["SYS"] = static_cast<double>(c.sys.at(sa)) - c.sys.at(sb);
        p.metric["LOW"] = static_cast<double>(c.low.at(sb)) - c.low.at(sa);
        out.push_back(std::move(p));
      }
  }
  return out;
}

bool non_latin(const std::string& l) { return l == "zh" || l == "ja" || l == "ko" || l == "ru" || l == "ar" || l == "uk"; }
bool logogram(const std::string& l) { return l == "zh" || l == "ja" || l == "ko"; }
bool has_p(const OraclePair& p) { return !std::isnan(p.p); }

struct OracleSubset {
  std::string text;
  std::function<bool(const OraclePair&)> in;
};

const std::vector<OracleSubset>& oracle_subsets() {
  static const std::vector<OracleSubset> s{
      {"all", [](const OraclePair&) { return true; }},
      {"alpha=0.05", [](const OraclePair& p) { return has_p(p) && p.p <= 0.05; }},
      {"alpha=0.01", [](const OraclePair& p) { return has_p(p) && p.p <= 0.01; }},
      {"alpha=0.001", [](const OraclePair& p) { return has_p(p) && p.p <= 0.001; }},
      {"within=0.001:0.05", [](const OraclePair& p) { return has_p(p) && p.p > 0.001 && p.p <= 0.05; }},
      {"direction=into-en", [](const OraclePair& p) { return p.tgt == "en"; }},
      {"direction=from-en", [](const OraclePair& p) { return p.src == "en"; }},
      {"direction=non-en", [](const OraclePair& p) { return p.src != "en" && p.tgt != "en"; }},
      {"script=non-latin", [](const OraclePair& p) { return non_latin(p.tgt); }},
      {"script=logogram", [](const OraclePair& p) { return logogram(p.tgt); }},
      {"domain=news", [](const OraclePair& p) { return p.domain == "news"; }},
      {"direction=from-en,alpha=0.05", [](const OraclePair& p) { return p.src == "en" && has_p(p) && p.p <= 0.05; }},
  };
  return s;
}

struct Loaded {
  gen::PlainCollection plain;
  mtmeta::Collection collection;
  mtmeta::ScoreTable scores;
  std::vector<DeltaRecord> records;
};

Loaded load_random(std::mt19937_64& rng, const gen::Limits& lim = {}) {
  Loaded l;
  l.plain = gen::random_collection(rng, lim);
  l.collection = mtmeta::parse_collection(gen::to_jsonl(l.plain), "random");
  mtmeta::Diagnostics diag;
  l.scores = mtmeta::compute_scores(l.collection, kMetrics, {}, &diag);
  if (l.collection.has_judgements()) l.records = mtmeta::build_delta_records(l.collection, l.scores, kMetrics, {}, &diag);
  return l;
}

void compare_collection(const Loaded& l, std::uint64_t seed, Result& res, const std::string& tag) {
  auto oracle = oracle_pairs(l.plain);
  std::map<std::tuple<std::string, std::string, std::string>, const DeltaRecord*> lib;
  for (const auto& r : l.records) lib[{r.pair.campaign_id, r.pair.system_a, r.pair.system_b}] = &r;
  ++res.cases;
  if (lib.size() != oracle.size()) {
    res.violation(tag + ": pair count " + std::to_string(lib.size()) + " vs oracle " + std::to_string(oracle.size()));
    return;
  }
  for (const auto& o : oracle) {
    auto it = lib.find({o.campaign, o.a, o.b});
    if (it == lib.end()) {
      res.violation(tag + ": missing pair " + o.campaign + " " + o.a + "/" + o.b);
      return;
    }
    const auto& r = *it->second;
    if (r.human_delta != o.human_delta) res.violation(tag + ": human delta " + o.campaign + " " + o.a + "/" + o.b);
    if (std::isnan(r.human_p) != std::isnan(o.p) || (!std::isnan(o.p) && !close(r.human_p, o.p, 1e-12)))
      res.violation(tag + ": human p " + fmt(r.human_p) + " vs " + fmt(o.p));
    for (const auto& m : kMetrics)
      if (r.metric_delta(m) != o.metric.at(m)) res.violation(tag + ": " + m + " delta");
  }

  // Accuracy on every subset.
  std::vector<SubsetSpec> specs;
  for (const auto& s : oracle_subsets()) specs.push_back(SubsetSpec::parse(s.text));
  auto table = mtmeta::accuracy_table(l.records, kMetrics, specs);
  for (std::size_t c = 0; c < specs.size(); ++c)
    for (const auto& m : kMetrics) {
      std::size_t n = 0, k = 0;
      for (const auto& o : oracle)
        if (oracle_subsets()[c].in(o)) {
          ++n;
          k += oracle::sign(o.metric.at(m)) == oracle::sign(o.human_delta);
        }
      const auto& cell = table.cells.at(m)[c];
      std::size_t ln = cell ? cell->n_pairs : 0, lk = cell ? cell->n_agree : 0;
      if (ln != n || lk != k)
        res.violation(tag + ": accuracy " + m + " on " + oracle_subsets()[c].text + ": " + std::to_string(lk) + "/" +
                      std::to_string(ln) + " vs oracle " + std::to_string(k) + "/" + std::to_string(n));
    }

  // Delta correlations.
  for (const auto& m : kMetrics) {
    std::vector<double> x, y;
    for (const auto& o : oracle) {
      x.push_back(o.metric.at(m));
      y.push_back(o.human_delta);
    }
    auto constant = [](const std::vector<double>& v) {
      return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
    };
    bool degenerate = x.size() < 3 || constant(x) || constant(y);
    try {
      auto dc = mtmeta::delta_correlations(l.records, m);
      if (degenerate) res.violation(tag + ": correlations expected degenerate for " + m);
      else if (!close(dc.pearson, oracle::pearson(x, y), 1e-12) || !close(dc.spearman, oracle::spearman(x, y), 1e-12))
        res.violation(tag + ": correlations " + m + " " + fmt(dc.pearson) + "/" + fmt(dc.spearman) + " vs " +
                      fmt(oracle::pearson(x, y)) + "/" + fmt(oracle::spearman(x, y)));
    } catch (const mtmeta::Error&) {
      if (!degenerate) res.violation(tag + ": correlations threw for " + m);
    }
  }

  // Quadrants of the segment-level metric.
  mtmeta::ResampleConfig cfg;
  cfg.n_resamples = 200;
  cfg.seed = seed;
  cfg.alpha = 0.05;
  auto q = mtmeta::quadrant_analysis(l.records, l.scores, "SEG", 0.05, cfg);
  std::size_t cnt[4] = {}, boot_n = 0, boot_k = 0;
  for (const auto& o : oracle) {
    if (!has_p(o)) continue;
    const std::size_t N = o.seg_a.size();
    std::size_t wa = 0, wb = 0;
    for (std::size_t r = 0; r < cfg.n_resamples; ++r) {
      auto idx = mtmeta::resample_indices(seed, r, N);
      double sa = 0, sb = 0;
      for (auto i : idx) sa += o.seg_a[i];
      for (auto i : idx) sb += o.seg_b[i];
      sa /= static_cast<double>(N);
      sb /= static_cast<double>(N);
      wa += sa > sb;
      wb += sb > sa;
    }
    const double R = static_cast<double>(cfg.n_resamples);
    double p = std::clamp(2.0 * std::min(1.0 - wa / R, 1.0 - wb / R), 0.0, 1.0);
    bool metric_sig = p <= 0.05, human_sig = o.p <= 0.05;
    ++cnt[(human_sig ? 0 : 2) + (metric_sig ? 0 : 1)];
    if (metric_sig) {
      ++boot_n;
      boot_k += oracle::sign(o.metric.at("SEG")) == oracle::sign(o.human_delta);
    }
  }
  // cnt: 0 truly, 1 type II, 2 type I, 3 equal
  if (q.truly_differing != cnt[0] || q.type_ii != cnt[1] || q.type_i != cnt[2] || q.equal_quality != cnt[3])
    res.violation(tag + ": quadrants " + std::to_string(q.truly_differing) + "/" + std::to_string(q.type_i) + "/" +
                  std::to_string(q.type_ii) + "/" + std::to_string(q.equal_quality) + " vs oracle " +
                  std::to_string(cnt[0]) + "/" + std::to_string(cnt[2]) + "/" + std::to_string(cnt[1]) + "/" +
                  std::to_string(cnt[3]));
  std::size_t lbn = q.boot_only ? q.boot_only->n_pairs : 0, lbk = q.boot_only ? q.boot_only->n_agree : 0;
  if (lbn != boot_n || lbk != boot_k) res.violation(tag + ": boot-only accuracy differs");
}

}  // namespace

Result oracle_equivalence(int collections, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  int judged = 0;
  for (int i = 0; i < collections; ++i) {
    const std::string tag = "collection " + std::to_string(i);
    try {
      auto l = load_random(rng);
      if (!l.collection.has_judgements()) {
        ++res.cases;
        if (!oracle_pairs(l.plain).empty()) res.violation(tag + ": oracle found pairs without judgements");
        continue;
      }
      ++judged;
      compare_collection(l, seed + static_cast<std::uint64_t>(i), res, tag);
    } catch (const std::exception& e) {
      res.violation(tag + ": " + e.what());
    }
  }
  res.note = std::to_string(judged) + " collections with judgements";
  return res;
}

// ---------------------------------------------------------------- Wilcoxon

Result wilcoxon_exact() {
  Result res;
  std::mt19937_64 rng(4);
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<double> distinct(n), tied(n);
    for (std::size_t i = 0; i < n; ++i) {
      distinct[i] = static_cast<double>(i + 1);
      tied[i] = static_cast<double>(std::uniform_int_distribution<int>(1, 3)(rng));
    }
    for (const auto* mags : {&distinct, &tied})
      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i & 1) ? (*mags)[i] : -(*mags)[i];
        double lib = mtmeta::wilcoxon_signed_rank(d).p_value;
        double ref = oracle::wilcoxon_enumerate(d);
        ++res.cases;
        if (!close(lib, ref, 1e-12)) res.violation("n=" + std::to_string(n) + ": " + fmt(lib) + " vs " + fmt(ref));
      }
  }
  std::vector<double> worked{1, 2, 3, 4, 5};
  double p = mtmeta::wilcoxon_signed_rank(worked).p_value;
  ++res.cases;
  if (p != 0.0625) res.violation("[1,2,3,4,5] gave " + fmt(p));
  return res;
}

Result wilcoxon_asymptotic(int trials, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  const int n = 30, sims = 400000;
  std::vector<int> dist(n * (n + 1) / 2 + 1, 0);
  for (int s = 0; s < sims; ++s) {
    std::uint64_t bits = rng();
    int w = 0;
    for (int i = 0; i < n; ++i)
      if (bits >> i & 1) w += i + 1;
    ++dist[static_cast<std::size_t>(w)];
  }
  for (int t = 0; t < trials; ++t) {
    std::vector<double> d(n);
    // Bias the signs so p-values spread over (0, 1].
    const double bias = 0.5 + 0.4 * t / trials;
    int w = 0;
    for (int i = 0; i < n; ++i) {
      bool pos = std::uniform_real_distribution<double>(0, 1)(rng) < bias;
      d[static_cast<std::size_t>(i)] = pos ? i + 1 : -(i + 1);
      if (pos) w += i + 1;
    }
    double le = 0, ge = 0;
    for (std::size_t k = 0; k < dist.size(); ++k) {
      if (static_cast<int>(k) <= w) le += dist[k];
      if (static_cast<int>(k) >= w) ge += dist[k];
    }
    double mc = std::min(1.0, 2.0 * std::min(le, ge) / sims);
    double lib = mtmeta::wilcoxon_signed_rank(d).p_value;
    ++res.cases;
    if (!close(lib, mc, 0.01)) res.violation("W+=" + std::to_string(w) + ": " + fmt(lib) + " vs MC " + fmt(mc));
  }
  return res;
}

// ----------------------------------------------------------------- metrics

namespace {

nlohmann::json load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return nlohmann::json::parse(in);
}

mtmeta::TerSegmentStats ter_of(const std::string& hyp, const std::string& ref) {
  return mtmeta::ter_segment(mtmeta::tokenize(hyp), mtmeta::tokenize(ref));
}

double bleu_of(const std::vector<std::string>& h, const std::vector<std::string>& r, bool strict = false) {
  mtmeta::ScoringConfig cfg;
  cfg.bleu.strict = strict;
  return mtmeta::builtin_segment_stats(mtmeta::BuiltinMetric::Bleu, h, r, {}, cfg).corpus_score();
}

double chrf_of(const std::vector<std::string>& h, const std::vector<std::string>& r) {
  return mtmeta::builtin_segment_stats(mtmeta::BuiltinMetric::Chrf, h, r, {}).corpus_score();
}

}  // namespace

Result metric_fixtures(const std::string& fixture_path) {
  Result res;
  auto expect = [&](bool ok, const std::string& what) {
    ++res.cases;
    if (!ok) res.violation(what);
  };
  for (std::string s : {"the cat sat on the mat", "a", "Hello, world!", "多语言 测试", "x y z w v u"}) {
    expect(bleu_of({s}, {s}) == 100.0, "BLEU identity: " + s);
    expect(chrf_of({s}, {s}) == 100.0, "ChrF identity: " + s);
    expect(ter_of(s, s).edits == 0, "TER identity: " + s);
  }
  expect(close(bleu_of({"the cat sat"}, {"the cat sat down"}), 100.0 * std::exp(1.0 - 4.0 / 3.0), 1e-12),
         "BLEU brevity fixture");
  expect(close(bleu_of({"a b c d e"}, {"a b c d f"}), 100.0 * std::pow(0.2, 0.25), 1e-12), "BLEU precision fixture");
  expect(bleu_of({"x y"}, {"a b"}) == 0.0, "BLEU no-match fixture");
  expect(bleu_of({"the cat sat"}, {"the cat sat down"}, true) == 0.0, "BLEU strict fixture");
  expect(close(chrf_of({"abc"}, {"abd"}), 700.0 / 18.0, 1e-12), "ChrF abc/abd fixture");
  expect(close(chrf_of({"a b c"}, {"abd"}), 700.0 / 18.0, 1e-12), "ChrF whitespace fixture");
  expect(ter_of("a b c d", "c d a b").edits == 1, "TER single shift fixture");
  expect(ter_of("a b", "a c").edits == 1, "TER substitution fixture");
  expect(ter_of("", "a b").edits == 2, "TER empty hypothesis fixture");
  expect(ter_of("a", "a b c").edits == 2, "TER insertion fixture");
  expect(ter_of("b c a d", "a b c d").edits == 1, "TER shift fixture");
  expect(ter_of("a b c d e", "a b").edits == 3, "TER deletion fixture");

  auto fx = load_fixtures(fixture_path);
  for (const auto& t : fx["tokenizer_13a"]) {
    auto got = mtmeta::tokenize(t["input"].get<std::string>());
    expect(got == t["tokens"].get<std::vector<std::string>>(), "13a tokens: " + t["input"].get<std::string>());
  }
  for (const auto& c : fx["corpora"]) {
    auto h = c["hyps"].get<std::vector<std::string>>(), r = c["refs"].get<std::vector<std::string>>();
    expect(close(bleu_of(h, r), c["bleu"].get<double>(), 1e-9),
           "BLEU vs sacrebleu: " + fmt(bleu_of(h, r)) + " vs " + fmt(c["bleu"].get<double>()));
    expect(close(bleu_of(h, r, true), c["bleu_strict"].get<double>(), 1e-9), "strict BLEU vs sacrebleu");
    expect(close(chrf_of(h, r), c["chrf"].get<double>(), 1e-9),
           "ChrF vs sacrebleu: " + fmt(chrf_of(h, r)) + " vs " + fmt(c["chrf"].get<double>()));
  }
  return res;
}

Result ter_exhaustive(int cases, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int c = 0; c < cases; ++c) {
    const int vocab = uni(2, 4), rl = uni(1, 7), hl = uni(0, 8 - rl);
    std::vector<int> h(static_cast<std::size_t>(hl)), r(static_cast<std::size_t>(rl));
    for (auto& x : h) x = uni(0, vocab - 1);
    for (auto& x : r) x = uni(0, vocab - 1);
    mtmeta::Tokens ht, rt;
    for (int x : h) ht.push_back("w" + std::to_string(x));
    for (int x : r) rt.push_back("w" + std::to_string(x));
    auto lib = mtmeta::ter_segment(ht, rt).edits;
    auto ref = oracle::ter_exhaustive(h, r);
    ++res.cases;
    if (lib != ref) {
      std::string s;
      for (auto& t : ht) s += t + " ";
      s += "| ";
      for (auto& t : rt) s += t + " ";
      res.violation(s + ": " + std::to_string(lib) + " vs " + std::to_string(ref));
    }
  }
  return res;
}

Result sufficient_statistics(const std::string& fixture_path, std::uint64_t seed) {
  Result res;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> corpora;
  const auto fx = load_fixtures(fixture_path);
  for (const auto& c : fx["corpora"])
    corpora.emplace_back(c["hyps"].get<std::vector<std::string>>(), c["refs"].get<std::vector<std::string>>());
  std::mt19937_64 rng(seed);
  const std::vector<std::string> words{"a", "b", "c", "the", "cat", "dog", "über", "日本", "語", ",", ".", "it's"};
  auto sentence = [&](int lo) {
    std::string s;
    int len = std::uniform_int_distribution<int>(lo, 15)(rng);
    for (int i = 0; i < len; ++i) s += (i ? " " : "") + words[rng() % words.size()];
    return s;
  };
  for (int k = 0; k < 200; ++k) {
    std::vector<std::string> h, r;
    int n = std::uniform_int_distribution<int>(1, 20)(rng);
    for (int i = 0; i < n; ++i) {
      h.push_back(sentence(0));
      r.push_back(sentence(1));
    }
    corpora.emplace_back(h, r);
  }

  using mtmeta::BuiltinMetric;
  for (const auto& [h, r] : corpora) {
    std::vector<std::size_t> identity(h.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    std::vector<oracle::Toks> ht, rt;
    for (const auto& s : h) ht.push_back(mtmeta::tokenize(s));
    for (const auto& s : r) rt.push_back(mtmeta::tokenize(s));
    ++res.cases;

    // BLEU: integer statistics against direct n-gram counting.
    auto bs = mtmeta::builtin_segment_stats(BuiltinMetric::Bleu, h, r, {});
    mtmeta::BleuSegmentStats total;
    for (const auto& s : std::get<mtmeta::SegmentStats::Bleu>(bs.data())) total += s;
    for (std::size_t n = 1; n <= 4; ++n) {
      std::int64_t m = 0, t = 0;
      for (std::size_t i = 0; i < ht.size(); ++i) {
        auto hg = oracle::ngrams(ht[i], n), rg = oracle::ngrams(rt[i], n);
        for (auto& [g, c] : hg) {
          t += c;
          if (rg.count(g)) m += std::min(c, rg[g]);
        }
      }
      if (total.matches[n - 1] != m || total.totals[n - 1] != t) res.violation("BLEU counts differ");
    }
    double cached = bs.corpus_score();
    if (cached != bs.resampled_score(identity)) res.violation("BLEU cached vs resampled identity");
    if (!close(cached, oracle::bleu(ht, rt), 1e-9)) res.violation("BLEU cached vs direct " + fmt(cached));

    auto cs = mtmeta::builtin_segment_stats(BuiltinMetric::Chrf, h, r, {});
    double cc = cs.corpus_score();
    if (cc != cs.resampled_score(identity)) res.violation("ChrF cached vs resampled identity");
    if (!close(cc, oracle::chrf(h, r), 1e-9)) res.violation("ChrF cached vs direct " + fmt(cc));

    bool empty_ref = std::any_of(rt.begin(), rt.end(), [](const oracle::Toks& t) { return t.empty(); });
    if (!empty_ref) {
      auto ts = mtmeta::builtin_segment_stats(BuiltinMetric::Ter, h, r, {});
      std::int64_t edits = 0, len = 0;
      for (std::size_t i = 0; i < ht.size(); ++i) {
        auto s = mtmeta::ter_segment(ht[i], rt[i]);
        edits += s.edits;
        len += static_cast<std::int64_t>(rt[i].size());
      }
      double direct = static_cast<double>(edits) / static_cast<double>(len);
      if (-ts.corpus_score() != direct || ts.resampled_score(identity) != ts.corpus_score())
        res.violation("TER cached vs direct");
    }
  }
  return res;
}

// --------------------------------------------------------------- invariance

namespace {

// Random strictly increasing function; odd (f(0) = 0) when `odd` is set.
std::function<double(double)> random_increasing(std::mt19937_64& rng, bool odd) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = 0.01 + u(rng), b = 5 * u(rng), c = 0.5 + 20 * u(rng), d = 3 * u(rng), e = odd ? 0.0 : 2 * u(rng);
  return [=](double x) { return a * x + b * std::tanh(x / c) + d * std::cbrt(x) + e * std::exp(x / 60.0); };
}

struct AccCounts {
  std::size_t n = 0, k = 0;
  bool operator==(const AccCounts&) const = default;
};

AccCounts counts(const std::vector<DeltaRecord>& recs, const std::string& m, const SubsetSpec& s) {
  try {
    auto a = mtmeta::accuracy(recs, m, s);
    return {a.n_pairs, a.n_agree};
  } catch (const mtmeta::Error&) {
    return {};
  }
}

}  // namespace

Result invariance(int transforms, std::uint64_t seed) {
  Result res;
  std::mt19937_64 rng(seed);
  std::vector<Loaded> pool;
  while (pool.size() < 12) {
    auto l = load_random(rng);
    if (l.records.size() >= 5) pool.push_back(std::move(l));
  }
  std::vector<SubsetSpec> specs;
  for (const auto& s : oracle_subsets()) specs.push_back(SubsetSpec::parse(s.text));

  for (int t = 0; t < transforms; ++t) {
    const auto& l = pool[static_cast<std::size_t>(t) % pool.size()];
    const std::string& m = kMetrics[static_cast<std::size_t>(t) % 2];  // SEG or SYS
    auto g = random_increasing(rng, false);
    auto f = random_increasing(rng, true);
    auto score_level = l.records, delta_level = l.records;
    for (std::size_t i = 0; i < l.records.size(); ++i) {
      const auto& p = l.records[i].pair;
      double a = *l.scores.score(p.campaign_id, p.system_a, m), b = *l.scores.score(p.campaign_id, p.system_b, m);
      score_level[i].metric_deltas[m] = g(a) - g(b);
      delta_level[i].metric_deltas[m] = f(l.records[i].metric_deltas.at(m));
    }
    ++res.cases;
    for (const auto& s : specs) {
      auto base = counts(l.records, m, s);
      if (!(counts(score_level, m, s) == base)) res.violation("score transform changed accuracy on " + s.describe());
      if (!(counts(delta_level, m, s) == base)) res.violation("delta transform changed accuracy on " + s.describe());
    }
    try {
      double s0 = mtmeta::delta_correlations(l.records, m).spearman;
      double s1 = mtmeta::delta_correlations(delta_level, m).spearman;
      if (s0 != s1) res.violation("delta transform changed Spearman: " + fmt(s0) + " vs " + fmt(s1));
    } catch (const mtmeta::Error&) {
    }
  }

  // Pair-orientation antisymmetry.
  for (const auto& l : pool) {
    auto flipped = l.records;
    for (auto& r : flipped) {
      std::swap(r.pair.system_a, r.pair.system_b);
      r.human_delta = -r.human_delta;
      for (auto& [k, v] : r.metric_deltas) v = -v;
    }
    ++res.cases;
    for (const auto& m : kMetrics) {
      for (const auto& s : specs)
        if (!(counts(flipped, m, s) == counts(l.records, m, s))) res.violation("flip changed accuracy for " + m);
      try {
        auto a = mtmeta::delta_correlations(l.records, m), b = mtmeta::delta_correlations(flipped, m);
        if (!close(a.pearson, b.pearson, 1e-12) || !close(a.spearman, b.spearman, 1e-12))
          res.violation("flip changed correlations for " + m);
      } catch (const mtmeta::Error&) {
      }
    }
  }
  for (int t = 0; t < 200; ++t) {
    std::vector<double> d(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 40)(rng)));
    for (auto& x : d) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    std::vector<double> neg(d.size());
    std::transform(d.begin(), d.end(), neg.begin(), [](double x) { return -x; });
    ++res.cases;
    if (mtmeta::wilcoxon_signed_rank(d).p_value != mtmeta::wilcoxon_signed_rank(neg).p_value)
      res.violation("Wilcoxon p not symmetric under negation");
  }

  // Subset nesting.
  for (const auto& l : pool) {
    ++res.cases;
    auto n = [&](const std::string& s) { return mtmeta::filter_pairs(l.records, SubsetSpec::parse(s)).size(); };
    if (!(n("alpha=0.001") <= n("alpha=0.01") && n("alpha=0.01") <= n("alpha=0.05") && n("alpha=0.05") <= n("all")))
      res.violation("alpha subsets not nested");
    if (n("within=0.001:0.05") > n("alpha=0.05")) res.violation("within band larger than alpha=0.05");
    for (std::string d : {"into-en", "from-en", "non-en"})
      if (n("direction=" + d + ",alpha=0.05") > n("direction=" + d) || n("direction=" + d) > n("all"))
        res.violation("direction subsets not nested");
    if (n("script=logogram") > n("script=non-latin")) res.violation("logogram subset larger than non-latin");
  }

  // Hunter-Schmidt bounds, split invariance, permutation invariance.
  for (int t = 0; t < 1000; ++t) {
    std::vector<mtmeta::CorrelationObservation> obs;
    int k = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < k; ++i)
      obs.push_back({"g" + std::to_string(i), std::uniform_real_distribution<double>(-1, 1)(rng),
                     std::uniform_int_distribution<std::int64_t>(2, 500)(rng)});
    auto agg = mtmeta::hunter_schmidt(obs);
    double lo = 1, hi = -1;
    for (const auto& o : obs) {
      lo = std::min(lo, o.r);
      hi = std::max(hi, o.r);
    }
    ++res.cases;
    if (agg.r < lo - 1e-12 || agg.r > hi + 1e-12) res.violation("Hunter-Schmidt outside [min, max]");
    auto split = obs;
    auto& victim = split[static_cast<std::size_t>(t) % split.size()];
    if (victim.n >= 4) {
      std::int64_t n1 = victim.n / 2;
      auto copy = victim;
      victim.n -= n1;
      copy.n = n1;
      split.push_back(copy);
      if (!close(mtmeta::hunter_schmidt(split).r, agg.r, 1e-12)) res.violation("Hunter-Schmidt split changed r");
    }
    auto perm = obs;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (!close(mtmeta::hunter_schmidt(perm).r, agg.r, 1e-12)) res.violation("Hunter-Schmidt permutation changed r");
  }
  return res;
}

// -------------------------------------------------------------- determinism

namespace {

std::map<std::string, std::string> run_pipeline(mtm_collection* c, const std::string& threads) {
  mtm_options* o = mtm_options_new();
  mtm_options_set(o, "seed", "11");
  mtm_options_set(o, "cluster-resamples", "2000");
  mtm_options_set(o, "timestamp", "2026-01-01T00:00:00Z");
  mtm_options_set(o, "threads", threads.c_str());
  mtm_result* r = nullptr;
  std::map<std::string, std::string> out;
  if (mtm_run("pipeline", c, o, &r) == MTM_OK) {
    for (std::size_t i = 0; i < mtm_result_artifact_count(r); ++i) {
      std::size_t len = 0;
      const char* data = mtm_result_artifact_content(r, i, &len);
      out[mtm_result_artifact_name(r, i)] = std::string(data, len);
    }
  } else {
    out["error"] = mtm_last_error();
  }
  mtm_result_free(r);
  mtm_options_free(o);
  return out;
}

std::map<std::string, std::string> read_dir(const std::filesystem::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    out[e.path().filename().string()] = os.str();
  }
  return out;
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab != std::string::npos) out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

}  // namespace

Result determinism(const std::string& collection_path, const std::string& cli_path, const std::string& work_dir) {
  Result res;
  namespace fs = std::filesystem;
  fs::create_directories(work_dir);

  mtm_collection* c = nullptr;
  if (mtm_collection_load(collection_path.c_str(), nullptr, 0, &c) != MTM_OK) {
    res.violation(std::string("load failed: ") + mtm_last_error());
    return res;
  }
  auto a = run_pipeline(c, "1"), b = run_pipeline(c, "1"), p = run_pipeline(c, "4");
  mtm_collection_free(c);
  ++res.cases;
  if (a.count("error")) res.violation("pipeline failed: " + a["error"]);
  if (a != b) res.violation("two in-process pipeline runs differ");
  if (a != p) res.violation("pipeline output depends on the thread count");

  // Same command line in two working directories, so the manifests match too.
  const fs::path w1 = fs::path(work_dir) / "run1", w2 = fs::path(work_dir) / "run2";
  const fs::path d1 = w1 / "bundle", d2 = w2 / "bundle";
  fs::remove_all(w1);
  fs::remove_all(w2);
  fs::create_directories(w1);
  fs::create_directories(w2);
  const std::string cmd = "\"" + cli_path + "\" pipeline --collection \"" + collection_path +
                          "\" --seed 11 --cluster-resamples 2000 --timestamp 2026-01-01T00:00:00Z --quiet --out bundle";
  auto in = [&](const fs::path& dir) { return "cd \"" + dir.string() + "\" && " + cmd; };
  ++res.cases;
  if (std::system(in(w1).c_str()) != 0 || std::system(in(w2).c_str()) != 0) {
    res.violation("CLI pipeline failed");
  } else {
    auto f1 = read_dir(d1), f2 = read_dir(d2);
    if (f1 != f2) res.violation("two CLI pipeline bundles differ");
    for (const auto& [name, content] : a)
      if (name != "manifest.json" && (!f1.count(name) || f1[name] != content))
        res.violation("CLI artifact " + name + " differs from the library run");
  }

  // compare: identical hypotheses are tied with p = 1; swapping A and B mirrors the verdict.
  const fs::path ref = fs::path(work_dir) / "ref.txt", ha = fs::path(work_dir) / "a.txt",
                 hb = fs::path(work_dir) / "b.txt";
  std::ofstream(ref) << "the cat sat on the mat\na quick brown fox\nit rains today\nwe like tea\nshe reads books\n"
                        "the train is late\nopen the door\nhe writes code\nbirds can fly\nthe sun is hot\n";
  std::ofstream(ha) << "the cat sat on a mat\na quick brown fox\nit rains now\nwe like tea\nshe reads a book\n"
                       "the train is late\nopen door\nhe writes code\nbirds fly\nthe sun is hot\n";
  std::ofstream(hb) << "cat mat\nfox\nrain\ntea we\nbooks\ntrain\ndoor the\ncode\nfly\nsun\n";
  auto compare = [&](const fs::path& x, const fs::path& y) {
    mtmeta::Options o;
    o.set("reference", ref.string());
    o.set("hyp-a", x.string());
    o.set("hyp-b", y.string());
    o.set("seed", "7");
    return parse_kv(mtmeta::run_command("compare", nullptr, o).text());
  };
  ++res.cases;
  auto same = compare(ha, ha);
  if (same["verdict"] != "tied" || same["p"] != "1.000") res.violation("identical files: " + same["verdict"] + " p=" + same["p"]);
  const char* lines[] = {"x y z", "a b"};
  double pv = -1;
  if (mtm_paired_bootstrap("bleu", lines, lines, lines, 2, 1000, 3, &pv, nullptr, nullptr) != MTM_OK || pv != 1.0)
    res.violation("C API paired bootstrap on identical inputs gave p=" + fmt(pv));
  auto ab = compare(ha, hb), ba = compare(hb, ha);
  ++res.cases;
  if (ab["verdict"] != "A-better" || ba["verdict"] != "B-better" || ab["p"] != ba["p"])
    res.violation("compare not antisymmetric: " + ab["verdict"] + "/" + ba["verdict"]);
  return res;
}

// ------------------------------------------------------------------ dataset

namespace {

struct Dataset {
  mtmeta::Collection collection;
  mtmeta::ScoreTable scores;
  std::vector<DeltaRecord> records;
};

Dataset load_dataset(const std::string& path, const std::string& scores_path) {
  Dataset d;
  std::vector<std::filesystem::path> extra;
  if (!scores_path.empty()) extra.emplace_back(scores_path);
  mtmeta::Diagnostics diag;
  d.collection = mtmeta::load_collection(path, extra, &diag);
  d.scores = mtmeta::compute_scores(d.collection, {"COMET", "BLEU"}, {}, &diag);
  d.records = mtmeta::build_delta_records(d.collection, d.scores, {"COMET", "BLEU"}, {}, &diag);
  return d;
}

}  // namespace

Result dataset_accuracy(const std::string& path, const std::string& scores_path) {
  Result res;
  if (path.empty()) {
    res.skipped = true;
    res.note = "released judgement collection not available (set MTMETA_DATASET); oracle equivalence substitutes";
    return res;
  }
  auto d = load_dataset(path, scores_path);
  auto table = mtmeta::accuracy_table(d.records, {"COMET", "BLEU"}, mtmeta::kDefaultAlphas);
  const std::map<std::string, std::vector<double>> expected{{"COMET", {83.4, 96.5, 98.7, 99.2, 90.6}},
                                                            {"BLEU", {74.6, 88.2, 91.7, 94.6, 74.3}}};
  const std::vector<double> n_expected{3344, 1717, 1420, 1176, 541};
  for (std::size_t c = 0; c < table.columns.size() && c < n_expected.size(); ++c) {
    ++res.cases;
    if (std::fabs(static_cast<double>(table.columns[c].n) - n_expected[c]) > 0.01 * n_expected[c])
      res.violation("n in column " + table.columns[c].title + ": " + std::to_string(table.columns[c].n));
    for (const auto& [m, values] : expected) {
      const auto& cell = table.cells.at(m)[c];
      if (!cell || std::fabs(100 * cell->accuracy - values[c]) > 0.3)
        res.violation(m + " in column " + table.columns[c].title + ": " + (cell ? fmt(100 * cell->accuracy) : "-"));
    }
  }
  return res;
}

Result dataset_quadrants(const std::string& path, const std::string& scores_path) {
  Result res;
  if (path.empty()) {
    res.skipped = true;
    res.note = "released judgement collection not available (set MTMETA_DATASET); oracle equivalence substitutes";
    return res;
  }
  auto d = load_dataset(path, scores_path);
  mtmeta::ResampleConfig cfg;
  cfg.n_resamples = 1000;
  auto q = mtmeta::quadrant_analysis(d.records, d.scores, "COMET", 0.05, cfg);
  ++res.cases;
  if (!q.no_test || std::fabs(100 * q.no_test->accuracy - 83.4) > 0.5) res.violation("COMET no-test accuracy");
  if (!q.boot_only || std::fabs(100 * q.boot_only->accuracy - 95.1) > 0.5) res.violation("COMET boot accuracy");
  if (std::fabs(100 * q.type_ii_rate - 17.3) > 1.5) res.violation("COMET type II rate " + fmt(100 * q.type_ii_rate));
  auto dc = mtmeta::delta_correlations(d.records, "COMET");
  ++res.cases;
  if (std::fabs(dc.spearman - 0.879) > 0.005) res.violation("COMET Spearman " + fmt(dc.spearman));
  if (std::fabs(dc.pearson - 0.919) > 0.005) res.violation("COMET Pearson " + fmt(dc.pearson));
  return res;
}

}  // namespace checks
