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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "human_eval.hpp"
#include "meta_analysis.hpp"
#include "pairwise.hpp"
#include "report.hpp"
#include "resampling.hpp"
#include "scoring.hpp"
#include "subset.hpp"

namespace mtmeta {

std::optional<std::string> Options::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Options::get_or(const std::string& key, std::string fallback) const {
  auto v = get(key);
  return v ? *v : std::move(fallback);
}

double Options::number(const std::string& key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    double d = std::stod(*v, &used);
    if (used == v->size()) return d;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::Usage, "--" + key + " expects a number, got '" + *v + "'");
}

std::uint64_t Options::u64(const std::string& key, std::uint64_t fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    if (!v->empty() && v->front() != '-') {
      auto n = std::stoull(*v, &used);
      if (used == v->size()) return n;
    }
  } catch (const std::exception&) {
  }
  fail(ErrorKind::Usage, "--" + key + " expects a non-negative integer, got '" + *v + "'");
}

std::size_t Options::count(const std::string& key, std::size_t fallback) const {
  return static_cast<std::size_t>(u64(key, fallback));
}

bool Options::flag(const std::string& key) const {
  auto v = get(key);
  if (!v) return false;
  if (*v == "" || *v == "1" || *v == "true" || *v == "yes" || *v == "on") return true;
  if (*v == "0" || *v == "false" || *v == "no" || *v == "off") return false;
  fail(ErrorKind::Usage, "--" + key + " expects a boolean, got '" + *v + "'");
}

std::vector<std::string> Options::list(const std::string& key, char sep) const {
  std::vector<std::string> out;
  auto v = get(key);
  if (!v) return out;
  std::string item;
  std::istringstream is(*v);
  while (std::getline(is, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<double> Options::numbers(const std::string& key) const {
  std::vector<double> out;
  for (const auto& s : list(key)) {
    Options one;
    one.set(key, s);
    out.push_back(one.number(key, 0.0));
  }
  return out;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson analysis_fields(const RunManifest& m) {
  ojson j;
  j["tool"] = "mtmeta " + m.tool_version;
  j["collection_hash"] = m.collection_hash;
  j["seed"] = m.seed;
  j["alphas"] = m.alphas;
  j["cluster_resamples"] = m.cluster_resamples;
  j["sigtest_resamples"] = m.sigtest_resamples;
  return j;
}

}  // namespace

std::string RunManifest::analysis_json() const { return analysis_fields(*this).dump(); }

std::string RunManifest::json() const {
  ojson j = analysis_fields(*this);
  j["command_line"] = command_line;
  j["timestamp"] = timestamp;
  return j.dump(2) + "\n";
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"ingest",     "validate", "score",     "human-test", "accuracy",
                                              "scatter",    "clusters", "sigtest",   "quadrants",  "meta",
                                              "report",     "compare",  "pipeline"};
  return names;
}

bool command_needs_collection(std::string_view command) { return command != "meta" && command != "compare"; }

namespace {

const std::set<std::string> kKnownKeys{
    "metrics",   "metric",     "subset",    "subsets",      "preset",        "alphas",
    "alpha",     "resamples",  "cluster-resamples",         "sigtest-resamples",
    "seed",      "confidence", "one-sided", "style",        "precision",     "p-precision",
    "tokenizer", "lowercase",  "strict",    "matching",     "zero-method",   "exact-threshold",
    "system-a",  "system-b",   "campaign",  "input",        "reference",     "hyp-a",
    "hyp-b",     "threads",    "command-line",              "timestamp",     "sort",
    "intersect", "target-lang"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string utc_timestamp(const Options& o) {
  if (auto t = o.get("timestamp")) return *t;
  std::time_t now;
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH")) now = static_cast<std::time_t>(std::strtoll(sde, nullptr, 10));
  else now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Run {
 public:
  Run(std::string_view command, const Collection* c, const Options& o) : command_(command), c_(c), o_(o) {
    for (const auto& [k, v] : o.values())
      if (!kKnownKeys.count(k)) fail(ErrorKind::Usage, "unknown option --" + k);
    if (command_needs_collection(command) && !c) fail(ErrorKind::Usage, std::string(command) + " needs --collection");

    auto style = parse_style(o.get_or("style", "markdown"));
    if (!style) fail(ErrorKind::Usage, "--style must be markdown or tsv");
    ropts_.style = *style;
    ropts_.accuracy_precision = static_cast<int>(o.count("precision", 1));
    ropts_.p_precision = static_cast<int>(o.count("p-precision", 3));

    if (auto t = o.get("tokenizer")) {
      auto k = parse_tokenizer(*t);
      if (!k) fail(ErrorKind::Usage, "--tokenizer must be default or cjk-char");
      scoring_.tokenizer = *k;
    }
    scoring_.lowercase = o.flag("lowercase");
    scoring_.bleu.strict = o.flag("strict");

    if (auto m = o.get("matching")) {
      auto mm = parse_matching_mode(*m);
      if (!mm) fail(ErrorKind::Usage, "--matching must be annotator, segment or annotator-fallback");
      delta_.matching = *mm;
    }
    if (auto z = o.get("zero-method")) {
      if (*z == "discard") delta_.wilcoxon.zero_method = ZeroMethod::Discard;
      else if (*z == "pratt") delta_.wilcoxon.zero_method = ZeroMethod::Pratt;
      else fail(ErrorKind::Usage, "--zero-method must be discard or pratt");
    }
    delta_.wilcoxon.exact_threshold = o.count("exact-threshold", delta_.wilcoxon.exact_threshold);
    delta_.intersect_metrics = o.flag("intersect");

    alphas_ = o.has("alphas") ? o.numbers("alphas") : (c ? c->manifest.alphas : kDefaultAlphas);
    for (double a : alphas_)
      if (!(a > 0.0 && a < 1.0)) fail(ErrorKind::Usage, "alpha levels must lie in (0, 1)");
    if (alphas_.empty()) fail(ErrorKind::Usage, "--alphas is empty");
    delta_.wilcoxon.alphas = alphas_;

    manifest_.collection_hash = c ? c->content_hash : "";
    manifest_.seed = o.u64("seed", 0);
    manifest_.alphas = alphas_;
    manifest_.command_line = o.get_or("command-line", "");
  }

  CommandOutput execute() {
    const std::string& cmd = command_;
    if (cmd == "ingest") return single("collection.jsonl", serialize_collection(*c_));
    if (cmd == "validate") return single("validate.txt", validate());
    if (cmd == "score") return single("scores.tsv", with_header(scores_tsv(scores(metrics())), true));
    if (cmd == "human-test") return single("human_tests.tsv", with_header(human_tests(), true));
    if (cmd == "accuracy") return single("accuracy" + ext(), with_header(accuracy(false), false));
    if (cmd == "report") {
      manifest_.cluster_resamples = resamples("cluster-resamples", kClusterResamples);
      return single("report" + ext(), with_header(accuracy(true), false));
    }
    if (cmd == "scatter") return single("scatter.tsv", with_header(scatter(), true));
    if (cmd == "clusters") return single("clusters" + ext(), clusters());
    if (cmd == "sigtest") return single("sigtest.tsv", sigtest());
    if (cmd == "quadrants") return single("quadrants" + ext(), quadrants());
    if (cmd == "meta") return single("meta" + ext(), meta());
    if (cmd == "compare") return single("compare.tsv", compare());
    if (cmd == "pipeline") return pipeline();
    fail(ErrorKind::Usage, "unknown command '" + cmd + "'");
  }

 private:
  std::string ext() const { return ropts_.style == Style::Tsv ? ".tsv" : ".md"; }

  CommandOutput single(std::string name, std::string content) {
    CommandOutput out;
    out.artifacts.push_back({std::move(name), std::move(content)});
    out.warnings = diag_.warnings();
    return out;
  }

  std::string with_header(const std::string& body, bool tsv) const {
    if (tsv || ropts_.style == Style::Tsv) return "# manifest " + manifest_.analysis_json() + "\n" + body;
    return "<!-- manifest " + manifest_.analysis_json() + " -->\n\n" + body;
  }

  // The stage-specific key wins over --resamples.
  std::size_t resamples(const std::string& key, std::size_t fallback) const {
    return o_.has(key) ? o_.count(key, fallback) : o_.count("resamples", fallback);
  }

  ResampleConfig resample_cfg(std::size_t default_resamples, const std::string& key) const {
    ResampleConfig cfg;
    cfg.n_resamples = resamples(key, default_resamples);
    cfg.seed = manifest_.seed;
    cfg.confidence = o_.number("confidence", cfg.confidence);
    cfg.alpha = o_.number("alpha", cfg.alpha);
    cfg.one_sided = o_.flag("one-sided");
    cfg.threads = static_cast<unsigned>(o_.count("threads", 0));
    cfg.validate();
    return cfg;
  }

  // --------------------------------------------------------------- metrics

  std::string resolve_metric(const std::string& name) const {
    auto ingested = c_ ? c_->metric_names() : std::vector<std::string>{};
    if (std::find(ingested.begin(), ingested.end(), name) != ingested.end()) return name;
    if (auto b = parse_builtin_metric(name)) return std::string(canonical_name(*b));
    std::string avail;
    for (const auto& m : c_ ? available_metrics(*c_) : std::vector<std::string>{}) avail += (avail.empty() ? "" : ", ") + m;
    fail(ErrorKind::Usage, "unknown metric '" + name + "' (available: " + (avail.empty() ? "none" : avail) + ")");
  }

  std::vector<std::string> metrics() const {
    std::vector<std::string> names = o_.list("metrics");
    if (auto m = o_.get("metric")) names.push_back(*m);
    if (names.empty()) names = available_metrics(*c_);
    std::vector<std::string> out;
    for (const auto& n : names) {
      auto r = resolve_metric(n);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    if (out.empty()) fail(ErrorKind::Validation, "the collection has no metric scores and no texts to score");
    return out;
  }

  std::string one_metric() const {
    auto m = o_.get("metric");
    if (!m) fail(ErrorKind::Usage, command_ + " needs --metric");
    return resolve_metric(*m);
  }

  ScoreTable scores(const std::vector<std::string>& ms) {
    if (!score_cache_ || score_metrics_ != ms) {
      score_cache_ = compute_scores(*c_, ms, scoring_, &diag_);
      score_metrics_ = ms;
    }
    return *score_cache_;
  }

  bool lower_better(const std::string& metric) const {
    if (auto it = c_->manifest.orientations.find(metric); it != c_->manifest.orientations.end())
      return it->second == Orientation::LowerBetter;
    for (const auto& camp : c_->campaigns)
      if (const auto* s = camp.metric(metric)) return s->orientation == Orientation::LowerBetter;
    return metric == canonical_name(BuiltinMetric::Ter);
  }

  std::string scores_tsv(const ScoreTable& table) const {
    std::ostringstream os;
    os << "campaign\tsystem_id\tmetric\tscore\traw\tsegments\n";
    for (const auto& camp : c_->campaigns)
      for (const auto& s : camp.systems)
        for (const auto& m : table.metrics()) {
          const auto* sc = table.find(camp.campaign_id, s, m);
          if (!sc) continue;
          os << camp.campaign_id << '\t' << s << '\t' << m << '\t' << format_fixed(sc->score, ropts_.score_precision)
             << '\t' << format_fixed(lower_better(m) ? -sc->score : sc->score, ropts_.score_precision) << '\t'
             << sc->stats.size() << '\n';
        }
    return os.str();
  }

  // ---------------------------------------------------------------- records

  std::vector<DeltaRecord> records(const std::vector<std::string>& ms) {
    if (!c_->has_judgements()) fail(ErrorKind::Validation, "the collection has no human judgements");
    auto table = scores(ms);
    auto out = build_delta_records(*c_, table, ms, delta_, &diag_);
    if (out.empty()) fail(ErrorKind::Degenerate, "no system pairs with human judgements");
    return out;
  }

  std::string validate() const {
    std::size_t segs = 0, outs = 0, judg = 0, pairs = 0;
    std::set<std::string> systems;
    for (const auto& camp : c_->campaigns) {
      segs += camp.segments.size();
      outs += camp.outputs.size();
      judg += camp.judgements.size();
      pairs += enumerate_pairs(camp).size();
      for (const auto& s : camp.systems) systems.insert(camp.campaign_id + "/" + s);
    }
    std::ostringstream os;
    os << "ok\tcampaigns=" << c_->campaigns.size() << "\tsystems=" << systems.size() << "\tpairs=" << pairs
       << "\tsegments=" << segs << "\toutputs=" << outs << "\tjudgements=" << judg << "\thash=" << c_->content_hash
       << "\n";
    auto names = available_metrics(*c_);
    os << "metrics\t";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
    os << "\n";
    return os.str();
  }

  std::string human_tests() {
    std::vector<HumanTestRow> rows;
    for (const auto& camp : c_->campaigns) {
      if (camp.judgements.empty()) continue;
      std::map<std::string, double> mean;
      for (const auto& s : camp.systems) {
        try {
          mean[s] = human_system_score(camp, s).mean_score;
        } catch (const Error& e) {
          diag_.warn(e.what());
        }
      }
      for (const auto& pair : enumerate_pairs(camp)) {
        if (!mean.count(pair.system_a) || !mean.count(pair.system_b)) continue;
        HumanTestRow row;
        row.pair = pair;
        row.human_delta = mean[pair.system_a] - mean[pair.system_b];
        row.matching = std::string(to_string(delta_.matching));
        try {
          auto pd = paired_differences(camp, pair, delta_.matching);
          row.unmatched = pd.unmatched;
          row.matching = std::string(to_string(pd.matching));
          row.outcome = wilcoxon_signed_rank(pd.diffs, delta_.wilcoxon);
        } catch (const Error& e) {
          diag_.warn(e.what());
        }
        rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) fail(ErrorKind::Validation, "the collection has no human judgements");
    return render_human_tests(rows, alphas_, ropts_);
  }

  // ---------------------------------------------------------------- subsets

  std::vector<SubsetSpec> columns() const {
    std::vector<SubsetSpec> cols;
    for (const auto& s : o_.list("subsets", ';')) cols.push_back(SubsetSpec::parse(s));
    if (auto s = o_.get("subset")) cols.push_back(SubsetSpec::parse(*s));
    return cols;
  }

  std::vector<std::optional<ClusterReport>> cluster_columns(const std::vector<DeltaRecord>& recs,
                                                            const AccuracyTable& table) {
    auto cfg = resample_cfg(kClusterResamples, "cluster-resamples");
    std::vector<std::optional<ClusterReport>> out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (table.columns[c].n == 0) {
        out.emplace_back();
        continue;
      }
      try {
        out.push_back(bootstrap_accuracy_clusters(recs, table.metrics, table.columns[c].spec, cfg));
      } catch (const Error& e) {
        diag_.warn("clusters for column " + table.columns[c].title + ": " + e.what());
        out.emplace_back();
      }
    }
    return out;
  }

  std::string accuracy_text(const std::vector<DeltaRecord>& recs, const std::vector<std::string>& ms,
                            const std::vector<SubsetSpec>& cols, std::size_t sort, bool clustered) {
    AccuracyTable table = cols.empty() ? accuracy_table(recs, ms, alphas_)
                                       : accuracy_table(recs, ms, cols, sort, &diag_);
    std::vector<std::optional<ClusterReport>> cl;
    if (clustered) cl = cluster_columns(recs, table);
    return render_accuracy_table(table, cl, ropts_);
  }

  std::string accuracy(bool clustered) {
    auto ms = metrics();
    auto recs = records(ms);
    auto cols = columns();
    if (auto p = o_.get("preset")) {
      if (!cols.empty()) fail(ErrorKind::Usage, "--preset and --subset are mutually exclusive");
      cols = preset(*p, recs);
    }
    return accuracy_text(recs, ms, cols, o_.count("sort", 0), clustered);
  }

  std::vector<SubsetSpec> preset(const std::string& name, const std::vector<DeltaRecord>& recs) const {
    const double alpha = o_.number("alpha", 0.05);
    auto sig = [&](std::string label) {
      SubsetSpec s = SubsetSpec::significant(alpha);
      s.label = std::move(label);
      return s;
    };
    std::vector<SubsetSpec> cols;
    if (name == "significance") {
      return {};
    } else if (name == "scenarios") {
      cols.push_back(sig("Everything"));
      for (auto d : {Direction::IntoEnglish, Direction::FromEnglish}) {
        auto s = sig(d == Direction::IntoEnglish ? "Into EN" : "From EN");
        s.direction = d;
        cols.push_back(s);
      }
      for (auto k : {ScriptClass::NonLatin, ScriptClass::Logogram}) {
        auto s = sig(k == ScriptClass::NonLatin ? "Non Latin" : "Logograms");
        s.script = k;
        cols.push_back(s);
      }
      std::vector<std::string> seen;
      for (const auto& r : recs)
        if (!r.domain.empty() && std::find(seen.begin(), seen.end(), r.domain) == seen.end()) seen.push_back(r.domain);
      for (const auto& d : seen) {
        auto s = sig(d);
        s.domain = d;
        cols.push_back(s);
      }
    } else if (name == "groups") {
      std::vector<std::string> seen;
      for (const auto& r : recs)
        if (!r.group.empty() && std::find(seen.begin(), seen.end(), r.group) == seen.end()) seen.push_back(r.group);
      for (const auto& g : seen) {
        auto s = sig(g);
        s.group = g;
        cols.push_back(s);
      }
      if (cols.empty()) fail(ErrorKind::Validation, "no system pair carries a group tag");
    } else {
      fail(ErrorKind::Usage, "--preset must be significance, scenarios or groups");
    }
    return cols;
  }

  std::string scatter() {
    auto m = one_metric();
    auto recs = records({m});
    return render_scatter(recs, m, ropts_);
  }

  std::string clusters() {
    auto ms = metrics();
    auto recs = records(ms);
    auto cols = columns();
    if (cols.size() > 1) fail(ErrorKind::Usage, "clusters takes a single --subset");
    SubsetSpec spec = cols.empty() ? SubsetSpec::all() : cols.front();
    auto cfg = resample_cfg(kClusterResamples, "cluster-resamples");
    manifest_.cluster_resamples = cfg.n_resamples;
    auto sel = filter_pairs(recs, spec, &diag_);
    auto rep = bootstrap_accuracy_clusters(sel, ms, cfg);
    return with_header(render_cluster_report(rep, spec.describe(), ropts_), false);
  }

  // ------------------------------------------------------------- bootstrap

  std::vector<SigtestRow> sigtest_rows(const std::vector<std::string>& ms, const ResampleConfig& cfg,
                                       bool explicit_pair) {
    auto table = scores(ms);
    auto sys_a = o_.get("system-a"), sys_b = o_.get("system-b");
    auto campaign = o_.get("campaign");
    std::vector<SigtestRow> rows;
    for (const auto& camp : c_->campaigns) {
      if (campaign && camp.campaign_id != *campaign) continue;
      std::vector<SystemPair> pairs;
      if (explicit_pair) {
        if (camp.has_system(*sys_a) && camp.has_system(*sys_b)) pairs.push_back({camp.campaign_id, *sys_a, *sys_b});
      } else {
        pairs = enumerate_pairs(camp);
      }
      for (const auto& pair : pairs)
        for (const auto& m : ms) {
          const auto* a = table.find(camp.campaign_id, pair.system_a, m);
          const auto* b = table.find(camp.campaign_id, pair.system_b, m);
          if (!a || !b) continue;
          if (a->stats.empty() || b->stats.empty()) {
            if (explicit_pair)
              fail(ErrorKind::Validation, "metric " + m + " has only system-level scores in campaign " +
                                              camp.campaign_id + "; the paired bootstrap needs segment scores");
            diag_.warn("metric " + m + " skipped in campaign " + camp.campaign_id + ": no segment-level scores");
            continue;
          }
          rows.push_back({pair, m, paired_bootstrap_metric_test(a->stats, b->stats, cfg)});
        }
    }
    return rows;
  }

  std::string sigtest() {
    auto sys_a = o_.get("system-a"), sys_b = o_.get("system-b");
    if (sys_a.has_value() != sys_b.has_value()) fail(ErrorKind::Usage, "--system-a and --system-b go together");
    if (sys_a && *sys_a == *sys_b) fail(ErrorKind::Usage, "--system-a and --system-b must differ");
    auto cfg = resample_cfg(kSigtestResamples, "sigtest-resamples");
    manifest_.sigtest_resamples = cfg.n_resamples;
    auto rows = sigtest_rows(o_.has("metric") ? std::vector<std::string>{one_metric()} : metrics(), cfg,
                             sys_a.has_value());
    if (rows.empty())
      fail(ErrorKind::Validation, sys_a ? "no campaign contains both " + *sys_a + " and " + *sys_b
                                        : std::string("no system pair has segment-level scores"));
    return with_header(render_sigtests(rows, cfg.alpha, ropts_), true);
  }

  std::vector<QuadrantReport> quadrant_reports(const std::vector<DeltaRecord>& recs,
                                               const std::vector<std::string>& ms, const ResampleConfig& cfg) {
    auto table = scores(ms);
    std::vector<QuadrantReport> out;
    for (const auto& m : ms) {
      try {
        out.push_back(quadrant_analysis(recs, table, m, cfg.alpha, cfg, &diag_));
      } catch (const Error& e) {
        diag_.warn("quadrants for " + m + ": " + e.what());
      }
    }
    return out;
  }

  std::string quadrants() {
    auto ms = o_.has("metric") ? std::vector<std::string>{one_metric()} : metrics();
    auto recs = records(ms);
    auto cfg = resample_cfg(kSigtestResamples, "sigtest-resamples");
    manifest_.sigtest_resamples = cfg.n_resamples;
    auto reps = quadrant_reports(recs, ms, cfg);
    if (reps.empty()) fail(ErrorKind::Degenerate, "no metric supports the paired bootstrap on this collection");
    return with_header(render_quadrant_table(reps, ropts_), false);
  }

  std::string meta() {
    auto in = o_.get("input");
    if (!in) fail(ErrorKind::Usage, "meta needs --input");
    auto obs = parse_correlations_tsv(read_file(*in));
    auto agg = hunter_schmidt(obs);
    manifest_.collection_hash = hex64(fnv1a64(read_file(*in)));
    return with_header(render_meta(obs, agg, ropts_), false);
  }

  // --------------------------------------------------------------- compare

  static std::vector<std::string> lines_of(const std::string& path) {
    std::string text = read_file(path);
    if (text.empty()) fail(ErrorKind::Validation, path + " is empty");
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      std::string ln = text.substr(start, end - start);
      if (!ln.empty() && ln.back() == '\r') ln.pop_back();
      out.push_back(std::move(ln));
      start = end + 1;
    }
    return out;
  }

  std::string compare() {
    auto ref_path = o_.get("reference"), a_path = o_.get("hyp-a"), b_path = o_.get("hyp-b");
    if (!ref_path || !a_path || !b_path) fail(ErrorKind::Usage, "compare needs --reference, --hyp-a and --hyp-b");
    auto refs = lines_of(*ref_path), hyp_a = lines_of(*a_path), hyp_b = lines_of(*b_path);
    if (hyp_a.size() != refs.size() || hyp_b.size() != refs.size())
      fail(ErrorKind::Validation, "line counts differ: reference " + std::to_string(refs.size()) + ", A " +
                                      std::to_string(hyp_a.size()) + ", B " + std::to_string(hyp_b.size()));
    auto name = o_.get_or("metric", "bleu");
    auto metric = parse_builtin_metric(name);
    if (!metric) fail(ErrorKind::Usage, "compare supports bleu, chrf and ter");
    auto scheme = scoring_.scheme_for(o_.get_or("target-lang", "und"));
    auto cfg = resample_cfg(kSigtestResamples, "sigtest-resamples");
    manifest_.sigtest_resamples = cfg.n_resamples;
    manifest_.collection_hash =
        hex64(fnv1a64(read_file(*b_path), fnv1a64(read_file(*a_path), fnv1a64(read_file(*ref_path)))));
    auto sa = builtin_segment_stats(*metric, hyp_a, refs, scheme, scoring_);
    auto sb = builtin_segment_stats(*metric, hyp_b, refs, scheme, scoring_);
    auto res = paired_bootstrap_metric_test(sa, sb, cfg);
    const double p = res.outcome.p_value;
    std::string verdict = "tied";
    if (p <= cfg.alpha && res.score_a != res.score_b) verdict = res.score_a > res.score_b ? "A-better" : "B-better";
    const bool neg = *metric == BuiltinMetric::Ter;
    std::ostringstream os;
    os << "verdict\t" << verdict << "\n"
       << "metric\t" << canonical_name(*metric) << "\n"
       << "score_a\t" << format_fixed(neg ? -res.score_a : res.score_a, ropts_.score_precision) << "\n"
       << "score_b\t" << format_fixed(neg ? -res.score_b : res.score_b, ropts_.score_precision) << "\n"
       << "p\t" << format_fixed(p, ropts_.p_precision) << "\n"
       << "alpha\t" << format_alpha(cfg.alpha) << "\n"
       << "segments\t" << refs.size() << "\n"
       << "resamples\t" << cfg.n_resamples << "\n"
       << "seed\t" << cfg.seed << "\n";
    return with_header(os.str(), true);
  }

  // -------------------------------------------------------------- pipeline

  CommandOutput pipeline() {
    auto ms = metrics();
    auto cluster_cfg = resample_cfg(kClusterResamples, "cluster-resamples");
    auto sig_cfg = resample_cfg(kSigtestResamples, "sigtest-resamples");
    manifest_.cluster_resamples = cluster_cfg.n_resamples;
    manifest_.sigtest_resamples = sig_cfg.n_resamples;
    manifest_.timestamp = utc_timestamp(o_);

    CommandOutput out;
    std::ostringstream summary;
    auto add = [&](std::string name, std::string heading, const std::string& body, bool tsv) {
      out.artifacts.push_back({std::move(name), with_header(body, tsv)});
      if (ropts_.style == Style::Markdown) summary << "## " << heading << "\n\n" << (tsv ? "```\n" : "") << body
                                                   << (tsv ? "```\n" : "") << "\n";
      else summary << "# == " << heading << "\n" << body << "\n";
    };

    add("scores.tsv", "System scores", scores_tsv(scores(ms)), true);
    if (!c_->has_judgements()) {
      const std::string notice =
          "The collection has no human judgements; only metric scores and metric significance tests were run.\n";
      diag_.warn(notice.substr(0, notice.size() - 1));
      auto rows = sigtest_rows(ms, sig_cfg, false);
      add("sigtests.tsv", "Metric significance tests", render_sigtests(rows, sig_cfg.alpha, ropts_), true);
      add("NOTICE.txt", "Notice", notice, true);
    } else {
      auto recs = records(ms);
      add("human_tests.tsv", "Human significance tests", human_tests(), true);
      add("accuracy" + ext(), "Pairwise accuracy by human significance",
          accuracy_text(recs, ms, {}, 0, true), false);
      auto scen = preset("scenarios", recs);
      add("scenarios" + ext(), "Pairwise accuracy by scenario", accuracy_text(recs, ms, scen, 0, true), false);

      auto reps = quadrant_reports(recs, ms, sig_cfg);
      add("quadrants" + ext(), "Metric significance against human significance",
          reps.empty() ? std::string("No metric has segment-level scores; quadrants were skipped.\n")
                       : render_quadrant_table(reps, ropts_),
          false);

      bool grouped = std::any_of(recs.begin(), recs.end(), [](const DeltaRecord& r) { return !r.group.empty(); });
      add("groups" + ext(), "Pairwise accuracy by system-pair group",
          grouped ? accuracy_text(recs, ms, preset("groups", recs), 0, true)
                  : std::string("No system pair carries a group tag.\n"),
          false);

      std::vector<CorrelationRow> corr;
      for (const auto& m : ms) {
        CorrelationRow row{m, std::nullopt};
        try {
          row.value = delta_correlations(recs, m);
        } catch (const Error& e) {
          diag_.warn("correlations for " + m + ": " + e.what());
        }
        corr.push_back(std::move(row));
      }
      std::stable_sort(corr.begin(), corr.end(), [](const CorrelationRow& a, const CorrelationRow& b) {
        double x = a.value ? a.value->spearman : -2.0, y = b.value ? b.value->spearman : -2.0;
        return x > y;
      });
      add("correlations" + ext(), "Metric delta against human delta correlations",
          render_correlation_table(corr, ropts_), false);
    }
    if (!diag_.empty()) {
      std::string w;
      for (const auto& s : diag_.warnings()) w += s + "\n";
      out.artifacts.push_back({"warnings.txt", w});
    }
    out.artifacts.insert(out.artifacts.begin(), {"report" + ext(), with_header(summary.str(), false)});
    out.artifacts.push_back({"manifest.json", manifest_.json()});
    out.warnings = diag_.warnings();
    return out;
  }

  std::string command_;
  const Collection* c_;
  const Options& o_;
  Diagnostics diag_;
  RenderOptions ropts_;
  ScoringConfig scoring_;
  DeltaOptions delta_;
  std::vector<double> alphas_;
  RunManifest manifest_;
  std::optional<ScoreTable> score_cache_;
  std::vector<std::string> score_metrics_;
};

}  // namespace

CommandOutput run_command(std::string_view command, const Collection* collection, const Options& opts) {
  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
    fail(ErrorKind::Usage, "unknown command '" + std::string(command) + "'");
  Run run(command, collection, opts);
  return run.execute();
}

}  // namespace mtmeta
