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

#include "collection.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"
#include "json.hpp"

namespace mtmeta {

using nlohmann::json;

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string_view to_string(Orientation o) {
  return o == Orientation::HigherBetter ? "higher-better" : "lower-better";
}

std::string_view to_string(Granularity g) {
  return g == Granularity::Segment ? "segment" : "system";
}

std::optional<Orientation> parse_orientation(std::string_view s) {
  if (s == "higher-better") return Orientation::HigherBetter;
  if (s == "lower-better") return Orientation::LowerBetter;
  return std::nullopt;
}

std::optional<Granularity> parse_granularity(std::string_view s) {
  if (s == "segment") return Granularity::Segment;
  if (s == "system") return Granularity::System;
  return std::nullopt;
}

bool MetricScoreSet::covers(const std::string& system_id) const {
  return granularity == Granularity::Segment ? segment_scores.count(system_id) > 0
                                             : system_scores.count(system_id) > 0;
}

std::optional<double> MetricScoreSet::system_score(const std::string& system_id) const {
  if (granularity == Granularity::System) {
    auto it = system_scores.find(system_id);
    if (it == system_scores.end()) return std::nullopt;
    return it->second;
  }
  auto it = segment_scores.find(system_id);
  if (it == segment_scores.end() || it->second.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& [seg, v] : it->second) sum += v;
  return sum / static_cast<double>(it->second.size());
}

bool Campaign::has_references() const {
  return !segments.empty() &&
         std::all_of(segments.begin(), segments.end(),
                     [](const Segment& s) { return s.reference_text.has_value(); });
}

const MetricScoreSet* Campaign::metric(std::string_view name) const {
  for (const auto& m : metric_scores)
    if (m.metric_name == name) return &m;
  return nullptr;
}

const std::vector<std::string>* Campaign::hypotheses_of(const std::string& system_id) const {
  auto it = hypotheses.find(system_id);
  return it == hypotheses.end() ? nullptr : &it->second;
}

std::string Campaign::group_of(const SystemPair& pair) const {
  auto it = pair_groups.find({pair.system_a, pair.system_b});
  return it == pair_groups.end() ? group_tag : it->second;
}

bool Campaign::has_system(const std::string& system_id) const {
  return std::binary_search(systems.begin(), systems.end(), system_id);
}

const Campaign* Collection::find(std::string_view campaign_id) const {
  for (const auto& c : campaigns)
    if (c.campaign_id == campaign_id) return &c;
  return nullptr;
}

std::vector<std::string> Collection::metric_names() const {
  std::set<std::string> names;
  for (const auto& c : campaigns)
    for (const auto& m : c.metric_scores) names.insert(m.metric_name);
  return {names.begin(), names.end()};
}

bool Collection::has_judgements() const {
  return std::any_of(campaigns.begin(), campaigns.end(),
                     [](const Campaign& c) { return !c.judgements.empty(); });
}

namespace {

std::string where(std::string_view source, std::size_t line, std::string_view campaign) {
  std::ostringstream os;
  os << source << ": record " << line;
  if (!campaign.empty()) os << " (campaign " << campaign << ")";
  return os.str();
}

class RecordReader {
 public:
  RecordReader(const json& obj, std::string_view source, std::size_t line)
      : obj_(obj), source_(source), line_(line) {
    if (obj_.contains("campaign_id") && obj_["campaign_id"].is_string())
      campaign_ = obj_["campaign_id"].get<std::string>();
  }

  std::string str(const char* key) const {
    auto it = obj_.find(key);
    if (it == obj_.end()) bad(std::string("missing field '") + key + "'");
    if (!it->is_string()) bad(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
  }

  std::optional<std::string> opt_str(const char* key) const {
    auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) bad(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
  }

  double number(const char* key) const { return number_of(obj_, key); }

  double number_of(const json& o, const char* key) const {
    auto it = o.find(key);
    if (it == o.end()) bad(std::string("missing field '") + key + "'");
    if (!it->is_number()) bad(std::string("field '") + key + "' must be a number");
    return it->get<double>();
  }

  const json& raw() const { return obj_; }
  const std::string& campaign() const { return campaign_; }
  std::size_t line() const { return line_; }

  [[noreturn]] void bad(const std::string& msg) const {
    fail(ErrorKind::Validation, "schema violation at " + where(source_, line_, campaign_) + ": " + msg);
  }

 private:
  const json& obj_;
  std::string_view source_;
  std::size_t line_;
  std::string campaign_;
};

struct PendingScores {
  MetricScoreSet set;
  std::optional<Orientation> declared;
  std::string campaign_id;
};

struct Parser {
  std::string_view source;
  Collection collection;
  bool have_manifest = false;
  std::map<std::string, std::size_t> campaign_index;
  // Records may precede their campaign record; buffer them by campaign.
  std::map<std::string, std::vector<Segment>> segments;
  std::map<std::string, std::vector<SystemOutput>> outputs;
  std::map<std::string, std::vector<Judgement>> judgements;
  std::vector<PendingScores> scores;
  std::map<std::string, std::size_t> first_line;

  void note(const std::string& campaign, std::size_t line) {
    first_line.emplace(campaign, line);
  }

  void manifest(const RecordReader& r) {
    if (have_manifest) r.bad("duplicate manifest");
    have_manifest = true;
    const json& o = r.raw();
    auto v = o.find("schema_version");
    if (v == o.end() || !v->is_number_integer()) r.bad("manifest needs integer schema_version");
    if (v->get<int>() != 1) r.bad("unsupported schema_version " + std::to_string(v->get<int>()));
    auto& m = collection.manifest;
    if (auto a = o.find("alphas"); a != o.end()) {
      if (!a->is_array() || a->empty()) r.bad("alphas must be a non-empty array");
      m.alphas.clear();
      for (const auto& x : *a) {
        if (!x.is_number()) r.bad("alphas must be numbers");
        double alpha = x.get<double>();
        if (!(alpha > 0.0 && alpha < 1.0)) r.bad("alpha out of (0, 1)");
        m.alphas.push_back(alpha);
      }
    }
    if (auto ors = o.find("orientations"); ors != o.end()) {
      if (!ors->is_object()) r.bad("orientations must be an object");
      for (const auto& [name, val] : ors->items()) {
        auto parsed = val.is_string() ? parse_orientation(val.get<std::string>()) : std::nullopt;
        if (!parsed) r.bad("bad orientation for metric '" + name + "'");
        m.orientations[name] = *parsed;
      }
    }
  }

  void campaign(const RecordReader& r) {
    Campaign c;
    c.campaign_id = r.str("campaign_id");
    c.source_lang = r.str("source_lang");
    c.target_lang = r.str("target_lang");
    c.domain_tag = r.opt_str("domain").value_or("");
    c.group_tag = r.opt_str("group").value_or("");
    c.record.line = r.line();
    if (auto pg = r.raw().find("pair_groups"); pg != r.raw().end()) {
      if (!pg->is_array()) r.bad("pair_groups must be an array");
      for (const auto& e : *pg) {
        RecordReader er(e, source, r.line());
        std::string a = er.str("system_a"), b = er.str("system_b");
        if (b < a) std::swap(a, b);
        c.pair_groups[{a, b}] = er.str("group");
      }
    }
    if (campaign_index.count(c.campaign_id)) r.bad("duplicate campaign_id");
    campaign_index[c.campaign_id] = collection.campaigns.size();
    collection.campaigns.push_back(std::move(c));
  }

  void segment(const RecordReader& r) {
    Segment s;
    s.segment_id = r.str("segment_id");
    s.source_text = r.str("source");
    s.reference_text = r.opt_str("reference");
    s.record.line = r.line();
    std::string cid = r.str("campaign_id");
    note(cid, r.line());
    segments[cid].push_back(std::move(s));
  }

  void output(const RecordReader& r) {
    SystemOutput o;
    o.system_id = r.str("system_id");
    o.segment_id = r.str("segment_id");
    o.hypothesis_text = r.str("hypothesis");
    o.record.line = r.line();
    std::string cid = r.str("campaign_id");
    note(cid, r.line());
    outputs[cid].push_back(std::move(o));
  }

  void judgement(const RecordReader& r) {
    Judgement j;
    j.annotator_id = r.str("annotator_id");
    j.system_id = r.str("system_id");
    j.segment_id = r.str("segment_id");
    j.score = r.number("score");
    j.record.line = r.line();
    if (!(j.score >= 0.0 && j.score <= 100.0))
      fail(ErrorKind::Validation, "range violation at " + where(source, r.line(), r.campaign()) +
                                      ": judgement score " + std::to_string(j.score) +
                                      " outside [0, 100]");
    std::string cid = r.str("campaign_id");
    note(cid, r.line());
    judgements[cid].push_back(std::move(j));
  }

  void metric_scores(const RecordReader& r) {
    PendingScores p;
    p.campaign_id = r.str("campaign_id");
    p.set.metric_name = r.str("metric_name");
    p.set.record.line = r.line();
    if (auto o = r.opt_str("orientation")) {
      p.declared = parse_orientation(*o);
      if (!p.declared) r.bad("orientation must be higher-better or lower-better");
    }
    auto g = parse_granularity(r.str("granularity"));
    if (!g) r.bad("granularity must be segment or system");
    p.set.granularity = *g;
    auto arr = r.raw().find("scores");
    if (arr == r.raw().end() || !arr->is_array()) r.bad("missing array field 'scores'");
    for (const auto& e : *arr) {
      RecordReader er(e, source, r.line());
      std::string sys = er.str("system_id");
      double v = r.number_of(e, "score");
      if (p.set.granularity == Granularity::Segment) {
        std::string seg = er.str("segment_id");
        if (!p.set.segment_scores[sys].emplace(seg, v).second)
          r.bad("duplicate score for (" + sys + ", " + seg + ")");
      } else {
        if (!p.set.system_scores.emplace(sys, v).second) r.bad("duplicate score for " + sys);
      }
    }
    note(p.campaign_id, r.line());
    scores.push_back(std::move(p));
  }

  void line(std::string_view text, std::size_t lineno) {
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      fail(ErrorKind::Validation,
           "schema violation at " + where(source, lineno, "") + ": invalid JSON (" + e.what() + ")");
    }
    if (!obj.is_object())
      fail(ErrorKind::Validation, "schema violation at " + where(source, lineno, "") + ": not an object");
    RecordReader r(obj, source, lineno);
    std::string kind = r.str("kind");
    if (kind == "manifest") manifest(r);
    else if (kind == "campaign") campaign(r);
    else if (kind == "segment") segment(r);
    else if (kind == "output") output(r);
    else if (kind == "judgement") judgement(r);
    else if (kind == "metric_scores") metric_scores(r);
    else r.bad("unknown kind '" + kind + "'");
  }

  Collection finish() {
    if (!have_manifest)
      fail(ErrorKind::Validation, "schema violation at " + std::string(source) + ": no manifest record");
    for (const auto& [cid, line] : first_line)
      if (!campaign_index.count(cid))
        fail(ErrorKind::Validation, "referential violation at " + where(source, line, cid) +
                                        ": unknown campaign_id");
    for (auto& c : collection.campaigns) {
      c.segments = std::move(segments[c.campaign_id]);
      c.outputs = std::move(outputs[c.campaign_id]);
      c.judgements = std::move(judgements[c.campaign_id]);
    }
    for (auto& p : scores) {
      auto& c = collection.campaigns[campaign_index[p.campaign_id]];
      Orientation o = Orientation::HigherBetter;
      if (auto it = collection.manifest.orientations.find(p.set.metric_name);
          it != collection.manifest.orientations.end())
        o = it->second;
      if (p.declared) {
        auto it = collection.manifest.orientations.find(p.set.metric_name);
        if (it != collection.manifest.orientations.end() && it->second != *p.declared)
          fail(ErrorKind::Validation, "schema violation at " + where(source, p.set.record.line, c.campaign_id) +
                                          ": orientation conflicts with manifest");
        o = *p.declared;
      }
      p.set.orientation = o;
      if (o == Orientation::LowerBetter) {
        for (auto& [sys, segs] : p.set.segment_scores)
          for (auto& [seg, v] : segs) v = -v;
        for (auto& [sys, v] : p.set.system_scores) v = -v;
      }
      c.metric_scores.push_back(std::move(p.set));
    }
    return std::move(collection);
  }
};

[[noreturn]] void violation(std::string_view what, const Campaign& c, std::size_t line,
                            const std::string& msg) {
  std::ostringstream os;
  os << what << " violation in campaign " << c.campaign_id << ", record " << line << ": " << msg;
  fail(ErrorKind::Validation, os.str());
}

}  // namespace

void finalize_collection(Collection& collection) {
  std::set<std::string> ids;
  for (auto& c : collection.campaigns) {
    if (!ids.insert(c.campaign_id).second)
      violation("schema", c, c.record.line, "duplicate campaign_id");
    if (c.segments.empty()) violation("coverage", c, c.record.line, "campaign has no segments");

    std::map<std::string, std::size_t> seg_pos;
    for (std::size_t i = 0; i < c.segments.size(); ++i) {
      const auto& s = c.segments[i];
      if (s.source_text.empty()) violation("schema", c, s.record.line, "empty source text");
      if (!seg_pos.emplace(s.segment_id, i).second)
        violation("schema", c, s.record.line, "duplicate segment_id " + s.segment_id);
    }

    std::set<std::string> systems;
    if (c.has_outputs()) {
      std::map<std::string, std::vector<std::optional<std::string>>> hyps;
      for (const auto& o : c.outputs) {
        auto pos = seg_pos.find(o.segment_id);
        if (pos == seg_pos.end())
          violation("referential", c, o.record.line, "output for unknown segment " + o.segment_id);
        auto& row = hyps[o.system_id];
        row.resize(c.segments.size());
        if (row[pos->second])
          violation("schema", c, o.record.line,
                    "duplicate output for (" + o.system_id + ", " + o.segment_id + ")");
        row[pos->second] = o.hypothesis_text;
        systems.insert(o.system_id);
      }
      c.hypotheses.clear();
      for (auto& [sys, row] : hyps) {
        std::vector<std::string> aligned;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (!row[i])
            violation("coverage", c, c.record.line,
                      "system " + sys + " has no output for segment " + c.segments[i].segment_id);
          aligned.push_back(*row[i]);
        }
        c.hypotheses[sys] = std::move(aligned);
      }
    } else {
      for (const auto& j : c.judgements) systems.insert(j.system_id);
      for (const auto& m : c.metric_scores) {
        for (const auto& [s, v] : m.segment_scores) systems.insert(s);
        for (const auto& [s, v] : m.system_scores) systems.insert(s);
      }
    }
    c.systems.assign(systems.begin(), systems.end());
    if (c.systems.size() < 2)
      violation("coverage", c, c.record.line, "campaign needs at least two systems");

    for (const auto& j : c.judgements) {
      if (!c.has_system(j.system_id))
        violation("referential", c, j.record.line, "judgement for unknown system " + j.system_id);
      if (!seg_pos.count(j.segment_id))
        violation("referential", c, j.record.line, "judgement for unknown segment " + j.segment_id);
    }

    std::set<std::string> metric_names;
    for (const auto& m : c.metric_scores) {
      if (!metric_names.insert(m.metric_name).second)
        violation("schema", c, m.record.line, "duplicate score set for metric " + m.metric_name);
      for (const auto& [s, v] : m.system_scores)
        if (!c.has_system(s)) violation("referential", c, m.record.line, "score for unknown system " + s);
      for (const auto& [s, segs] : m.segment_scores) {
        if (!c.has_system(s)) violation("referential", c, m.record.line, "score for unknown system " + s);
        for (const auto& [seg, v] : segs)
          if (!seg_pos.count(seg))
            violation("referential", c, m.record.line, "score for unknown segment " + seg);
        if (segs.size() != c.segments.size())
          violation("coverage", c, m.record.line,
                    m.metric_name + " scores for " + s + " do not cover every segment");
      }
    }

    for (const auto& [key, g] : c.pair_groups)
      if (!c.has_system(key.first) || !c.has_system(key.second))
        violation("referential", c, c.record.line, "pair group names unknown system");
  }
  if (collection.content_hash.empty())
    collection.content_hash = hex64(fnv1a64(serialize_collection(collection)));
}

Collection parse_collection(std::string_view text, std::string_view source_name, Diagnostics*) {
  Parser p;
  p.source = source_name;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view ln = text.substr(start, end - start);
    ++lineno;
    if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
    if (ln.find_first_not_of(" \t") != std::string_view::npos) p.line(ln, lineno);
    start = end + 1;
  }
  Collection c = p.finish();
  c.content_hash = hex64(fnv1a64(text));
  finalize_collection(c);
  return c;
}

void ingest_external_scores(Collection& collection, std::string_view jsonl,
                            std::string_view source_name, Diagnostics* diag) {
  // (campaign, metric) -> set
  std::map<std::pair<std::string, std::string>, MetricScoreSet> sets;
  std::map<std::pair<std::string, std::string>, std::size_t> first;
  std::size_t lineno = 0, start = 0;
  while (start <= jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string_view::npos) end = jsonl.size();
    std::string_view ln = jsonl.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (ln.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json obj;
    try {
      obj = json::parse(ln);
    } catch (const json::parse_error& e) {
      fail(ErrorKind::Validation, "schema violation at " + where(source_name, lineno, "") + ": invalid JSON");
    }
    RecordReader r(obj, source_name, lineno);
    std::string metric = r.str("metric_name"), cid = r.str("campaign_id"), sys = r.str("system_id");
    auto seg = r.opt_str("segment_id");
    double v = r.number("score");
    auto key = std::make_pair(cid, metric);
    auto [it, fresh] = sets.try_emplace(key);
    MetricScoreSet& set = it->second;
    if (fresh) {
      set.metric_name = metric;
      set.granularity = seg ? Granularity::Segment : Granularity::System;
      set.record.line = lineno;
      first[key] = lineno;
    } else if ((set.granularity == Granularity::Segment) != seg.has_value()) {
      r.bad("mixed segment- and system-level rows for metric " + metric);
    }
    bool inserted = seg ? set.segment_scores[sys].emplace(*seg, v).second
                        : set.system_scores.emplace(sys, v).second;
    if (!inserted) r.bad("duplicate score row");
  }
  for (auto& [key, set] : sets) {
    auto cit = std::find_if(collection.campaigns.begin(), collection.campaigns.end(),
                            [&](const Campaign& c) { return c.campaign_id == key.first; });
    if (cit == collection.campaigns.end())
      fail(ErrorKind::Validation, "referential violation at " +
                                      where(source_name, first[key], key.first) + ": unknown campaign_id");
    if (cit->metric(set.metric_name)) {
      if (diag) diag->warn(std::string(source_name) + ": replacing " + set.metric_name +
                           " scores of campaign " + key.first);
      std::erase_if(cit->metric_scores,
                    [&](const MetricScoreSet& m) { return m.metric_name == set.metric_name; });
    }
    auto o = collection.manifest.orientations.find(set.metric_name);
    set.orientation = o == collection.manifest.orientations.end() ? Orientation::HigherBetter : o->second;
    if (set.orientation == Orientation::LowerBetter) {
      for (auto& [s, segs] : set.segment_scores)
        for (auto& [g, v] : segs) v = -v;
      for (auto& [s, v] : set.system_scores) v = -v;
    }
    cit->metric_scores.push_back(std::move(set));
  }
  std::uint64_t h = fnv1a64(collection.content_hash);
  collection.content_hash = hex64(fnv1a64(jsonl, h));
  finalize_collection(collection);
}

namespace {
std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

Collection load_collection(const std::filesystem::path& path,
                           const std::vector<std::filesystem::path>& score_files, Diagnostics* diag) {
  Collection c = parse_collection(read_file(path), path.string(), diag);
  for (const auto& f : score_files) ingest_external_scores(c, read_file(f), f.string(), diag);
  return c;
}

std::string serialize_collection(const Collection& collection) {
  std::ostringstream os;
  json m = {{"kind", "manifest"}, {"schema_version", collection.manifest.schema_version},
            {"alphas", collection.manifest.alphas}};
  json ors = json::object();
  for (const auto& [name, o] : collection.manifest.orientations) ors[name] = to_string(o);
  m["orientations"] = ors;
  os << m.dump() << '\n';
  for (const auto& c : collection.campaigns) {
    json cj = {{"kind", "campaign"}, {"campaign_id", c.campaign_id}, {"source_lang", c.source_lang},
               {"target_lang", c.target_lang}, {"domain", c.domain_tag}, {"group", c.group_tag}};
    if (!c.pair_groups.empty()) {
      json pg = json::array();
      for (const auto& [k, g] : c.pair_groups)
        pg.push_back({{"system_a", k.first}, {"system_b", k.second}, {"group", g}});
      cj["pair_groups"] = pg;
    }
    os << cj.dump() << '\n';
    for (const auto& s : c.segments) {
      json sj = {{"kind", "segment"}, {"campaign_id", c.campaign_id},
                 {"segment_id", s.segment_id}, {"source", s.source_text}};
      if (s.reference_text) sj["reference"] = *s.reference_text;
      os << sj.dump() << '\n';
    }
    for (const auto& o : c.outputs)
      os << json{{"kind", "output"}, {"campaign_id", c.campaign_id}, {"system_id", o.system_id},
                 {"segment_id", o.segment_id}, {"hypothesis", o.hypothesis_text}}
                .dump()
         << '\n';
    for (const auto& j : c.judgements)
      os << json{{"kind", "judgement"}, {"campaign_id", c.campaign_id},
                 {"annotator_id", j.annotator_id}, {"system_id", j.system_id},
                 {"segment_id", j.segment_id}, {"score", j.score}}
                .dump()
         << '\n';
    for (const auto& ms : c.metric_scores) {
      double sign = ms.orientation == Orientation::LowerBetter ? -1.0 : 1.0;
      json scores = json::array();
      if (ms.granularity == Granularity::Segment) {
        for (const auto& [sys, segs] : ms.segment_scores)
          for (const auto& [seg, v] : segs)
            scores.push_back({{"system_id", sys}, {"segment_id", seg}, {"score", sign * v}});
      } else {
        for (const auto& [sys, v] : ms.system_scores)
          scores.push_back({{"system_id", sys}, {"score", sign * v}});
      }
      os << json{{"kind", "metric_scores"}, {"campaign_id", c.campaign_id},
                 {"metric_name", ms.metric_name}, {"orientation", to_string(ms.orientation)},
                 {"granularity", to_string(ms.granularity)}, {"scores", scores}}
                .dump()
         << '\n';
    }
  }
  return os.str();
}

std::vector<SystemPair> enumerate_pairs(const Campaign& campaign) {
  std::vector<std::string> systems = campaign.systems;
  std::sort(systems.begin(), systems.end());
  std::vector<SystemPair> pairs;
  for (std::size_t i = 0; i < systems.size(); ++i)
    for (std::size_t j = i + 1; j < systems.size(); ++j)
      pairs.push_back({campaign.campaign_id, systems[i], systems[j]});
  return pairs;
}

}  // namespace mtmeta
