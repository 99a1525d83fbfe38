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

#include "subset.hpp"

#include <charconv>
#include <sstream>

#include "error.hpp"

namespace mtmeta {

namespace {

double parse_probability(std::string_view v, std::string_view what) {
  double x = 0.0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), x);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !(x >= 0.0 && x <= 1.0))
    fail(ErrorKind::Usage, "subset: bad " + std::string(what) + " value '" + std::string(v) + "'");
  return x;
}

std::string fmt_num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

SubsetSpec SubsetSpec::significant(double alpha) {
  SubsetSpec s;
  s.alpha = alpha;
  return s;
}

SubsetSpec SubsetSpec::within(double lower, double upper) {
  SubsetSpec s;
  s.band = {lower, upper};
  return s;
}

SubsetSpec SubsetSpec::parse(std::string_view text) {
  SubsetSpec s;
  if (text.empty() || text == "all") return s;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(start, end - start);
    start = end + 1;
    if (term.empty()) continue;
    if (term == "all") continue;
    auto eq = term.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorKind::Usage, "subset: expected key=value, got '" + std::string(term) + "'");
    std::string_view key = term.substr(0, eq), val = term.substr(eq + 1);
    if (key == "direction") {
      if (val == "into-en") s.direction = Direction::IntoEnglish;
      else if (val == "from-en") s.direction = Direction::FromEnglish;
      else if (val == "non-en") s.direction = Direction::NonEnglish;
      else fail(ErrorKind::Usage, "subset: unknown direction '" + std::string(val) + "'");
    } else if (key == "script") {
      if (val == "latin") s.script = ScriptClass::Latin;
      else if (val == "non-latin") s.script = ScriptClass::NonLatin;
      else if (val == "logogram") s.script = ScriptClass::Logogram;
      else fail(ErrorKind::Usage, "subset: unknown script class '" + std::string(val) + "'");
    } else if (key == "domain") {
      s.domain = std::string(val);
    } else if (key == "group") {
      s.group = std::string(val);
    } else if (key == "lang") {
      s.language_pair = std::string(val);
    } else if (key == "alpha") {
      s.alpha = parse_probability(val, "alpha");
    } else if (key == "within") {
      auto colon = val.find(':');
      if (colon == std::string_view::npos)
        fail(ErrorKind::Usage, "subset: within expects lower:upper");
      double lo = parse_probability(val.substr(0, colon), "within");
      double hi = parse_probability(val.substr(colon + 1), "within");
      if (!(lo < hi)) fail(ErrorKind::Usage, "subset: within needs lower < upper");
      s.band = {lo, hi};
    } else if (key == "label") {
      s.label = std::string(val);
    } else {
      fail(ErrorKind::Usage, "subset: unknown key '" + std::string(key) + "'");
    }
  }
  return s;
}

bool SubsetSpec::matches(const DeltaRecord& r) const {
  if (direction && r.direction != *direction) return false;
  if (script) {
    if (*script == ScriptClass::NonLatin) {
      if (r.script != ScriptClass::NonLatin && r.script != ScriptClass::Logogram) return false;
    } else if (r.script != *script) {
      return false;
    }
  }
  if (domain && r.domain != *domain) return false;
  if (group && r.group != *group) return false;
  if (language_pair && r.source_lang + "-" + r.target_lang != *language_pair) return false;
  if (alpha && !(r.has_human_p() && r.human_p <= *alpha)) return false;
  if (band && !(r.has_human_p() && r.human_p > band->first && r.human_p <= band->second))
    return false;
  return true;
}

std::string SubsetSpec::describe() const {
  std::vector<std::string> terms;
  if (direction) terms.push_back("direction=" + std::string(to_string(*direction)));
  if (script) terms.push_back("script=" + std::string(to_string(*script)));
  if (domain) terms.push_back("domain=" + *domain);
  if (group) terms.push_back("group=" + *group);
  if (language_pair) terms.push_back("lang=" + *language_pair);
  if (alpha) terms.push_back("alpha=" + fmt_num(*alpha));
  if (band) terms.push_back("within=" + fmt_num(band->first) + ":" + fmt_num(band->second));
  if (!label.empty()) terms.push_back("label=" + label);
  if (terms.empty()) return "all";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ',';
    out += t;
  }
  return out;
}

std::string SubsetSpec::title() const {
  if (!label.empty()) return label;
  std::vector<std::string> parts;
  if (direction) {
    switch (*direction) {
      case Direction::IntoEnglish: parts.push_back("Into EN"); break;
      case Direction::FromEnglish: parts.push_back("From EN"); break;
      case Direction::NonEnglish: parts.push_back("Non EN"); break;
    }
  }
  if (script) {
    switch (*script) {
      case ScriptClass::Latin: parts.push_back("Latin"); break;
      case ScriptClass::NonLatin: parts.push_back("Non Latin"); break;
      case ScriptClass::Logogram: parts.push_back("Logograms"); break;
      case ScriptClass::Unknown: break;
    }
  }
  if (domain) parts.push_back(*domain);
  if (group) parts.push_back(*group);
  if (language_pair) parts.push_back(*language_pair);
  if (alpha) parts.push_back(fmt_num(*alpha));
  if (band) parts.push_back("Within");
  if (parts.empty()) return "All";
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::vector<DeltaRecord> filter_pairs(const std::vector<DeltaRecord>& records, const SubsetSpec& spec,
                                      Diagnostics* diag) {
  std::vector<DeltaRecord> out;
  for (const auto& r : records)
    if (spec.matches(r)) out.push_back(r);
  if (diag) {
    auto seen = [&](auto field, const std::string& value) {
      for (const auto& r : records)
        if (r.*field == value) return true;
      return false;
    };
    if (spec.domain && !seen(&DeltaRecord::domain, *spec.domain))
      diag->warn("subset " + spec.describe() + ": no record has domain '" + *spec.domain + "'");
    if (spec.group && !seen(&DeltaRecord::group, *spec.group))
      diag->warn("subset " + spec.describe() + ": no record has group '" + *spec.group + "'");
    if (spec.script) {
      for (const auto& r : records) {
        if (r.script == ScriptClass::Unknown) {
          diag->warn("subset " + spec.describe() + ": target language '" + r.target_lang +
                     "' missing from the language table; its pairs never match a script class");
          break;
        }
      }
    }
  }
  return out;
}

std::string subset_fingerprint(const std::vector<DeltaRecord>& records) {
  std::uint64_t h = fnv1a64("subset");
  for (const auto& r : records) {
    h = fnv1a64(r.pair.campaign_id, h);
    h = fnv1a64(std::string_view("\x1f", 1), h);
    h = fnv1a64(r.pair.system_a, h);
    h = fnv1a64(std::string_view("\x1f", 1), h);
    h = fnv1a64(r.pair.system_b, h);
    h = fnv1a64(std::string_view("\x1e", 1), h);
  }
  return hex64(h);
}

}  // namespace mtmeta
