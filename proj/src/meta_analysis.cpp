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

#include "meta_analysis.hpp"

#include <charconv>
#include <cmath>

#include "error.hpp"

namespace mtmeta {

AggregatedCorrelation hunter_schmidt(std::span<const CorrelationObservation> observations) {
  if (observations.empty()) fail(ErrorKind::Validation, "hunter_schmidt: no observations");
  double weighted = 0.0;
  AggregatedCorrelation out;
  for (const auto& o : observations) {
    if (!(std::fabs(o.r) <= 1.0))
      fail(ErrorKind::Validation, "correlation of group '" + o.group_label + "' outside [-1, 1]");
    if (o.n < 2) fail(ErrorKind::Validation, "group '" + o.group_label + "' needs n >= 2");
    weighted += static_cast<double>(o.n) * o.r;
    out.n_total += o.n;
  }
  out.r = weighted / static_cast<double>(out.n_total);
  return out;
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cols;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::vector<CorrelationObservation> parse_correlations_tsv(std::string_view text) {
  std::vector<CorrelationObservation> out;
  std::size_t start = 0, lineno = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 3)
      fail(ErrorKind::Validation, "correlations line " + std::to_string(lineno) + ": expected 3 columns");
    CorrelationObservation o;
    o.group_label = std::string(cols[0]);
    if (!parse_number(cols[1], o.r)) {
      if (out.empty() && lineno == 1) continue;  // header
      fail(ErrorKind::Validation, "correlations line " + std::to_string(lineno) + ": bad r");
    }
    if (!parse_number(cols[2], o.n))
      fail(ErrorKind::Validation, "correlations line " + std::to_string(lineno) + ": bad n");
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace mtmeta
