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

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "error.hpp"
#include "language.hpp"

namespace mtmeta {

std::optional<Style> parse_style(std::string_view s) {
  if (s == "markdown" || s == "md") return Style::Markdown;
  if (s == "tsv") return Style::Tsv;
  return std::nullopt;
}

std::string format_fixed(double value, int precision) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string s(buf);
  // Avoid "-0.0".
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

namespace {

class Grid {
 public:
  explicit Grid(Style style) : style_(style) {}
  void header(std::vector<std::string> cells) { header_ = std::move(cells); }
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str() const {
    std::ostringstream os;
    if (style_ == Style::Tsv) {
      emit_tsv(os, header_);
      for (const auto& r : rows_) emit_tsv(os, r);
      return os.str();
    }
    emit_md(os, header_);
    os << '|';
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i == 0 ? "---" : "---:") << '|';
    os << '\n';
    for (const auto& r : rows_) emit_md(os, r);
    return os.str();
  }

 private:
  static void emit_tsv(std::ostream& os, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
    os << '\n';
  }
  static void emit_md(std::ostream& os, const std::vector<std::string>& r) {
    os << '|';
    for (const auto& c : r) os << ' ' << c << " |";
    os << '\n';
  }

  Style style_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string pct(double fraction, int precision) { return format_fixed(100.0 * fraction, precision); }

}  // namespace

std::string render_accuracy_table(const AccuracyTable& table, const std::vector<std::optional<ClusterReport>>& clusters,
                                  const RenderOptions& opts) {
  if (!clusters.empty() && clusters.size() != table.columns.size())
    fail(ErrorKind::Validation, "one cluster report per column required");
  for (std::size_t c = 0; c < clusters.size(); ++c)
    if (clusters[c] && clusters[c]->fingerprint != table.columns[c].fingerprint)
      fail(ErrorKind::Validation, "cluster report for column '" + table.columns[c].title +
                                      "' was computed on a different subset");

  const bool md = opts.style == Style::Markdown;
  Grid g(opts.style);
  std::vector<std::string> head{md ? "" : "metric"};
  std::vector<std::string> nrow{"n"};
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    std::string title = table.columns[c].title;
    if (c == table.sort_column && md) title += " ↓";
    head.push_back(title);
    nrow.push_back(table.columns[c].n == 0 ? "n=0" : std::to_string(table.columns[c].n));
  }
  g.header(head);
  g.row(nrow);

  bool any_tie = false;
  for (const auto& m : table.metrics) {
    std::vector<std::string> row{m};
    const auto& cells = table.cells.at(m);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (table.columns[c].n == 0 || !cells[c]) {
        row.push_back("-");
        continue;
      }
      std::string v = pct(cells[c]->accuracy, opts.accuracy_precision);
      const ClusterReport* cl = c < clusters.size() && clusters[c] ? &*clusters[c] : nullptr;
      bool best = cl && cl->best_metric == m;
      // Markdown bolds the best, so its dagger would be redundant.
      bool tied = cl && cl->tied(m) && !(md && best);
      any_tie = any_tie || tied;
      if (md) {
        if (best) v = "**" + v + "**";
        if (tied) v += "†";
      } else if (tied) {
        v += "*";
      }
      row.push_back(v);
    }
    g.row(row);
  }

  std::ostringstream os;
  os << g.str();
  std::vector<std::string> notes;
  if (any_tie) {
    const ClusterReport* any = nullptr;
    for (const auto& cl : clusters)
      if (cl) any = &*cl;
    notes.push_back(std::string(md ? "† " : "* ") + "tied with the best metric (" +
                    std::to_string(any->n_resamples) + " bootstrap resamples of pairs, seed " +
                    std::to_string(any->seed) + ")");
  }
  if (table.columns.size() > 1)
    notes.push_back("Accuracies are comparable only within a column; columns cover different sets of system pairs.");
  for (const auto& n : table.notes) notes.push_back(n);
  for (const auto& n : notes) os << (md ? "\n" : "# ") << n << (md ? "\n" : "\n");
  return os.str();
}

std::string render_quadrant_table(const std::vector<QuadrantReport>& reports, const RenderOptions& opts) {
  std::vector<const QuadrantReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  auto boot = [](const QuadrantReport* r) { return r->boot_only ? r->boot_only->accuracy : -1.0; };
  std::stable_sort(sorted.begin(), sorted.end(), [&](auto a, auto b) {
    if (boot(a) != boot(b)) return boot(a) > boot(b);
    return a->metric < b->metric;
  });
  const bool md = opts.style == Style::Markdown;
  Grid g(opts.style);
  g.header({md ? "" : "metric", "No test", md ? "Boot. ↓" : "Boot.", "Type II Err.", "n", "boot n",
            "truly differing", "type I", "equal quality"});
  auto acc = [&](const std::optional<AccuracyResult>& a) { return a ? pct(a->accuracy, opts.accuracy_precision) : "-"; };
  for (const auto* r : sorted) {
    g.row({r->metric, acc(r->no_test), acc(r->boot_only),
           std::to_string(r->type_ii) + " (" + pct(r->type_ii_rate, opts.accuracy_precision) + "%)",
           std::to_string(r->no_test ? r->no_test->n_pairs : 0),
           std::to_string(r->boot_only ? r->boot_only->n_pairs : 0), std::to_string(r->truly_differing),
           std::to_string(r->type_i), std::to_string(r->equal_quality)});
  }
  std::ostringstream os;
  os << g.str();
  if (!reports.empty()) {
    const auto& r = reports.front();
    os << (md ? "\n" : "# ") << "Metric test: paired bootstrap, alpha " << format_alpha(r.metric_alpha) << ", "
       << r.n_resamples << " resamples, seed " << r.seed << "; human test: Wilcoxon, alpha "
       << format_alpha(r.human_alpha) << ". Type II rate is over pairs the metric test calls non-significant.\n";
  }
  return os.str();
}

std::string render_correlation_table(const std::vector<CorrelationRow>& rows, const RenderOptions& opts) {
  Grid g(opts.style);
  g.header({opts.style == Style::Markdown ? "" : "metric", "n", "Spearman", "Pearson"});
  for (const auto& r : rows) {
    if (!r.value) g.row({r.metric, "0", "-", "-"});
    else
      g.row({r.metric, std::to_string(r.value->n), format_fixed(r.value->spearman, 3),
             format_fixed(r.value->pearson, 3)});
  }
  return g.str();
}

std::string render_human_tests(const std::vector<HumanTestRow>& rows, std::span<const double> alphas,
                               const RenderOptions& opts) {
  Grid g(Style::Tsv);
  g.header({"campaign", "system_a", "system_b", "human_delta", "p", "band", "within", "n_used", "n_zero",
            "unmatched", "matching", "method"});
  for (const auto& r : rows) {
    if (!r.outcome) {
      g.row({r.pair.campaign_id, r.pair.system_a, r.pair.system_b, format_fixed(r.human_delta, opts.score_precision),
             "-", "untested", "-", "0", "0", std::to_string(r.unmatched), r.matching, "no matched units"});
      continue;
    }
    auto band = significance_band(r.outcome->p_value, alphas);
    g.row({r.pair.campaign_id, r.pair.system_a, r.pair.system_b, format_fixed(r.human_delta, opts.score_precision),
           format_fixed(r.outcome->p_value, opts.p_precision), band.label, band.within ? "yes" : "no",
           std::to_string(r.outcome->n_used), std::to_string(r.outcome->n_zero), std::to_string(r.unmatched),
           r.matching, r.outcome->method_note});
  }
  return g.str();
}

std::string render_scatter(const std::vector<DeltaRecord>& records, const std::string& metric,
                           const RenderOptions& opts) {
  Grid g(Style::Tsv);
  g.header({"metric_delta", "human_delta", "direction", "campaign", "system_a", "system_b", "target_lang"});
  for (const auto& r : records) {
    auto d = r.metric_delta(metric);
    if (!d || !r.has_human()) continue;
    g.row({format_fixed(*d, opts.score_precision), format_fixed(r.human_delta, opts.score_precision),
           std::string(to_string(r.direction)), r.pair.campaign_id, r.pair.system_a, r.pair.system_b,
           r.target_lang});
  }
  return g.str();
}

std::string render_cluster_report(const ClusterReport& report, const std::string& subset, const RenderOptions& opts) {
  Grid g(opts.style);
  g.header({opts.style == Style::Markdown ? "" : "metric", "accuracy", "best wins", "tied with best"});
  std::vector<std::pair<std::string, double>> rows(report.accuracy.begin(), report.accuracy.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [m, acc] : rows)
    g.row({m, pct(acc, opts.accuracy_precision), format_fixed(report.win_fraction.at(m), 4),
           report.best_metric == m ? "best" : (report.tied(m) ? "yes" : "no")});
  std::ostringstream os;
  os << (opts.style == Style::Markdown ? "" : "# ") << "subset " << subset << ", n=" << report.n << ", "
     << report.n_resamples << " resamples, seed " << report.seed << "\n";
  if (opts.style == Style::Markdown) os << '\n';
  os << g.str();
  return os.str();
}

std::string render_sigtests(const std::vector<SigtestRow>& rows, double alpha, const RenderOptions& opts) {
  Grid g(Style::Tsv);
  g.header({"campaign", "system_a", "system_b", "metric", "score_a", "score_b", "p", "significant", "wins_a",
            "wins_b", "ties", "resamples", "seed"});
  for (const auto& r : rows)
    g.row({r.pair.campaign_id, r.pair.system_a, r.pair.system_b, r.metric,
           format_fixed(r.result.score_a, opts.score_precision), format_fixed(r.result.score_b, opts.score_precision),
           format_fixed(r.result.outcome.p_value, opts.p_precision), r.result.outcome.p_value <= alpha ? "yes" : "no",
           std::to_string(r.result.wins_a), std::to_string(r.result.wins_b), std::to_string(r.result.ties),
           std::to_string(r.result.n_resamples), std::to_string(r.result.seed)});
  return g.str();
}

std::string render_meta(const std::vector<CorrelationObservation>& obs, const AggregatedCorrelation& agg,
                        const RenderOptions& opts) {
  Grid g(opts.style);
  g.header({"group", "r", "n"});
  for (const auto& o : obs) g.row({o.group_label, format_fixed(o.r, 3), std::to_string(o.n)});
  g.row({"aggregate", format_fixed(agg.r, 3), std::to_string(agg.n_total)});
  return g.str();
}

}  // namespace mtmeta
