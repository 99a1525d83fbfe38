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

#include "mtmeta/mtmeta.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "commands.hpp"
#include "error.hpp"
#include "human_eval.hpp"
#include "meta_analysis.hpp"
#include "resampling.hpp"
#include "scoring.hpp"
#include "tokenizer.hpp"

struct mtm_collection {
  mtmeta::Collection value;
};

struct mtm_options {
  mtmeta::Options value;
};

struct mtm_result {
  mtmeta::CommandOutput value;
};

namespace {

thread_local std::string last_error;

mtm_status set_error(mtm_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
mtm_status guarded(F&& body) {
  try {
    body();
    return MTM_OK;
  } catch (const mtmeta::Error& e) {
    return set_error(static_cast<mtm_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MTM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MTM_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) mtmeta::fail(mtmeta::ErrorKind::Usage, what);
}

std::vector<std::string> strings(const char* const* items, std::size_t n, const char* what) {
  require(n == 0 || items, what);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(items[i], what);
    out.emplace_back(items[i]);
  }
  return out;
}

mtmeta::BuiltinMetric metric_of(const char* name) {
  require(name, "metric name is NULL");
  auto m = mtmeta::parse_builtin_metric(name);
  if (!m) mtmeta::fail(mtmeta::ErrorKind::Usage, std::string("unknown metric '") + name + "'");
  return *m;
}

mtmeta::TokenizationScheme scheme_of(const char* tokenizer, bool lowercase = false) {
  mtmeta::TokenizationScheme s;
  s.lowercase = lowercase;
  if (tokenizer) {
    auto k = mtmeta::parse_tokenizer(tokenizer);
    if (!k) mtmeta::fail(mtmeta::ErrorKind::Usage, std::string("unknown tokenizer '") + tokenizer + "'");
    s.kind = *k;
  }
  return s;
}

}  // namespace

extern "C" {

const char* mtm_version(void) {
  static const std::string v(mtmeta::kVersion);
  return v.c_str();
}

const char* mtm_last_error(void) { return last_error.c_str(); }

mtm_status mtm_collection_load(const char* path, const char* const* score_files, size_t n_score_files,
                               mtm_collection** out) {
  return guarded([&] {
    require(path && out, "path and out are required");
    *out = nullptr;
    std::vector<std::filesystem::path> files;
    for (const auto& s : strings(score_files, n_score_files, "score file path is NULL")) files.emplace_back(s);
    auto c = std::make_unique<mtm_collection>();
    c->value = mtmeta::load_collection(path, files);
    *out = c.release();
  });
}

mtm_status mtm_collection_parse(const char* text, size_t len, mtm_collection** out) {
  return guarded([&] {
    require((text || len == 0) && out, "text and out are required");
    *out = nullptr;
    auto c = std::make_unique<mtm_collection>();
    c->value = mtmeta::parse_collection(std::string_view(text ? text : "", len));
    *out = c.release();
  });
}

void mtm_collection_free(mtm_collection* collection) { delete collection; }

size_t mtm_collection_campaign_count(const mtm_collection* collection) {
  return collection ? collection->value.campaigns.size() : 0;
}

const char* mtm_collection_hash(const mtm_collection* collection) {
  return collection ? collection->value.content_hash.c_str() : "";
}

mtm_status mtm_collection_serialize(const mtm_collection* collection, char** out) {
  return guarded([&] {
    require(collection && out, "collection and out are required");
    *out = dup_string(mtmeta::serialize_collection(collection->value));
  });
}

mtm_options* mtm_options_new(void) { return new (std::nothrow) mtm_options(); }

void mtm_options_free(mtm_options* options) { delete options; }

mtm_status mtm_options_set(mtm_options* options, const char* key, const char* value) {
  return guarded([&] {
    require(options && key && value, "options, key and value are required");
    options->value.set(key, value);
  });
}

size_t mtm_command_count(void) { return mtmeta::command_names().size(); }

const char* mtm_command_name(size_t index) {
  const auto& names = mtmeta::command_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

int mtm_command_needs_collection(const char* command) {
  return command && mtmeta::command_needs_collection(command) ? 1 : 0;
}

mtm_status mtm_run(const char* command, const mtm_collection* collection, const mtm_options* options,
                   mtm_result** out) {
  return guarded([&] {
    require(command && out, "command and out are required");
    *out = nullptr;
    static const mtmeta::Options none;
    auto r = std::make_unique<mtm_result>();
    r->value = mtmeta::run_command(command, collection ? &collection->value : nullptr,
                                   options ? options->value : none);
    *out = r.release();
  });
}

size_t mtm_result_artifact_count(const mtm_result* result) { return result ? result->value.artifacts.size() : 0; }

const char* mtm_result_artifact_name(const mtm_result* result, size_t index) {
  if (!result || index >= result->value.artifacts.size()) return nullptr;
  return result->value.artifacts[index].name.c_str();
}

const char* mtm_result_artifact_content(const mtm_result* result, size_t index, size_t* length) {
  if (!result || index >= result->value.artifacts.size()) return nullptr;
  const auto& c = result->value.artifacts[index].content;
  if (length) *length = c.size();
  return c.c_str();
}

size_t mtm_result_warning_count(const mtm_result* result) { return result ? result->value.warnings.size() : 0; }

const char* mtm_result_warning(const mtm_result* result, size_t index) {
  if (!result || index >= result->value.warnings.size()) return nullptr;
  return result->value.warnings[index].c_str();
}

void mtm_result_free(mtm_result* result) { delete result; }

mtm_status mtm_wilcoxon(const double* diffs, size_t n, double* p_value, double* statistic) {
  return guarded([&] {
    require((diffs || n == 0) && p_value, "diffs and p_value are required");
    auto t = mtmeta::wilcoxon_signed_rank(std::span<const double>(diffs, n));
    *p_value = t.p_value;
    if (statistic) *statistic = t.statistic;
  });
}

mtm_status mtm_hunter_schmidt(const double* r, const int64_t* n, size_t count, double* r_agg) {
  return guarded([&] {
    require((count == 0 || (r && n)) && r_agg, "r, n and r_agg are required");
    std::vector<mtmeta::CorrelationObservation> obs;
    for (size_t i = 0; i < count; ++i) obs.push_back({std::to_string(i), r[i], n[i]});
    *r_agg = mtmeta::hunter_schmidt(obs).r;
  });
}

mtm_status mtm_corpus_score(const char* metric, const char* const* hyps, const char* const* refs, size_t n,
                            const char* tokenizer, double* score) {
  return guarded([&] {
    require(score, "score is required");
    auto m = metric_of(metric);
    auto h = strings(hyps, n, "hypothesis is NULL");
    auto rf = strings(refs, n, "reference is NULL");
    auto stats = mtmeta::builtin_segment_stats(m, h, rf, scheme_of(tokenizer));
    double s = stats.corpus_score();
    *score = m == mtmeta::BuiltinMetric::Ter ? -s : s;
  });
}

mtm_status mtm_paired_bootstrap(const char* metric, const char* const* hyps_a, const char* const* hyps_b,
                                const char* const* refs, size_t n, size_t resamples, uint64_t seed, double* p_value,
                                double* score_a, double* score_b) {
  return guarded([&] {
    require(p_value, "p_value is required");
    auto m = metric_of(metric);
    auto rf = strings(refs, n, "reference is NULL");
    auto scheme = scheme_of(nullptr);
    auto a = mtmeta::builtin_segment_stats(m, strings(hyps_a, n, "hypothesis is NULL"), rf, scheme);
    auto b = mtmeta::builtin_segment_stats(m, strings(hyps_b, n, "hypothesis is NULL"), rf, scheme);
    mtmeta::ResampleConfig cfg;
    cfg.n_resamples = resamples;
    cfg.seed = seed;
    auto res = mtmeta::paired_bootstrap_metric_test(a, b, cfg);
    *p_value = res.outcome.p_value;
    if (score_a) *score_a = res.score_a;
    if (score_b) *score_b = res.score_b;
  });
}

mtm_status mtm_tokenize(const char* text, const char* tokenizer, int lowercase, char** out) {
  return guarded([&] {
    require(text && out, "text and out are required");
    auto toks = mtmeta::tokenize(text, scheme_of(tokenizer, lowercase != 0));
    std::string joined;
    for (const auto& t : toks) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    *out = dup_string(joined);
  });
}

void mtm_string_free(char* s) { std::free(s); }

}  // extern "C"
