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

/* C interface to the mtmeta library.
 *
 * Every call returns an mtm_status; on failure mtm_last_error() describes the
 * problem (thread-local, valid until the next failing call on that thread).
 * Status values double as CLI exit codes. */

#ifndef MTMETA_MTMETA_H
#define MTMETA_MTMETA_H

#include <stddef.h>
#include <stdint.h>

#if defined(MTM_BUILDING_LIBRARY)
#define MTM_API __attribute__((visibility("default")))
#else
#define MTM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mtm_status {
  MTM_OK = 0,
  MTM_ERR_USAGE = 1,
  MTM_ERR_VALIDATION = 2,
  MTM_ERR_DEGENERATE = 3,
  MTM_ERR_IO = 4,
  MTM_ERR_INTERNAL = 5
} mtm_status;

typedef struct mtm_collection mtm_collection;
typedef struct mtm_options mtm_options;
typedef struct mtm_result mtm_result;

MTM_API const char* mtm_version(void);
MTM_API const char* mtm_last_error(void);

/* score_files: external metric score files (JSONL), may be NULL when n is 0. */
MTM_API mtm_status mtm_collection_load(const char* path, const char* const* score_files, size_t n_score_files,
                                       mtm_collection** out);
MTM_API mtm_status mtm_collection_parse(const char* text, size_t len, mtm_collection** out);
MTM_API void mtm_collection_free(mtm_collection* collection);
MTM_API size_t mtm_collection_campaign_count(const mtm_collection* collection);
MTM_API const char* mtm_collection_hash(const mtm_collection* collection);
/* Canonical JSONL; release with mtm_string_free. */
MTM_API mtm_status mtm_collection_serialize(const mtm_collection* collection, char** out);

/* Keys are the long CLI flag names without dashes, e.g. "system-a". */
MTM_API mtm_options* mtm_options_new(void);
MTM_API void mtm_options_free(mtm_options* options);
MTM_API mtm_status mtm_options_set(mtm_options* options, const char* key, const char* value);

MTM_API size_t mtm_command_count(void);
MTM_API const char* mtm_command_name(size_t index);
MTM_API int mtm_command_needs_collection(const char* command);

/* collection may be NULL for commands that do not read one. */
MTM_API mtm_status mtm_run(const char* command, const mtm_collection* collection, const mtm_options* options,
                           mtm_result** out);
MTM_API size_t mtm_result_artifact_count(const mtm_result* result);
MTM_API const char* mtm_result_artifact_name(const mtm_result* result, size_t index);
MTM_API const char* mtm_result_artifact_content(const mtm_result* result, size_t index, size_t* length);
MTM_API size_t mtm_result_warning_count(const mtm_result* result);
MTM_API const char* mtm_result_warning(const mtm_result* result, size_t index);
MTM_API void mtm_result_free(mtm_result* result);

/* Two-sided Wilcoxon signed-rank test on paired differences. */
MTM_API mtm_status mtm_wilcoxon(const double* diffs, size_t n, double* p_value, double* statistic);

MTM_API mtm_status mtm_hunter_schmidt(const double* r, const int64_t* n, size_t count, double* r_agg);

/* metric: "bleu", "chrf" or "ter"; tokenizer: "default", "cjk-char" or NULL.
 * TER is reported as an edit ratio (lower is better). */
MTM_API mtm_status mtm_corpus_score(const char* metric, const char* const* hyps, const char* const* refs, size_t n,
                                    const char* tokenizer, double* score);

/* Two-sided paired bootstrap of corpus scores; the scores are higher-better. */
MTM_API mtm_status mtm_paired_bootstrap(const char* metric, const char* const* hyps_a, const char* const* hyps_b,
                                        const char* const* refs, size_t n, size_t resamples, uint64_t seed,
                                        double* p_value, double* score_a, double* score_b);

/* Space-joined tokens; release with mtm_string_free. */
MTM_API mtm_status mtm_tokenize(const char* text, const char* tokenizer, int lowercase, char** out);

MTM_API void mtm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MTMETA_MTMETA_H */
