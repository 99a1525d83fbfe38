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

// mtmeta command-line front end. Links only the C interface.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtmeta/mtmeta.h"

namespace {

struct FlagSpec {
  const char* name;
  const char* help;
  bool boolean = false;
};

const FlagSpec kFlags[] = {
    {"metrics", "comma-separated metric names (default: every available metric)"},
    {"metric", "single metric name"},
    {"subset", "subset: all, or key=value terms such as direction=into-en,alpha=0.05"},
    {"subsets", "semicolon-separated subsets, one table column each"},
    {"preset", "column preset: significance, scenarios or groups"},
    {"alphas", "comma-separated human significance levels"},
    {"alpha", "significance level for tests and significance-filtered presets"},
    {"resamples", "bootstrap resamples for this command"},
    {"cluster-resamples", "resamples for tie clusters (overrides --resamples)"},
    {"sigtest-resamples", "resamples for metric significance tests (overrides --resamples)"},
    {"seed", "bootstrap seed (default from MTMETA_SEED, else 0)"},
    {"confidence", "confidence for tie clusters"},
    {"one-sided", "one-sided metric test (H1: A better than B)", true},
    {"style", "markdown or tsv"},
    {"precision", "decimals for accuracy percentages"},
    {"p-precision", "decimals for p-values"},
    {"tokenizer", "default or cjk-char"},
    {"lowercase", "lowercase ASCII before tokenizing", true},
    {"strict", "BLEU: never skip n-gram orders", true},
    {"matching", "human pairing: annotator, segment or annotator-fallback"},
    {"zero-method", "Wilcoxon zero differences: discard or pratt"},
    {"exact-threshold", "largest n for the exact Wilcoxon distribution"},
    {"system-a", "first system"},
    {"system-b", "second system"},
    {"campaign", "restrict to one campaign"},
    {"input", "meta: TSV with columns group, r, n"},
    {"reference", "compare: reference file, one segment per line"},
    {"hyp-a", "compare: hypotheses of system A"},
    {"hyp-b", "compare: hypotheses of system B"},
    {"target-lang", "compare: target language code"},
    {"threads", "worker threads for resampling (0: automatic)"},
    {"timestamp", "pipeline: manifest timestamp override"},
    {"sort", "index of the column that orders the rows"},
    {"intersect", "keep only pairs scored by every metric", true},
};

const std::map<std::string, std::string> kDescriptions{
    {"ingest", "validate a collection and print it in canonical form"},
    {"validate", "validate a collection and summarise it"},
    {"score", "system-level metric scores"},
    {"human-test", "Wilcoxon tests on human judgements for every system pair"},
    {"accuracy", "pairwise accuracy table"},
    {"scatter", "metric delta / human delta pairs for plotting"},
    {"clusters", "bootstrap clusters of metrics tied with the best"},
    {"sigtest", "paired bootstrap significance of metric deltas"},
    {"quadrants", "metric significance against human significance"},
    {"meta", "Hunter-Schmidt aggregation of correlations"},
    {"report", "accuracy table annotated with tie clusters"},
    {"compare", "ship/no-ship verdict for two hypothesis files"},
    {"pipeline", "every analysis in one run"},
};

struct Handle {
  mtm_collection* collection = nullptr;
  mtm_options* options = nullptr;
  mtm_result* result = nullptr;
  ~Handle() {
    mtm_result_free(result);
    mtm_options_free(options);
    mtm_collection_free(collection);
  }
};

int report_error(mtm_status status) {
  std::cerr << "mtmeta: " << mtm_last_error() << "\n";
  return static_cast<int>(status);
}

bool write_file(const std::filesystem::path& path, const char* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary);
  out.write(data, static_cast<std::streamsize>(size));
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meta-evaluation of machine translation metrics against human judgements", "mtmeta"};
  app.set_version_flag("--version", std::string(mtm_version()));
  app.set_config("--config", "", "key=value file mirroring the long flags; flags on the command line win");
  app.require_subcommand(1, 1);

  std::string collection_path, out_path;
  std::vector<std::string> score_files;
  bool quiet = false;
  app.add_option("--collection", collection_path, "collection JSONL file");
  app.add_option("--scores", score_files, "external metric score file (JSONL); repeatable");
  app.add_option("--out", out_path, "output file (pipeline: output directory)");
  app.add_flag("--quiet", quiet, "suppress warnings");

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& f : kFlags) {
    std::string flag = std::string("--") + f.name;
    CLI::Option* opt = f.boolean ? app.add_flag(flag, f.help) : app.add_option(flag, values[f.name], f.help);
    options[f.name] = opt;
  }
  options["seed"]->envname("MTMETA_SEED");

  for (std::size_t i = 0; i < mtm_command_count(); ++i) {
    std::string name = mtm_command_name(i);
    auto it = kDescriptions.find(name);
    app.add_subcommand(name, it == kDescriptions.end() ? "" : it->second)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return MTM_ERR_USAGE;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Handle h;
  h.options = mtm_options_new();
  for (const auto& [name, opt] : options) {
    if (opt->count() == 0 && opt->results().empty()) continue;
    const std::string value = opt->get_expected_min() == 0 ? "true" : values[name];
    if (mtm_options_set(h.options, name.c_str(), value.c_str()) != MTM_OK) return report_error(MTM_ERR_USAGE);
  }
  std::string cmdline;
  for (int i = 0; i < argc; ++i) cmdline += (i ? " " : "") + std::string(argv[i]);
  mtm_options_set(h.options, "command-line", cmdline.c_str());

  if (mtm_command_needs_collection(command.c_str())) {
    if (collection_path.empty()) {
      std::cerr << "mtmeta: " << command << " needs --collection\n";
      return MTM_ERR_USAGE;
    }
    std::vector<const char*> files;
    for (const auto& f : score_files) files.push_back(f.c_str());
    mtm_status st = mtm_collection_load(collection_path.c_str(), files.data(), files.size(), &h.collection);
    if (st != MTM_OK) return report_error(st);
  }

  mtm_status st = mtm_run(command.c_str(), h.collection, h.options, &h.result);
  if (st != MTM_OK) return report_error(st);

  if (!quiet)
    for (std::size_t i = 0; i < mtm_result_warning_count(h.result); ++i)
      std::cerr << "warning: " << mtm_result_warning(h.result, i) << "\n";

  std::size_t size = 0;
  const char* primary = mtm_result_artifact_content(h.result, 0, &size);
  if (out_path.empty()) {
    std::fwrite(primary, 1, size, stdout);
    return 0;
  }
  if (command == "pipeline") {
    std::error_code ec;
    std::filesystem::create_directories(out_path, ec);
    if (ec) {
      std::cerr << "mtmeta: cannot create " << out_path << ": " << ec.message() << "\n";
      return MTM_ERR_IO;
    }
    for (std::size_t i = 0; i < mtm_result_artifact_count(h.result); ++i) {
      const char* data = mtm_result_artifact_content(h.result, i, &size);
      auto path = std::filesystem::path(out_path) / mtm_result_artifact_name(h.result, i);
      if (!write_file(path, data, size)) {
        std::cerr << "mtmeta: cannot write " << path << "\n";
        return MTM_ERR_IO;
      }
    }
    return 0;
  }
  if (!write_file(out_path, primary, size)) {
    std::cerr << "mtmeta: cannot write " << out_path << "\n";
    return MTM_ERR_IO;
  }
  return 0;
}
