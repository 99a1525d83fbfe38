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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "checks.hpp"

namespace {

const std::string kSource = MTMETA_SOURCE_DIR;
const std::string kFixtures = kSource + "/tests/data/sacrebleu_fixtures.json";

void require_ok(const checks::Result& r) {
  INFO(r.summary());
  CHECK(r.cases > 0);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("random collections agree with the straight-line oracle") { require_ok(checks::oracle_equivalence(25, 3)); }

TEST_CASE("exact Wilcoxon matches sign enumeration") { require_ok(checks::wilcoxon_exact()); }

TEST_CASE("normal approximation tracks the simulated null") { require_ok(checks::wilcoxon_asymptotic(40, 8)); }

TEST_CASE("metric fixtures reproduce") { require_ok(checks::metric_fixtures(kFixtures)); }

TEST_CASE("greedy TER matches exhaustive search on short inputs") { require_ok(checks::ter_exhaustive(2000, 12)); }

TEST_CASE("cached statistics equal direct recomputation") { require_ok(checks::sufficient_statistics(kFixtures, 6)); }

TEST_CASE("invariances hold") { require_ok(checks::invariance(200, 21)); }

TEST_CASE("pipeline output is deterministic") {
  auto dir = std::filesystem::temp_directory_path() / "mtmeta_unit_determinism";
  require_ok(checks::determinism(kSource + "/data/sample.jsonl", MTMETA_CLI_PATH, dir.string()));
}

TEST_CASE("dataset checks skip without the released collection") {
  if (std::getenv("MTMETA_DATASET")) return;
  CHECK(checks::dataset_accuracy("", "").skipped);
  CHECK(checks::dataset_quadrants("", "").skipped);
}
