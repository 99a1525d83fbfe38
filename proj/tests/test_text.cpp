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

#include <cmath>
#include <string>
#include <vector>

#include "bleu.hpp"
#include "chrf.hpp"
#include "scoring.hpp"
#include "ter.hpp"
#include "tokenizer.hpp"

using namespace mtmeta;

TEST_CASE("default tokenizer splits punctuation but keeps hyphenated words") {
  CHECK(tokenize("Hello, world!") == Tokens{"Hello", ",", "world", "!"});
  CHECK(tokenize("3.14 and 1,000") == Tokens{"3.14", "and", "1,000"});
  CHECK(tokenize("e-mail") == Tokens{"e-mail"});
  CHECK(tokenize("(see)") == Tokens{"(", "see", ")"});
  CHECK(tokenize("&amp; x") == Tokens{"&", "x"});
  CHECK(tokenize("  ").empty());
  CHECK(tokenize("ABC def", {TokenizerKind::InternationalDefault, true}) == Tokens{"abc", "def"});
}

TEST_CASE("cjk tokenizer splits ideographs") {
  TokenizationScheme cjk{TokenizerKind::CjkChar, false};
  CHECK(tokenize("我爱你 abc", cjk) == Tokens{"我", "爱", "你", "abc"});
  CHECK(tokenize("東京2024", cjk) == Tokens{"東", "京", "2024"});
  CHECK(parse_tokenizer("cjk-char") == TokenizerKind::CjkChar);
  CHECK_FALSE(parse_tokenizer("moses"));
}

TEST_CASE("utf8 decoding replaces invalid bytes") {
  auto d = utf8::decode("a\xff" "b");
  CHECK(d == std::u32string{U'a', 0xFFFD, U'b'});
  CHECK(utf8::encode(U'ß') == "ß");
}

TEST_CASE("BLEU statistics and scores") {
  auto s = bleu_segment_stats(tokenize("the the the"), tokenize("the cat"));
  CHECK(s.matches[0] == 1);
  CHECK(s.totals[0] == 3);
  CHECK(s.totals[3] == 0);
  std::vector<BleuSegmentStats> one{bleu_segment_stats(tokenize("a b c d e"), tokenize("a b c d f"))};
  CHECK(corpus_bleu(one) == doctest::Approx(100.0 * std::pow(0.2, 0.25)).epsilon(1e-12));
  std::vector<BleuSegmentStats> short_hyp{bleu_segment_stats(tokenize("a b"), tokenize("a b"))};
  CHECK(corpus_bleu(short_hyp) == 100.0);
  CHECK(corpus_bleu(short_hyp, {true}) == 0.0);
  CHECK_THROWS(corpus_bleu(std::vector<BleuSegmentStats>{}));
}

TEST_CASE("ChrF statistics and scores") {
  auto s = chrf_segment_stats("ab c", "abc");
  CHECK(s.tp[2] == 1);
  CHECK(s.hyp_count[0] == 3);
  std::vector<ChrfSegmentStats> v{chrf_segment_stats("abc", "abd")};
  CHECK(corpus_chrf(v) == doctest::Approx(700.0 / 18.0).epsilon(1e-12));
  std::vector<ChrfSegmentStats> none{chrf_segment_stats("xyz", "abc")};
  CHECK(corpus_chrf(none) == 0.0);
  auto empty_ref = chrf_segment_stats("abc", "");
  CHECK(empty_ref.hyp_count[0] == 0);
}

TEST_CASE("TER edits and rates") {
  CHECK(ter_segment(tokenize("a b c d"), tokenize("c d a b")).edits == 1);
  CHECK(ter_segment(tokenize("a b c"), tokenize("a b c")).edits == 0);
  CHECK(ter_segment(tokenize("x"), tokenize("a b c")).edits == 3);
  // The first greedy shift here leads to a dead end; the optimum is two shifts.
  CHECK(ter_segment(tokenize("w2 w2 w0 w1"), tokenize("w1 w0 w2 w2")).edits == 2);
  auto s = ter_segment(tokenize("a b"), tokenize("a c d"));
  CHECK(s.ref_length == 3);
  std::vector<TerSegmentStats> v{s};
  CHECK(corpus_ter(v) == doctest::Approx(2.0 / 3.0));
  std::vector<int> a{1, 2, 3}, b{1, 3};
  CHECK(edit_distance(a, b) == 1);
}

TEST_CASE("long TER inputs use the restricted search") {
  Tokens ref, hyp;
  for (int i = 0; i < 30; ++i) ref.push_back("w" + std::to_string(i));
  hyp = ref;
  std::rotate(hyp.begin(), hyp.begin() + 5, hyp.end());
  CHECK(ter_segment(hyp, ref).edits == 1);
}

TEST_CASE("segment statistics score resamples") {
  std::vector<std::string> h{"a b c", "d e f", "g h"}, r{"a b c", "d x f", "g h"};
  auto bleu = builtin_segment_stats(BuiltinMetric::Bleu, h, r, {});
  std::vector<std::size_t> first{0, 0, 0};
  CHECK(bleu.resampled_score(first) == 100.0);
  auto ter = builtin_segment_stats(BuiltinMetric::Ter, h, r, {});
  CHECK(ter.corpus_score() == doctest::Approx(-1.0 / 8.0));
  SegmentStats mean(SegmentStats::Mean{{1.0, 2.0, 6.0}});
  std::vector<std::size_t> idx{2, 2, 0};
  CHECK(mean.corpus_score() == 3.0);
  CHECK(mean.resampled_score(idx) == doctest::Approx(13.0 / 3.0));
  CHECK(parse_builtin_metric("ChRf") == BuiltinMetric::Chrf);
  CHECK(canonical_name(BuiltinMetric::Ter) == "TER");
}
