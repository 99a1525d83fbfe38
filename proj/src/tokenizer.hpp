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

#ifndef MTMETA_TOKENIZER_HPP
#define MTMETA_TOKENIZER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtmeta {

using Tokens = std::vector<std::string>;

enum class TokenizerKind {
  // mteval-v13a punctuation rules.
  InternationalDefault,
  // Ideographs, kana and hangul become one token each; other runs go
  // through the default rules.
  CjkChar,
};

struct TokenizationScheme {
  TokenizerKind kind = TokenizerKind::InternationalDefault;
  bool lowercase = false;  // ASCII letters only
};

std::optional<TokenizerKind> parse_tokenizer(std::string_view name);
std::string_view to_string(TokenizerKind kind);

Tokens tokenize(std::string_view text, const TokenizationScheme& scheme = {});

namespace utf8 {

// Decodes to code points; invalid bytes map to U+FFFD one byte at a time.
std::u32string decode(std::string_view text);
std::string encode(char32_t cp);
bool is_space(char32_t cp);
bool is_cjk(char32_t cp);

}  // namespace utf8

}  // namespace mtmeta

#endif  // MTMETA_TOKENIZER_HPP
