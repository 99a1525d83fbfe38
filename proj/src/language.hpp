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

#ifndef MTMETA_LANGUAGE_HPP
#define MTMETA_LANGUAGE_HPP

#include <string_view>

namespace mtmeta {

// Script class of a target language. Logogram languages are a subset of the
// non-Latin ones for subset selection.
enum class ScriptClass { Latin, NonLatin, Logogram, Unknown };
enum class Direction { IntoEnglish, FromEnglish, NonEnglish };

// Looked up in the bundled language table by ISO 639 code (case-insensitive,
// region suffixes such as "zh-Hant" or "pt_BR" ignored).
ScriptClass script_class(std::string_view lang);
bool is_known_language(std::string_view lang);
Direction direction(std::string_view source_lang, std::string_view target_lang);

std::string_view to_string(ScriptClass s);
std::string_view to_string(Direction d);

}  // namespace mtmeta

#endif  // MTMETA_LANGUAGE_HPP
