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

#include "language.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <utility>

namespace mtmeta {

namespace {

struct LanguageInfo {
  std::string_view code;
  ScriptClass script;
};

// Sorted by code.
constexpr auto kLanguages = std::to_array<LanguageInfo>({
    {"af", ScriptClass::Latin},    {"am", ScriptClass::NonLatin}, {"ar", ScriptClass::NonLatin},
    {"as", ScriptClass::NonLatin}, {"az", ScriptClass::Latin},    {"be", ScriptClass::NonLatin},
    {"bg", ScriptClass::NonLatin}, {"bn", ScriptClass::NonLatin}, {"bs", ScriptClass::Latin},
    {"ca", ScriptClass::Latin},    {"cs", ScriptClass::Latin},    {"cy", ScriptClass::Latin},
    {"da", ScriptClass::Latin},    {"de", ScriptClass::Latin},    {"el", ScriptClass::NonLatin},
    {"en", ScriptClass::Latin},    {"eo", ScriptClass::Latin},    {"es", ScriptClass::Latin},
    {"et", ScriptClass::Latin},    {"eu", ScriptClass::Latin},    {"fa", ScriptClass::NonLatin},
    {"fi", ScriptClass::Latin},    {"fil", ScriptClass::Latin},   {"fr", ScriptClass::Latin},
    {"ga", ScriptClass::Latin},    {"gl", ScriptClass::Latin},    {"gu", ScriptClass::NonLatin},
    {"ha", ScriptClass::Latin},    {"he", ScriptClass::NonLatin}, {"hi", ScriptClass::NonLatin},
    {"hr", ScriptClass::Latin},    {"ht", ScriptClass::Latin},    {"hu", ScriptClass::Latin},
    {"hy", ScriptClass::NonLatin}, {"id", ScriptClass::Latin},    {"ig", ScriptClass::Latin},
    {"is", ScriptClass::Latin},    {"it", ScriptClass::Latin},    {"iu", ScriptClass::NonLatin},
    {"ja", ScriptClass::Logogram}, {"ka", ScriptClass::NonLatin}, {"kk", ScriptClass::NonLatin},
    {"km", ScriptClass::NonLatin}, {"kn", ScriptClass::NonLatin}, {"ko", ScriptClass::Logogram},
    {"ky", ScriptClass::NonLatin}, {"lo", ScriptClass::NonLatin}, {"lt", ScriptClass::Latin},
    {"lv", ScriptClass::Latin},    {"mg", ScriptClass::Latin},    {"mk", ScriptClass::NonLatin},
    {"ml", ScriptClass::NonLatin}, {"mn", ScriptClass::NonLatin}, {"mr", ScriptClass::NonLatin},
    {"ms", ScriptClass::Latin},    {"mt", ScriptClass::Latin},    {"my", ScriptClass::NonLatin},
    {"nb", ScriptClass::Latin},    {"ne", ScriptClass::NonLatin}, {"nl", ScriptClass::Latin},
    {"nn", ScriptClass::Latin},    {"no", ScriptClass::Latin},    {"or", ScriptClass::NonLatin},
    {"pa", ScriptClass::NonLatin}, {"pl", ScriptClass::Latin},    {"ps", ScriptClass::NonLatin},
    {"pt", ScriptClass::Latin},    {"ro", ScriptClass::Latin},    {"ru", ScriptClass::NonLatin},
    {"si", ScriptClass::NonLatin}, {"sk", ScriptClass::Latin},    {"sl", ScriptClass::Latin},
    {"so", ScriptClass::Latin},    {"sq", ScriptClass::Latin},    {"sr", ScriptClass::NonLatin},
    {"sv", ScriptClass::Latin},    {"sw", ScriptClass::Latin},    {"ta", ScriptClass::NonLatin},
    {"te", ScriptClass::NonLatin}, {"tg", ScriptClass::NonLatin}, {"th", ScriptClass::NonLatin},
    {"tk", ScriptClass::Latin},    {"tl", ScriptClass::Latin},    {"tr", ScriptClass::Latin},
    {"uk", ScriptClass::NonLatin}, {"ur", ScriptClass::NonLatin}, {"uz", ScriptClass::Latin},
    {"vi", ScriptClass::Latin},    {"xh", ScriptClass::Latin},    {"yi", ScriptClass::NonLatin},
    {"yo", ScriptClass::Latin},    {"zh", ScriptClass::Logogram}, {"zu", ScriptClass::Latin},
});

std::string base_code(std::string_view lang) {
  std::string code;
  for (char c : lang) {
    if (c == '-' || c == '_') break;
    code.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return code;
}

const LanguageInfo* lookup(std::string_view lang) {
  std::string code = base_code(lang);
  auto it = std::lower_bound(kLanguages.begin(), kLanguages.end(), code,
                             [](const LanguageInfo& l, const std::string& c) { return l.code < c; });
  if (it == kLanguages.end() || it->code != code) return nullptr;
  return &*it;
}

}  // namespace

ScriptClass script_class(std::string_view lang) {
  const LanguageInfo* info = lookup(lang);
  return info ? info->script : ScriptClass::Unknown;
}

bool is_known_language(std::string_view lang) { return lookup(lang) != nullptr; }

Direction direction(std::string_view source_lang, std::string_view target_lang) {
  if (base_code(target_lang) == "en") return Direction::IntoEnglish;
  if (base_code(source_lang) == "en") return Direction::FromEnglish;
  return Direction::NonEnglish;
}

std::string_view to_string(ScriptClass s) {
  switch (s) {
    case ScriptClass::Latin: return "latin";
    case ScriptClass::NonLatin: return "non-latin";
    case ScriptClass::Logogram: return "logogram";
    case ScriptClass::Unknown: break;
  }
  return "unknown";
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::IntoEnglish: return "into-en";
    case Direction::FromEnglish: return "from-en";
    case Direction::NonEnglish: break;
  }
  return "non-en";
}

}  // namespace mtmeta
