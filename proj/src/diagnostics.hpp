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

#ifndef MTMETA_DIAGNOSTICS_HPP
#define MTMETA_DIAGNOSTICS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtmeta {

// Collects non-fatal warnings raised while loading or analysing.
class Diagnostics {
 public:
  void warn(std::string message) { warnings_.push_back(std::move(message)); }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool empty() const { return warnings_.empty(); }
  void clear() { warnings_.clear(); }

 private:
  std::vector<std::string> warnings_;
};

// FNV-1a, 64 bit. Stable across platforms; used for content hashes in
// manifests and subset fingerprints.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value);

}  // namespace mtmeta

#endif  // MTMETA_DIAGNOSTICS_HPP
