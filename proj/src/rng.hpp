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

#ifndef MTMETA_RNG_HPP
#define MTMETA_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mtmeta {

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: output i of stream s under seed k is a pure
// function of (k, s, i), so resample r can be drawn on any thread.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed ^ mix64(stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform on [0, bound), unbiased (multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Indices of bootstrap resample `resample` over n items.
inline std::vector<std::size_t> resample_indices(std::uint64_t seed, std::uint64_t resample, std::size_t n) {
  CounterRng rng(seed, resample);
  std::vector<std::size_t> idx(n);
  for (auto& i : idx) i = static_cast<std::size_t>(rng.below(n));
  return idx;
}

}  // namespace mtmeta

#endif  // MTMETA_RNG_HPP
