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

// Straight-line reference implementations used as test oracles. They share
// no code with the library beyond the bootstrap index generator.

#ifndef MTMETA_TESTS_ORACLES_HPP
#define MTMETA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// 1-based average ranks, O(n^2).
inline std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t less = 0, equal = 0;
    for (double x : v) {
      if (x < v[i]) ++less;
      else if (x == v[i]) ++equal;
    }
    out[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
  }
  return out;
}

struct SignedRanks {
  std::vector<std::int64_t> doubled;  // 2 * rank of each nonzero difference
  std::int64_t w_plus2 = 0;           // 2 * W+
};

inline SignedRanks signed_ranks(const std::vector<double>& diffs) {
  std::vector<double> mags;
  std::vector<bool> pos;
  for (double d : diffs)
    if (d != 0.0) {
      mags.push_back(std::fabs(d));
      pos.push_back(d > 0);
    }
  auto r = ranks(mags);
  SignedRanks s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    s.doubled.push_back(std::llround(2 * r[i]));
    if (pos[i]) s.w_plus2 += s.doubled.back();
  }
  return s;
}

// Two-sided exact p by enumerating all 2^n sign assignments.
inline double wilcoxon_enumerate(const std::vector<double>& diffs) {
  auto s = signed_ranks(diffs);
  const std::size_t n = s.doubled.size();
  if (n == 0) return 1.0;
  std::uint64_t le = 0, ge = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) w += s.doubled[i];
    le += w <= s.w_plus2;
    ge += w >= s.w_plus2;
  }
  double p = 2.0 * static_cast<double>(std::min(le, ge)) / std::ldexp(1.0, static_cast<int>(n));
  return std::min(1.0, p);
}

// Exact up to 25 nonzero differences, normal approximation with tie and
// continuity corrections beyond.
inline double wilcoxon_p(const std::vector<double>& diffs) {
  auto s = signed_ranks(diffs);
  const std::size_t n = s.doubled.size();
  if (n == 0) return 1.0;
  if (n <= 16) return wilcoxon_enumerate(diffs);
  if (n <= 25) {
    std::map<std::int64_t, std::uint64_t> dist{{0, 1}};
    for (auto r : s.doubled) {
      std::map<std::int64_t, std::uint64_t> next = dist;
      for (auto [w, c] : dist) next[w + r] += c;
      dist = std::move(next);
    }
    std::uint64_t le = 0, ge = 0;
    for (auto [w, c] : dist) {
      if (w <= s.w_plus2) le += c;
      if (w >= s.w_plus2) ge += c;
    }
    return std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) / std::ldexp(1.0, static_cast<int>(n)));
  }
  const double nn = static_cast<double>(n);
  double var = nn * (nn + 1) * (2 * nn + 1) / 24.0;
  std::map<std::int64_t, int> ties;
  for (auto r : s.doubled) ++ties[r];
  for (auto [r, t] : ties) var -= (static_cast<double>(t) * t * t - t) / 48.0;
  const double mean = nn * (nn + 1) / 4.0;
  const double dev = std::max(0.0, std::fabs(static_cast<double>(s.w_plus2) / 2.0 - mean) - 0.5);
  if (var <= 0) return 1.0;
  return std::min(1.0, std::erfc(dev / std::sqrt(var) / std::sqrt(2.0)));
}

// ------------------------------------------------------------------- BLEU

using Toks = std::vector<std::string>;

inline std::map<Toks, int> ngrams(const Toks& t, std::size_t n) {
  std::map<Toks, int> out;
  for (std::size_t i = 0; i + n <= t.size(); ++i) ++out[Toks(t.begin() + i, t.begin() + i + n)];
  return out;
}

inline double bleu(const std::vector<Toks>& hyps, const std::vector<Toks>& refs, bool strict = false) {
  double match[4] = {}, total[4] = {};
  double hyp_len = 0, ref_len = 0;
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    hyp_len += hyps[s].size();
    ref_len += refs[s].size();
    for (std::size_t n = 1; n <= 4; ++n) {
      auto h = ngrams(hyps[s], n), r = ngrams(refs[s], n);
      for (auto& [g, c] : h) {
        total[n - 1] += c;
        auto it = r.find(g);
        if (it != r.end()) match[n - 1] += std::min(c, it->second);
      }
    }
  }
  if (match[0] + match[1] + match[2] + match[3] == 0) return 0.0;
  double log_sum = 0;
  int orders = 0;
  for (int n = 0; n < 4; ++n) {
    if (total[n] == 0) {
      if (strict) return 0.0;
      break;
    }
    if (match[n] == 0) return 0.0;
    log_sum += std::log(match[n] / total[n]);
    ++orders;
  }
  double bp = hyp_len < ref_len ? (hyp_len > 0 ? std::exp(1 - ref_len / hyp_len) : 0.0) : 1.0;
  return 100.0 * bp * std::exp(log_sum / orders);
}

// ------------------------------------------------------------------- ChrF

inline std::u32string code_points(const std::string& s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    int len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    char32_t cp = len == 1 ? c : len == 2 ? c & 0x1F : len == 3 ? c & 0x0F : c & 0x07;
    for (int k = 1; k < len; ++k) cp = cp << 6 | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    if (cp != U' ' && cp != U'\t' && cp != U'\n' && cp != U'\r') out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

inline double chrf(const std::vector<std::string>& hyps, const std::vector<std::string>& refs) {
  double tp[6] = {}, hc[6] = {}, rc[6] = {};
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    auto h = code_points(hyps[s]), r = code_points(refs[s]);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::map<std::u32string, int> hg, rg;
      for (std::size_t i = 0; i + n <= h.size(); ++i) ++hg[h.substr(i, n)];
      for (std::size_t i = 0; i + n <= r.size(); ++i) ++rg[r.substr(i, n)];
      // Hypothesis n-grams count only where the reference has some.
      for (auto& [g, c] : hg) {
        if (!rg.empty()) hc[n - 1] += c;
        if (rg.count(g)) tp[n - 1] += std::min(c, rg[g]);
      }
      for (auto& [g, c] : rg) rc[n - 1] += c;
    }
  }
  double p = 0, r = 0;
  int eff = 0;
  for (int n = 0; n < 6; ++n)
    if (hc[n] > 0 && rc[n] > 0) {
      p += tp[n] / hc[n];
      r += tp[n] / rc[n];
      ++eff;
    }
  if (eff == 0) return 0.0;
  p /= eff;
  r /= eff;
  if (p + r == 0) return 0.0;
  return 100.0 * 5 * p * r / (4 * p + r);
}

// -------------------------------------------------------------------- TER

inline int levenshtein(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] != b[j - 1])});
  return d[a.size()][b.size()];
}

// Minimum over every sequence of block moves of (moves + edit distance).
inline int ter_exhaustive(const std::vector<int>& hyp, const std::vector<int>& ref) {
  int best = levenshtein(hyp, ref);
  std::map<std::vector<int>, int> seen{{hyp, 0}};
  std::queue<std::vector<int>> q;
  q.push(hyp);
  while (!q.empty()) {
    auto cur = q.front();
    q.pop();
    const int d = seen[cur];
    best = std::min(best, d + levenshtein(cur, ref));
    if (d + 1 >= best) continue;
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::vector<int> block(cur.begin() + i, cur.begin() + j), rest(cur.begin(), cur.begin() + i);
        rest.insert(rest.end(), cur.begin() + j, cur.end());
        for (std::size_t k = 0; k <= rest.size(); ++k) {
          if (k == i) continue;
          std::vector<int> next(rest.begin(), rest.begin() + k);
          next.insert(next.end(), block.begin(), block.end());
          next.insert(next.end(), rest.begin() + k, rest.end());
          if (seen.emplace(next, d + 1).second) q.push(next);
        }
      }
  }
  return best;
}

// ------------------------------------------------------------ correlations

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks(x), ranks(y));
}

inline int sign(double x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

}  // namespace oracle

#endif  // MTMETA_TESTS_ORACLES_HPP
