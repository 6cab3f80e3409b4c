// Copyright 2026 The gibbsmatch Authors
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

#include "matcher.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "suffix_array.hpp"

namespace gibbsmatch {

namespace {

constexpr uint64_t kHashBase = 0x9E3779B97F4A7C15ull;  // odd, so invertible mod 2^64

void check_window(std::size_t n, uint32_t k) {
  if (k < 1) throw std::invalid_argument("window length k must be >= 1");
  if (k > n)
    throw std::invalid_argument("window length k=" + std::to_string(k) +
                                " exceeds sequence length " + std::to_string(n));
}

bool windows_equal(const uint32_t* a, const uint32_t* b, uint32_t k) {
  return std::memcmp(a, b, static_cast<std::size_t>(k) * sizeof(uint32_t)) == 0;
}

// Rolling polynomial fingerprints over 2^64. Collisions are possible and are
// always resolved by direct comparison before anything is counted.
struct Fingerprints {
  std::vector<uint64_t> prefix;  // prefix[i] = hash of the first i symbols
  uint64_t pow_k = 1;

  Fingerprints(SymbolSpan s, uint32_t k) {
    prefix.resize(s.size() + 1);
    prefix[0] = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      prefix[i + 1] = prefix[i] * kHashBase + (static_cast<uint64_t>(s[i]) + 1);
    for (uint32_t i = 0; i < k; ++i) pow_k *= kHashBase;
  }

  uint64_t window(std::size_t start, uint32_t k) const {
    return prefix[start + k] - prefix[start] * pow_k;
  }
};

// Stable LSD radix sort of `order` by 64-bit keys, 16 bits per pass.
void radix_sort_by_key(const std::vector<uint64_t>& keys, std::vector<uint32_t>& order) {
  std::vector<uint32_t> scratch(order.size());
  std::vector<uint32_t> buckets(1u << 16);
  for (int pass = 0; pass < 4; ++pass) {
    const int shift = 16 * pass;
    std::fill(buckets.begin(), buckets.end(), 0);
    for (const uint32_t i : order) ++buckets[(keys[i] >> shift) & 0xffffu];
    uint32_t acc = 0;
    for (uint32_t& b : buckets) {
      const uint32_t c = b;
      b = acc;
      acc += c;
    }
    for (const uint32_t i : order) scratch[buckets[(keys[i] >> shift) & 0xffffu]++] = i;
    order.swap(scratch);
  }
}

uint64_t pairs_within(uint64_t c) { return c * (c - 1) / 2; }

}  // namespace

uint64_t count_matches_naive(SymbolSpan s, uint32_t k) {
  check_window(s.size(), k);
  const std::size_t w = s.size() - k + 1;
  uint64_t count = 0;
  for (std::size_t i = 0; i + 1 < w; ++i)
    for (std::size_t j = i + 1; j < w; ++j)
      if (windows_equal(s.data() + i, s.data() + j, k)) ++count;
  return count;
}

uint64_t count_matches(SymbolSpan s, uint32_t k) {
  check_window(s.size(), k);
  const std::size_t w = s.size() - k + 1;
  const Fingerprints fp(s, k);

  std::vector<uint64_t> keys(w);
  for (std::size_t i = 0; i < w; ++i) keys[i] = fp.window(i, k);
  std::vector<uint32_t> order(w);
  for (std::size_t i = 0; i < w; ++i) order[i] = static_cast<uint32_t>(i);
  radix_sort_by_key(keys, order);

  uint64_t count = 0;
  std::vector<std::pair<uint32_t, uint64_t>> classes;  // representative, size
  std::size_t run = 0;
  while (run < w) {
    std::size_t end = run + 1;
    while (end < w && keys[order[end]] == keys[order[run]]) ++end;
    if (end - run > 1) {
      classes.clear();
      for (std::size_t t = run; t < end; ++t) {
        const uint32_t pos = order[t];
        bool placed = false;
        for (auto& [rep, size] : classes) {
          if (windows_equal(s.data() + rep, s.data() + pos, k)) {
            ++size;
            placed = true;
            break;
          }
        }
        if (!placed) classes.emplace_back(pos, 1);
      }
      for (const auto& [rep, size] : classes) count += pairs_within(size);
    }
    run = end;
  }
  return count;
}

OverlapReport max_match(SymbolSpan s) {
  if (s.empty()) throw std::invalid_argument("sequence must be nonempty");
  OverlapReport report;
  if (s.size() < 2) return report;

  const auto sa = build_suffix_array(s);
  const auto lcp = build_lcp_array(s, sa);
  uint32_t best = 0;
  for (std::size_t t = 1; t < lcp.size(); ++t) best = std::max(best, lcp[t]);
  if (best == 0) return report;

  // Witness: among all maximal runs (adjacent lcp == best), every pair of
  // members matches; the lexicographically smallest (i, j) uses the two
  // smallest member positions of some run.
  report.length = best;
  report.found = true;
  uint64_t best_i = s.size(), best_j = s.size();
  uint32_t min1 = 0, min2 = 0;
  bool in_run = false;
  const auto close_run = [&]() {
    if (!in_run) return;
    if (min1 < best_i || (min1 == best_i && min2 < best_j)) {
      best_i = min1;
      best_j = min2;
    }
    in_run = false;
  };
  for (std::size_t t = 1; t < lcp.size(); ++t) {
    if (lcp[t] == best) {
      if (!in_run) {
        min1 = std::min(sa[t - 1], sa[t]);
        min2 = std::max(sa[t - 1], sa[t]);
        in_run = true;
      } else {
        const uint32_t v = sa[t];
        if (v < min1) {
          min2 = min1;
          min1 = v;
        } else if (v < min2) {
          min2 = v;
        }
      }
    } else {
      close_run();
    }
  }
  close_run();
  report.i = best_i;
  report.j = best_j;
  return report;
}

HittingReport first_match_time(SymbolSpan s, uint32_t k) {
  if (k < 1) throw std::invalid_argument("window length k must be >= 1");
  HittingReport report;
  if (k > s.size()) return report;

  const Fingerprints fp(s, k);
  std::unordered_map<uint64_t, std::vector<uint32_t>> seen;
  seen.reserve(s.size() - k + 1);
  for (std::size_t j = 0; j + k <= s.size(); ++j) {
    const uint64_t key = fp.window(j, k);
    auto [it, inserted] = seen.try_emplace(key);
    if (!inserted) {
      for (const uint32_t i : it->second) {
        if (windows_equal(s.data() + i, s.data() + j, k)) {
          report.finite = true;
          report.prefix_length = j + k;
          report.i = i;
          report.j = j;
          return report;
        }
      }
    }
    it->second.push_back(static_cast<uint32_t>(j));
  }
  return report;
}

bool duality_check(SymbolSpan s, uint32_t k) {
  check_window(s.size(), k);
  const bool no_match = count_matches(s, k) == 0;
  const bool below_k = max_match(s).length < k;
  const bool never_hit = !first_match_time(s, k).finite;
  return no_match == below_k && below_k == never_hit;
}

uint64_t cross_count_naive(SymbolSpan s, SymbolSpan t, uint32_t k) {
  if (s.size() != t.size())
    throw std::invalid_argument("two-sequence matching requires equal-length sequences (got " +
                                std::to_string(s.size()) + " and " + std::to_string(t.size()) +
                                ")");
  check_window(s.size(), k);
  const std::size_t w = s.size() - k + 1;
  uint64_t count = 0;
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (j != i && windows_equal(s.data() + i, t.data() + j, k)) ++count;
  return count;
}

uint64_t cross_count(SymbolSpan s, SymbolSpan t, uint32_t k) {
  if (s.size() != t.size())
    throw std::invalid_argument("two-sequence matching requires equal-length sequences (got " +
                                std::to_string(s.size()) + " and " + std::to_string(t.size()) +
                                ")");
  check_window(s.size(), k);
  const std::size_t w = s.size() - k + 1;
  const Fingerprints fps(s, k);
  const Fingerprints fpt(t, k);

  // Entries 0..w-1 are s-windows, w..2w-1 are t-windows; the stable radix
  // keeps each side in ascending position order inside a fingerprint run.
  std::vector<uint64_t> keys(2 * w);
  for (std::size_t i = 0; i < w; ++i) keys[i] = fps.window(i, k);
  for (std::size_t j = 0; j < w; ++j) keys[w + j] = fpt.window(j, k);
  std::vector<uint32_t> order(2 * w);
  for (std::size_t i = 0; i < 2 * w; ++i) order[i] = static_cast<uint32_t>(i);
  radix_sort_by_key(keys, order);

  struct CrossClass {
    uint32_t rep = 0;  // entry id
    std::vector<uint32_t> s_pos;
    std::vector<uint32_t> t_pos;
  };
  const auto entry_window = [&](uint32_t entry) {
    return entry < w ? s.data() + entry : t.data() + (entry - w);
  };

  uint64_t count = 0;
  std::vector<CrossClass> classes;
  std::size_t run = 0;
  while (run < order.size()) {
    std::size_t end = run + 1;
    while (end < order.size() && keys[order[end]] == keys[order[run]]) ++end;
    if (end - run > 1) {
      classes.clear();
      for (std::size_t q = run; q < end; ++q) {
        const uint32_t entry = order[q];
        CrossClass* home = nullptr;
        for (auto& c : classes) {
          if (windows_equal(entry_window(c.rep), entry_window(entry), k)) {
            home = &c;
            break;
          }
        }
        if (home == nullptr) {
          classes.emplace_back();
          home = &classes.back();
          home->rep = entry;
        }
        if (entry < w)
          home->s_pos.push_back(entry);
        else
          home->t_pos.push_back(entry - w);
      }
      for (const auto& c : classes) {
        uint64_t diag = 0;
        std::size_t a = 0, b = 0;
        while (a < c.s_pos.size() && b < c.t_pos.size()) {
          if (c.s_pos[a] < c.t_pos[b])
            ++a;
          else if (c.s_pos[a] > c.t_pos[b])
            ++b;
          else {
            ++diag;
            ++a;
            ++b;
          }
        }
        count += static_cast<uint64_t>(c.s_pos.size()) * c.t_pos.size() - diag;
      }
    }
    run = end;
  }
  return count;
}

namespace {

// Machinery shared by the generalized-suffix-array scans: iterate maximal
// runs of adjacent lcp >= k (all members of such a run share the same
// k-window) and fold in each run's s/t membership.
struct GsaView {
  SymbolSpan s, t;
  std::vector<uint32_t> combined;
  std::vector<uint32_t> sa;
  std::vector<uint32_t> lcp;
  std::size_t n = 0;

  GsaView(SymbolSpan s_in, SymbolSpan t_in) : s(s_in), t(t_in), n(s_in.size()) {
    uint32_t max_sym = 0;
    for (const uint32_t v : s) max_sym = std::max(max_sym, v);
    for (const uint32_t v : t) max_sym = std::max(max_sym, v);
    combined.reserve(2 * n + 1);
    combined.insert(combined.end(), s.begin(), s.end());
    combined.push_back(max_sym + 1);  // separator matches nothing else
    combined.insert(combined.end(), t.begin(), t.end());
    sa = build_suffix_array(combined);
    lcp = build_lcp_array(combined, sa);
  }

  bool is_s(uint32_t pos) const { return pos < n; }
  bool is_t(uint32_t pos) const { return pos > n; }
  uint32_t t_index(uint32_t pos) const { return pos - static_cast<uint32_t>(n) - 1; }
};

struct RunStats {
  uint64_t s_count = 0, t_count = 0, diag = 0;
  uint32_t s_min1 = UINT32_MAX, s_min2 = UINT32_MAX;
  uint32_t t_min1 = UINT32_MAX, t_min2 = UINT32_MAX;

  void add_s(uint32_t pos) {
    ++s_count;
    if (pos < s_min1) {
      s_min2 = s_min1;
      s_min1 = pos;
    } else if (pos < s_min2) {
      s_min2 = pos;
    }
  }
  void add_t(uint32_t pos) {
    ++t_count;
    if (pos < t_min1) {
      t_min2 = t_min1;
      t_min1 = pos;
    } else if (pos < t_min2) {
      t_min2 = pos;
    }
  }
  uint64_t off_diagonal_pairs() const { return s_count * t_count - diag; }
};

// Calls visit(stats) for every maximal run of suffixes sharing a k-prefix
// that contains at least one s-window and one t-window.
template <typename Visit>
void scan_runs(const GsaView& g, uint32_t k, std::vector<uint32_t>& members,
               std::vector<uint32_t>& stamp, uint32_t& stamp_version, Visit visit) {
  const std::size_t total = g.sa.size();
  std::size_t q = 1;
  while (q < total) {
    if (g.lcp[q] < k) {
      ++q;
      continue;
    }
    members.clear();
    members.push_back(g.sa[q - 1]);
    while (q < total && g.lcp[q] >= k) {
      members.push_back(g.sa[q]);
      ++q;
    }
    RunStats stats;
    ++stamp_version;
    for (const uint32_t pos : members)
      if (g.is_s(pos)) {
        stats.add_s(pos);
        stamp[pos] = stamp_version;
      }
    for (const uint32_t pos : members)
      if (g.is_t(pos)) {
        const uint32_t tp = g.t_index(pos);
        stats.add_t(tp);
        if (tp < g.n && stamp[tp] == stamp_version) ++stats.diag;
      }
    if (stats.s_count > 0 && stats.t_count > 0) visit(stats);
  }
}

// Lexicographically smallest ordered witness (i, j) in one run, optionally
// excluding the diagonal.
std::optional<std::pair<uint32_t, uint32_t>> run_witness(const RunStats& st,
                                                         bool exclude_diagonal) {
  if (st.s_count == 0 || st.t_count == 0) return std::nullopt;
  if (!exclude_diagonal) return std::make_pair(st.s_min1, st.t_min1);
  if (st.off_diagonal_pairs() == 0) return std::nullopt;
  if (st.t_min1 != st.s_min1) return std::make_pair(st.s_min1, st.t_min1);
  if (st.t_min2 != UINT32_MAX) return std::make_pair(st.s_min1, st.t_min2);
  // T = {s_min1}: the smallest usable i is the next s position.
  return std::make_pair(st.s_min2, st.t_min1);
}

}  // namespace

CrossOverlapReport max_cross_match(SymbolSpan s, SymbolSpan t) {
  if (s.size() != t.size())
    throw std::invalid_argument("two-sequence matching requires equal-length sequences (got " +
                                std::to_string(s.size()) + " and " + std::to_string(t.size()) +
                                ")");
  if (s.empty()) throw std::invalid_argument("sequences must be nonempty");

  CrossOverlapReport report;
  const GsaView g(s, t);

  uint32_t longest = 0;
  for (std::size_t q = 1; q < g.sa.size(); ++q) {
    const uint32_t a = g.sa[q - 1];
    const uint32_t b = g.sa[q];
    if ((g.is_s(a) && g.is_t(b)) || (g.is_t(a) && g.is_s(b)))
      longest = std::max(longest, g.lcp[q]);
  }
  if (longest == 0) return report;

  std::vector<uint32_t> members;
  std::vector<uint32_t> stamp(g.n, 0);
  uint32_t version = 0;

  const auto best_witness = [&](uint32_t k, bool exclude_diagonal)
      -> std::optional<std::pair<uint32_t, uint32_t>> {
    std::optional<std::pair<uint32_t, uint32_t>> best;
    scan_runs(g, k, members, stamp, version, [&](const RunStats& st) {
      const auto cand = run_witness(st, exclude_diagonal);
      if (cand && (!best || *cand < *best)) best = cand;
    });
    return best;
  };

  const auto un = best_witness(longest, false);
  report.unconstrained = {longest, true, un->first, un->second};

  const auto exists_off_diagonal = [&](uint32_t k) {
    bool found = false;
    scan_runs(g, k, members, stamp, version, [&](const RunStats& st) {
      if (st.off_diagonal_pairs() > 0) found = true;
    });
    return found;
  };

  uint32_t lo = 0, hi = longest;  // lo: known feasible (0 = none), hi: upper bound
  while (lo < hi) {
    const uint32_t mid = lo + (hi - lo + 1) / 2;
    if (exists_off_diagonal(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  if (lo > 0) {
    const auto w = best_witness(lo, true);
    report.constrained = {lo, true, w->first, w->second};
  }
  return report;
}

}  // namespace gibbsmatch
