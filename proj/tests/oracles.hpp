// Test-only reference implementations. Nothing here calls into the library's
// enumeration or elimination code paths.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Chord = std::pair<int, int>;

// Vertex i of the n-gon placed at (i, i^2) on a parabola; these points are in
// convex position in the order 1..n, so chords cross iff the segments meet in
// their interiors.
inline long long orient(int p, int q, int r) {
  const long long px = p, py = 1LL * p * p, qx = q, qy = 1LL * q * q, rx = r, ry = 1LL * r * r;
  return (qx - px) * (ry - py) - (qy - py) * (rx - px);
}

inline bool segments_cross(Chord s, Chord t) {
  if (s.first == t.first || s.first == t.second || s.second == t.first || s.second == t.second)
    return false;
  const auto o1 = orient(s.first, s.second, t.first);
  const auto o2 = orient(s.first, s.second, t.second);
  const auto o3 = orient(t.first, t.second, s.first);
  const auto o4 = orient(t.first, t.second, s.second);
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

inline std::vector<Chord> chords(int n) {
  std::vector<Chord> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (b - a >= 2 && !(a == 1 && b == n)) out.emplace_back(a, b);
  return out;
}

struct SubsetStats {
  std::map<int, std::map<int, std::uint64_t>> by_size_support;  // d -> j -> count
  std::map<int, std::uint64_t> trees;                            // d -> count
};

// Walks the full power set of chords (n <= 8 keeps this at 2^20 subsets).
inline SubsetStats power_set_stats(int n) {
  const auto all = chords(n);
  const int m = static_cast<int>(all.size());
  std::vector<std::vector<bool>> cross(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cross[i][j] = segments_cross(all[i], all[j]);
  SubsetStats stats;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    bool ok = true;
    std::vector<int> members;
    for (int i = 0; i < m && ok; ++i) {
      if (!(s >> i & 1u)) continue;
      for (int j : members)
        if (cross[i][j]) {
          ok = false;
          break;
        }
      members.push_back(i);
    }
    if (!ok) continue;
    std::vector<int> verts;
    for (int i : members) {
      verts.push_back(all[i].first);
      verts.push_back(all[i].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int d = static_cast<int>(members.size());
    ++stats.by_size_support[d][static_cast<int>(verts.size())];
    if (d == 0) continue;
    // connected + |E| = |V| - 1, via repeated label propagation
    std::vector<int> comp(n + 1);
    std::iota(comp.begin(), comp.end(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (int i : members) {
        const int lo = std::min(comp[all[i].first], comp[all[i].second]);
        if (comp[all[i].first] != lo || comp[all[i].second] != lo) {
          comp[all[i].first] = comp[all[i].second] = lo;
          changed = true;
        }
      }
    }
    bool connected = true;
    for (int v : verts) connected = connected && comp[v] == comp[verts[0]];
    if (connected && d == static_cast<int>(verts.size()) - 1) ++stats.trees[d];
  }
  return stats;
}

// Number of standard fillings of a shape found by filtering all permutations.
inline std::uint64_t count_fillings_by_permutation(const std::vector<int>& parts) {
  const int total = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> perm(total);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    int offset = 0;
    std::vector<int> prev;
    for (int len : parts) {
      std::vector<int> row(perm.begin() + offset, perm.begin() + offset + len);
      offset += len;
      for (int j = 1; j < len && ok; ++j) ok = row[j - 1] < row[j];
      for (int j = 0; j < len && ok && !prev.empty(); ++j) ok = prev[j] < row[j];
      if (!ok) break;
      prev = std::move(row);
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
