#pragma once

// Test-only brute force, independent of the library: every noncrossing
// diagonal set by include/exclude search, faces by rotation-system
// traversal. Feasible up to about 12 vertices.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Diag = std::pair<int, int>;

inline bool crosses(Diag a, Diag b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

inline void for_each_dissection(int n, const std::function<void(const std::vector<Diag>&)>& fn) {
  std::vector<Diag> diags;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) diags.emplace_back(i, j);
  std::vector<Diag> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == diags.size()) {
      fn(chosen);
      return;
    }
    rec(idx + 1);
    for (const auto& c : chosen)
      if (crosses(c, diags[idx])) return;
    chosen.push_back(diags[idx]);
    rec(idx + 1);
    chosen.pop_back();
  };
  rec(0);
}

/// Bounded faces as vertex sets (sorted).
inline std::vector<std::vector<int>> faces(int n, const std::vector<Diag>& chords) {
  if (n < 3) return {};
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  auto link = [&](int a, int b) {
    nbr[static_cast<std::size_t>(a)].push_back(b);
    nbr[static_cast<std::size_t>(b)].push_back(a);
  };
  for (int v = 0; v < n; ++v) link(v, (v + 1) % n);
  for (auto [a, b] : chords) link(a, b);
  // Around v, sort neighbors by cyclic offset (w - v) mod n: this is the
  // angular order at a vertex of a convex polygon.
  for (int v = 0; v < n; ++v) {
    auto& l = nbr[static_cast<std::size_t>(v)];
    std::sort(l.begin(), l.end(), [&](int x, int y) { return (x - v + n) % n < (y - v + n) % n; });
  }
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    for (int t : nbr[static_cast<std::size_t>(s)]) {
      if (used.count({s, t})) continue;
      std::vector<int> face;
      int u = s, v = t;
      bool outer = false;
      while (!used.count({u, v})) {
        used.insert({u, v});
        if (u == 1 && v == 0) outer = true;
        face.push_back(u);
        // next edge: neighbor of v just before u in angular order
        const auto& l = nbr[static_cast<std::size_t>(v)];
        auto it = std::find(l.begin(), l.end(), u);
        const int w = it == l.begin() ? l.back() : *(it - 1);
        u = v;
        v = w;
      }
      if (!outer) {
        std::sort(face.begin(), face.end());
        out.push_back(face);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool all_faces_size(const std::vector<std::vector<int>>& fs, std::size_t k) {
  return std::all_of(fs.begin(), fs.end(), [k](const auto& f) { return f.size() == k; });
}

inline bool face_has_all_colors(const std::vector<int>& f, const std::vector<int>& colors, int c) {
  std::set<int> seen;
  for (int v : f) seen.insert(colors[static_cast<std::size_t>(v)]);
  return static_cast<int>(seen.size()) == c;
}

/// Number of proper k-partitions of the colored polygon.
inline long count_proper(const std::vector<int>& colors, int c, int k) {
  const int n = static_cast<int>(colors.size());
  if (n == 2) return 1;
  long count = 0;
  for_each_dissection(n, [&](const std::vector<Diag>& ch) {
    const auto fs = faces(n, ch);
    if (!all_faces_size(fs, static_cast<std::size_t>(k))) return;
    for (const auto& f : fs)
      if (!face_has_all_colors(f, colors, c)) return;
    ++count;
  });
  return count;
}

/// Root face (containing 0 and n-1) of size D, every other face size K;
/// D = 2 means every face has size K.
inline long count_kd(int n, int K, int D) {
  long count = 0;
  for_each_dissection(n, [&](const std::vector<Diag>& ch) {
    for (const auto& f : faces(n, ch)) {
      const bool root = D != 2 && f.front() == 0 && f.back() == n - 1;
      if (f.size() != static_cast<std::size_t>(root ? D : K)) return;
    }
    ++count;
  });
  return count;
}

inline std::vector<int> cyclic(int n, int c) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(i % c + 1);
  return out;
}

}  // namespace oracle
