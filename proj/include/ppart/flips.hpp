#pragma once

// Flips on partitions and trees, flip graphs and the constructive
// connection sequences (left comb reduction, proper binary sequences).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppart/bijections.hpp"
#include "ppart/core.hpp"
#include "ppart/serialize.hpp"
#include "ppart/tree.hpp"

namespace ppart {

// ---------------------------------------------------------------------------
// Partition flips
// ---------------------------------------------------------------------------

/// Replacement of the chord shared by two k-gons by another long diagonal
/// of their (2k-2)-gon union.
struct PartitionFlip {
  Chord old_chord;
  Chord new_chord;
  std::vector<int> quad_region;

  friend bool operator==(const PartitionFlip&, const PartitionFlip&) = default;
};

/// One entry per (chord, alternative long diagonal); chords in ascending
/// order, diagonals by their first vertex in the merged region.
inline std::vector<std::pair<PartitionFlip, Partition>> partition_flips(const Partition& p, int k) {
  if (!is_k_partition(p, k)) throw ContractError("partition_flips needs a k-partition");
  std::vector<std::pair<PartitionFlip, Partition>> out;
  if (p.num_chords() == 0) return out;

  const detail::FaceWalker walker(p);
  // Face on the root side of each chord.
  std::vector<std::pair<Chord, std::vector<int>>> parent_face;
  walker.preorder([&](const std::vector<int>& face, Chord) {
    for (std::size_t s = 0; s + 1 < face.size(); ++s) {
      if (face[s + 1] - face[s] >= 2) parent_face.emplace_back(Chord{face[s], face[s + 1]}, face);
    }
  });
  std::sort(parent_face.begin(), parent_face.end());

  for (const auto& [chord, outer] : parent_face) {
    const auto inner = walker.below(chord.first, chord.second);
    std::vector<int> merged = outer;
    merged.insert(merged.end(), inner.begin() + 1, inner.end() - 1);
    std::sort(merged.begin(), merged.end());
    for (int s = 0; s + 1 < k; ++s) {
      const Chord diag{merged[static_cast<std::size_t>(s)],
                       merged[static_cast<std::size_t>(s + k - 1)]};
      if (diag == chord) continue;
      std::vector<Chord> chords;
      for (const auto& c : p.chords()) {
        if (c != chord) chords.push_back(c);
      }
      chords.push_back(diag);
      out.emplace_back(PartitionFlip{chord, diag, merged}, Partition(p.num_vertices(), std::move(chords)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tree flips
// ---------------------------------------------------------------------------

/// Flip at internal vertex `vertex` (preorder position): its internal child
/// number `child` is dissolved and the 2k-1 subtrees are regrouped under
/// child number `target`.
struct TreeFlip {
  std::size_t vertex;
  int child;
  int target;

  TreeFlip inverse() const { return TreeFlip{vertex, target, child}; }
  friend bool operator==(const TreeFlip&, const TreeFlip&) = default;
};

inline KAryTree apply_tree_flip(const KAryTree& t, const TreeFlip& f) {
  const int a = t.arity();
  if (f.vertex >= t.size() || t.is_leaf(f.vertex))
    throw InvalidFlip("flip vertex must be internal");
  if (f.child < 0 || f.child >= a || f.target < 0 || f.target >= a || f.child == f.target)
    throw InvalidFlip("flip child/target indices out of range");
  const auto ch = t.children(f.vertex);
  const std::size_t x = ch[static_cast<std::size_t>(f.child)];
  if (t.is_leaf(x)) throw InvalidFlip("flipped child is a leaf");

  std::vector<std::string> list;
  for (int c = 0; c < a; ++c) {
    if (c != f.child) {
      list.push_back(t.subtree_code(ch[static_cast<std::size_t>(c)]));
      continue;
    }
    for (std::size_t g : t.children(x)) list.push_back(t.subtree_code(g));
  }
  std::string sub = "I";
  for (int s = 0; s < static_cast<int>(list.size());) {
    if (s == f.target) {
      sub += 'I';
      for (int q = 0; q < a; ++q) sub += list[static_cast<std::size_t>(s + q)];
      s += a;
    } else {
      sub += list[static_cast<std::size_t>(s)];
      ++s;
    }
  }
  std::string code = t.preorder();
  code.replace(f.vertex, t.subtree_end(f.vertex) - f.vertex, sub);
  return KAryTree(a, std::move(code));
}

/// Every flip of `t` with its result, in (vertex, child, target) order.
inline std::vector<std::pair<TreeFlip, KAryTree>> tree_flips(const KAryTree& t) {
  std::vector<std::pair<TreeFlip, KAryTree>> out;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.is_leaf(v)) continue;
    const auto ch = t.children(v);
    for (int i = 0; i < t.arity(); ++i) {
      if (t.is_leaf(ch[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; j < t.arity(); ++j) {
        if (j == i) continue;
        TreeFlip f{v, i, j};
        out.emplace_back(f, apply_tree_flip(t, f));
      }
    }
  }
  return out;
}

/// l(T): edges on the path that always takes the leftmost child.
inline int left_path_length(const KAryTree& t) {
  const auto& code = t.preorder();
  return static_cast<int>(std::find(code.begin(), code.end(), 'L') - code.begin());
}

/// Flips taking `t` to the left comb. Each step picks the vertex on the
/// left path nearest the root having an internal non-first child, flips
/// its leftmost such child onto the first position, and so lengthens the
/// left path by one.
inline std::vector<TreeFlip> comb_sequence(const KAryTree& t) {
  std::vector<TreeFlip> out;
  KAryTree cur = t;
  while (left_path_length(cur) < cur.internal_count()) {
    const auto l = static_cast<std::size_t>(left_path_length(cur));
    std::optional<TreeFlip> pick;
    for (std::size_t v = 0; v < l && !pick; ++v) {
      const auto ch = cur.children(v);
      for (int i = 1; i < cur.arity(); ++i) {
        if (!cur.is_leaf(ch[static_cast<std::size_t>(i)])) {
          pick = TreeFlip{v, i, 0};
          break;
        }
      }
    }
    // l < n guarantees some left-path vertex has an internal later child.
    if (!pick) throw std::logic_error("comb_sequence: no flip found");
    cur = apply_tree_flip(cur, *pick);
    out.push_back(*pick);
  }
  return out;
}

namespace detail {

inline int left_len_at(const KAryTree& t, std::size_t r) {
  int l = 0;
  while (!t.is_leaf(r + static_cast<std::size_t>(l))) ++l;
  return l;
}

inline int internal_at(const KAryTree& t, std::size_t r) {
  const auto end = t.subtree_end(r);
  return static_cast<int>(std::count(t.preorder().begin() + static_cast<long>(r),
                                     t.preorder().begin() + static_cast<long>(end), 'I'));
}

inline void apply_logged(KAryTree& t, TreeFlip f, std::vector<TreeFlip>& log) {
  t = apply_tree_flip(t, f);
  log.push_back(f);
}

// Turns the binary subtree at r into a comb through proper trees only.
inline void proper_comb_at(KAryTree& t, std::size_t r, std::vector<TreeFlip>& log) {
  while (!t.is_leaf(r) && left_len_at(t, r) < internal_at(t, r)) {
    const int before = left_len_at(t, r);
    proper_comb_at(t, t.children(r)[0], log);
    proper_comb_at(t, t.children(r)[1], log);
    if (left_len_at(t, r) > before) continue;

    const auto ch = t.children(r);
    const std::size_t y = ch[0];
    const std::size_t x = ch[1];
    const auto xc = t.children(x);
    if (t.subtree_edges(y) % 4 == 0 || t.subtree_edges(xc[0]) % 4 == 0) {
      apply_logged(t, TreeFlip{r, 1, 0}, log);
    } else {
      // both are 2 mod 4: regroup below x first
      apply_logged(t, TreeFlip{x, 0, 1}, log);
      apply_logged(t, TreeFlip{r, 1, 0}, log);
    }
  }
}

}  // namespace detail

/// Flips connecting two proper binary trees with every intermediate tree
/// proper: both are driven to the left comb and the second half reversed.
inline std::vector<TreeFlip> proper_flip_sequence(const KAryTree& t, const KAryTree& u) {
  if (t.arity() != 2 || u.arity() != 2)
    throw ParameterError("proper_flip_sequence needs binary trees");
  if (t.internal_count() != u.internal_count())
    throw ParameterError("trees differ in size");
  if (!is_proper_tree(t) || !is_proper_tree(u))
    throw ParameterError("proper_flip_sequence needs proper trees");
  std::vector<TreeFlip> forward;
  std::vector<TreeFlip> backward;
  KAryTree a = t;
  KAryTree b = u;
  detail::proper_comb_at(a, 0, forward);
  detail::proper_comb_at(b, 0, backward);
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) forward.push_back(it->inverse());
  return forward;
}

/// Trees visited by applying `flips` to `t`, starting with `t` itself.
inline std::vector<KAryTree> replay(const KAryTree& t, const std::vector<TreeFlip>& flips) {
  std::vector<KAryTree> out{t};
  for (const auto& f : flips) out.push_back(apply_tree_flip(out.back(), f));
  return out;
}

// ---------------------------------------------------------------------------
// Flip graphs
// ---------------------------------------------------------------------------

struct FlipGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t num_nodes() const { return labels.size(); }
  std::size_t num_edges() const { return edges.size(); }
};

namespace detail {

template <typename Item, typename LabelFn, typename NeighborsFn>
FlipGraph build_graph(const std::vector<Item>& nodes, LabelFn label, NeighborsFn neighbors) {
  FlipGraph g;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& item : nodes) {
    auto key = label(item);
    if (index.emplace(key, g.labels.size()).second) g.labels.push_back(std::move(key));
  }
  g.adjacency.resize(g.labels.size());
  for (const auto& item : nodes) {
    const std::size_t u = index.at(label(item));
    for (const auto& nb : neighbors(item)) {
      auto it = index.find(label(nb));
      if (it == index.end() || it->second == u) continue;
      if (u < it->second) g.edges.emplace_back(u, it->second);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  for (const auto& [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

}  // namespace detail

/// Flip graph over the given k-partitions. With `restrict_proper`, only the
/// proper ones become nodes, so every edge joins two proper partitions.
template <typename Range>
FlipGraph build_flip_graph(Range&& items, int k,
                           const std::optional<ColoredPolygon>& restrict_proper = std::nullopt) {
  std::vector<Partition> nodes;
  for (auto&& p : items) {
    if (!nodes.empty() && p.num_vertices() != nodes.front().num_vertices())
      throw ParameterError("build_flip_graph: partitions of different sizes");
    if (restrict_proper && !is_proper(p, *restrict_proper, k)) continue;
    nodes.push_back(p);
  }
  return detail::build_graph(
      nodes, [](const Partition& p) { return serialize(p); },
      [k](const Partition& p) {
        std::vector<Partition> out;
        for (auto& [f, q] : partition_flips(p, k)) out.push_back(std::move(q));
        return out;
      });
}

template <typename Range>
FlipGraph build_tree_flip_graph(Range&& items) {
  std::vector<KAryTree> nodes;
  for (auto&& t : items) {
    if (!nodes.empty() && (t.arity() != nodes.front().arity() ||
                           t.internal_count() != nodes.front().internal_count()))
      throw ParameterError("build_tree_flip_graph: trees of different shapes");
    nodes.push_back(t);
  }
  return detail::build_graph(
      nodes, [](const KAryTree& t) { return t.preorder(); },
      [](const KAryTree& t) {
        std::vector<KAryTree> out;
        for (auto& [f, u] : tree_flips(t)) out.push_back(std::move(u));
        return out;
      });
}

/// Connected components as sorted node-index lists, ordered by their
/// smallest member.
inline std::vector<std::vector<std::size_t>> components(const FlipGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.num_nodes(), false);
  for (std::size_t s = 0; s < g.num_nodes(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      comp.push_back(u);
      for (auto v : g.adjacency[u]) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::string to_dot(const FlipGraph& g, bool label_by_index = false) {
  std::ostringstream os;
  os << "graph flips {\n";
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    os << "  n" << i << " [label=\"";
    if (label_by_index) {
      os << i;
    } else {
      for (char c : g.labels[i]) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
      }
    }
    os << "\"];\n";
  }
  for (const auto& [u, v] : g.edges) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string summary(const FlipGraph& g) {
  const auto comps = components(g);
  std::ostringstream os;
  os << "nodes\t" << g.num_nodes() << "\n";
  os << "edges\t" << g.num_edges() << "\n";
  os << "components\t" << comps.size() << "\n";
  os << "component_sizes\t";
  for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? "," : "") << comps[i].size();
  os << "\n";
  return os.str();
}

}  // namespace ppart
