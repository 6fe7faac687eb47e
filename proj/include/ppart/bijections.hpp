#pragma once

// Constructive maps between proper colored partitions, uncolored
// partitions into larger blocks, and k-ary trees.

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ppart/core.hpp"
#include "ppart/counting.hpp"
#include "ppart/tree.hpp"

namespace ppart {

// ---------------------------------------------------------------------------
// Partitions <-> trees
// ---------------------------------------------------------------------------

/// Tree obtained by putting a vertex on every edge and rooting at the top
/// edge; a face's non-parent edges become children, left to right in
/// counterclockwise order. Regions must be (arity+1)-gons.
inline KAryTree partition_to_tree(const Partition& p, int arity) {
  if (arity < 2) throw ParameterError("tree arity must be >= 2");
  if (!is_k_partition(p, arity + 1))
    throw ContractError("partition_to_tree: regions must be " + std::to_string(arity + 1) +
                        "-gons");
  const int n = p.num_vertices();
  if (n == 2) return KAryTree::leaf(arity);
  const detail::FaceWalker walker(p);
  std::string code;
  auto emit = [&](auto&& self, int i, int j) -> void {
    code += 'I';
    const auto face = walker.below(i, j);
    for (std::size_t s = 0; s + 1 < face.size(); ++s) {
      if (face[s + 1] - face[s] == 1)
        code += 'L';
      else
        self(self, face[s], face[s + 1]);
    }
  };
  emit(emit, 0, n - 1);
  return KAryTree(arity, std::move(code));
}

inline Partition tree_to_partition(const KAryTree& t, int num_vertices) {
  if (t.leaf_count() != num_vertices - 1)
    throw ParameterError("tree with " + std::to_string(t.leaf_count()) +
                         " leaves does not fit a " + std::to_string(num_vertices) + "-gon");
  std::vector<Chord> chords;
  std::size_t pos = 0;
  // Returns the vertex reached after covering the subtree's leaves.
  auto place = [&](auto&& self, int start) -> int {
    if (t.preorder()[pos++] == 'L') return start + 1;
    int cur = start;
    for (int c = 0; c < t.arity(); ++c) {
      const int from = cur;
      cur = self(self, cur);
      if (cur - from >= 2) chords.emplace_back(from, cur);
    }
    return cur;
  };
  place(place, 0);
  return Partition(num_vertices, std::move(chords));
}

// ---------------------------------------------------------------------------
// Helpers shared by the colored block maps
// ---------------------------------------------------------------------------

namespace detail {

inline bool colored_as(const ColoredPolygon& poly, const ColoringScheme& s) {
  return poly == make_coloring(s, poly.num_vertices());
}

inline void require_proper_triangulation(const Partition& p, const ColoredPolygon& poly) {
  check_same_polygon(p, poly);
  if (!is_k_partition(p, 3)) throw ContractError("input is not a triangulation");
  if (!is_proper(p, poly, 3)) throw ContractError("input triangulation is not proper");
}

inline Partition without(const Partition& p, const std::vector<Chord>& removed) {
  std::vector<Chord> keep;
  for (const auto& c : p.chords()) {
    if (std::find(removed.begin(), removed.end(), c) == removed.end()) keep.push_back(c);
  }
  return Partition(p.num_vertices(), std::move(keep));
}

// Drop, in every triangle, its unique edge with equal endpoint colors.
inline Partition remove_monochromatic_chords(const Partition& p, const ColoredPolygon& poly) {
  std::vector<Chord> removed;
  FaceWalker(p).preorder([&](const std::vector<int>& face, Chord) {
    int mono = 0;
    for (std::size_t s = 0; s < face.size(); ++s) {
      const int a = face[s];
      const int b = face[(s + 1) % face.size()];
      if (poly.color(a) != poly.color(b)) continue;
      ++mono;
      const Chord c{std::min(a, b), std::max(a, b)};
      if (p.has_chord(c.first, c.second)) removed.push_back(c);
    }
    if (mono != 1)
      throw ContractError("triangle with " + std::to_string(mono) +
                          " monochromatic edges");
  });
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  return without(p, removed);
}

// Every combination of one extra chord set per region.
inline std::vector<Partition> expand_choices(
    const Partition& base, const std::vector<std::vector<std::vector<Chord>>>& options) {
  std::vector<std::vector<Chord>> acc{base.chords()};
  for (const auto& region_options : options) {
    std::vector<std::vector<Chord>> next;
    for (const auto& partial : acc) {
      for (const auto& extra : region_options) {
        auto chords = partial;
        chords.insert(chords.end(), extra.begin(), extra.end());
        next.push_back(std::move(chords));
      }
    }
    acc = std::move(next);
  }
  std::vector<Partition> out;
  for (auto& chords : acc) out.emplace_back(base.num_vertices(), std::move(chords));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> singleton_positions(const std::vector<int>& face,
                                            const ColoredPolygon& poly);

// Groups the triangles of the sub-polygon i..j into pentagons, each the fan
// of three triangles from its once-used color. The pentagon on (i, j) holds
// the triangle below (i, j) and two triangles adjacent to it; candidates
// are tried in a fixed order and abandoned if the rest cannot be grouped.
inline bool group_pentagons(const FaceWalker& walker, const ColoredPolygon& poly, int i, int j,
                            std::vector<Chord>& removed) {
  if (j - i == 1) return true;
  if ((j - i + 1) % 3 != 2) return false;
  const auto top = walker.below(i, j);
  if (top.size() != 3) throw ContractError("expected a triangle below the block edge");
  const int t = top[1];

  struct Candidate {
    std::array<int, 5> pent;
    std::array<Chord, 2> glued;
  };
  std::vector<Candidate> candidates;
  if (t - i >= 2 && j - t >= 2) {
    const int l = walker.below(i, t)[1];
    const int r = walker.below(t, j)[1];
    candidates.push_back({{i, l, t, r, j}, {Chord{i, t}, Chord{t, j}}});
  }
  if (t - i >= 2) {
    const int l = walker.below(i, t)[1];
    if (l - i >= 2) candidates.push_back({{i, walker.below(i, l)[1], l, t, j}, {Chord{i, t}, Chord{i, l}}});
    if (t - l >= 2) candidates.push_back({{i, l, walker.below(l, t)[1], t, j}, {Chord{i, t}, Chord{l, t}}});
  }
  if (j - t >= 2) {
    const int r = walker.below(t, j)[1];
    if (r - t >= 2) candidates.push_back({{i, t, walker.below(t, r)[1], r, j}, {Chord{t, j}, Chord{t, r}}});
    if (j - r >= 2) candidates.push_back({{i, t, r, walker.below(r, j)[1], j}, {Chord{t, j}, Chord{r, j}}});
  }

  for (const auto& c : candidates) {
    const std::vector<int> pent(c.pent.begin(), c.pent.end());
    const auto single = singleton_positions(pent, poly);
    if (single.size() != 1) continue;
    const auto q = static_cast<std::size_t>(single[0]);
    auto chord = [](int a, int b) { return Chord{std::min(a, b), std::max(a, b)}; };
    std::array<Chord, 2> fan{chord(pent[q], pent[(q + 2) % 5]), chord(pent[q], pent[(q + 3) % 5])};
    std::array<Chord, 2> glued = c.glued;
    std::sort(fan.begin(), fan.end());
    std::sort(glued.begin(), glued.end());
    if (fan != glued) continue;

    const auto mark = removed.size();
    removed.insert(removed.end(), glued.begin(), glued.end());
    bool ok = true;
    for (std::size_t s = 0; ok && s + 1 < pent.size(); ++s) {
      ok = group_pentagons(walker, poly, pent[s], pent[s + 1], removed);
    }
    if (ok) return true;
    removed.resize(mark);
  }
  return false;
}

inline void require_grouped(const FaceWalker& walker, const ColoredPolygon& poly, int i, int j,
                            std::vector<Chord>& removed) {
  if (!group_pentagons(walker, poly, i, j, removed))
    throw ContractError("triangles below {" + std::to_string(i) + "," + std::to_string(j) +
                        "} do not group into pentagons");
}

inline std::vector<int> singleton_positions(const std::vector<int>& face,
                                            const ColoredPolygon& poly) {
  std::vector<int> out;
  for (std::size_t s = 0; s < face.size(); ++s) {
    int same = 0;
    for (int v : face) same += poly.color(v) == poly.color(face[s]) ? 1 : 0;
    if (same == 1) out.push_back(static_cast<int>(s));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Two colors: proper triangulations -> quadrangulations (2^n to 1)
// ---------------------------------------------------------------------------

/// Removes the monochromatic edge of every triangle of a proper
/// triangulation of the cyclically 2-colored polygon with an even number
/// of triangles.
inline Partition proper_tri_to_quad(const Partition& p, const ColoredPolygon& poly) {
  if (!detail::colored_as(poly, scheme::Cyclic{2}))
    throw ContractError("proper_tri_to_quad needs the cyclic 2-coloring");
  if ((p.num_vertices() - 2) % 2 != 0)
    throw ContractError("proper_tri_to_quad needs an even number of triangles");
  detail::require_proper_triangulation(p, poly);
  auto out = detail::remove_monochromatic_chords(p, poly);
  if (!is_k_partition(out, 4)) throw ContractError("result is not a quadrangulation");
  return out;
}

/// All proper triangulations mapping onto the quadrangulation `p`: one of
/// the two diagonals in every quadrilateral.
inline std::vector<Partition> quad_to_proper_tris(const Partition& p,
                                                  const ColoredPolygon& poly) {
  if (!detail::colored_as(poly, scheme::Cyclic{2}))
    throw ContractError("quad_to_proper_tris needs the cyclic 2-coloring");
  detail::check_same_polygon(p, poly);
  if (!is_k_partition(p, 4)) throw ContractError("quad_to_proper_tris needs a 4-partition");
  std::vector<std::vector<std::vector<Chord>>> options;
  for (const auto& r : regions(p)) {
    const auto& v = r.vertices;
    for (std::size_t s = 0; s < 4; ++s) {
      if (poly.color(v[s]) == poly.color(v[(s + 1) % 4]))
        throw ContractError("quadrilateral colors do not alternate");
    }
    options.push_back({{{v[0], v[2]}}, {{v[1], v[3]}}});
  }
  return detail::expand_choices(p, options);
}

// ---------------------------------------------------------------------------
// Three colors: proper triangulations <-> pentagon partitions
// ---------------------------------------------------------------------------

/// Groups the triangles of a proper triangulation of the cyclically
/// 3-colored (3n+2)-gon into pentagons, starting from the top edge.
inline Partition tri3_to_blocks(const Partition& p, const ColoredPolygon& poly) {
  if (!detail::colored_as(poly, scheme::Cyclic{3}))
    throw ContractError("tri3_to_blocks needs the cyclic 3-coloring");
  if ((p.num_vertices() - 2) % 3 != 0)
    throw ContractError("tri3_to_blocks needs num_vertices = 3n + 2");
  detail::require_proper_triangulation(p, poly);
  if (p.num_vertices() == 2) return p;
  std::vector<Chord> removed;
  detail::require_grouped(detail::FaceWalker(p), poly, 0, p.num_vertices() - 1, removed);
  return detail::without(p, removed);
}

/// Inverse of the 3-color block maps: triangles are kept, a quadrilateral
/// gets the diagonal joining its two once-used colors, a pentagon gets the
/// two chords from its once-used color.
inline Partition blocks_to_tri3(const Partition& p, const ColoredPolygon& poly) {
  detail::check_same_polygon(p, poly);
  if (poly.num_colors() != 3) throw ContractError("blocks_to_tri3 needs 3 colors");
  std::vector<Chord> chords = p.chords();
  for (const auto& r : regions(p)) {
    const auto& v = r.vertices;
    const auto single = detail::singleton_positions(v, poly);
    if (v.size() == 3) continue;
    if (v.size() == 4) {
      if (single.size() != 2 || single[1] - single[0] != 2)
        throw ContractError("quadrilateral has no diagonal between once-used colors");
      chords.emplace_back(v[static_cast<std::size_t>(single[0])],
                          v[static_cast<std::size_t>(single[1])]);
    } else if (v.size() == 5) {
      if (single.size() != 1) throw ContractError("pentagon has no unique once-used color");
      const auto s = static_cast<std::size_t>(single[0]);
      chords.emplace_back(v[s], v[(s + 2) % 5]);
      chords.emplace_back(v[s], v[(s + 3) % 5]);
    } else {
      throw ContractError("blocks_to_tri3: unexpected region size " +
                          std::to_string(v.size()));
    }
  }
  Partition out(p.num_vertices(), std::move(chords));
  detail::require_proper_triangulation(out, poly);
  return out;
}

// ---------------------------------------------------------------------------
// Rooted variants
// ---------------------------------------------------------------------------

/// Rooted block map for families a and b:
///   a, N = 2n   -> (4,2)    a, N = 2n+1 -> (4,3)
///   b, N = 3n   -> (5,2)    b, N = 3n+1 -> (5,3)   b, N = 3n+2 -> (5,4)
inline Partition rooted_block_map(const Partition& p, const ColoredPolygon& poly,
                                  const SequenceSpec& family) {
  const int n = p.num_vertices();
  const int N = n - 2;
  if (family.family == Family::a) {
    if (!detail::colored_as(poly, scheme::Cyclic{2}))
      throw ParameterError("family a expects the cyclic 2-coloring");
    detail::require_proper_triangulation(p, poly);
    return detail::remove_monochromatic_chords(p, poly);
  }
  if (family.family != Family::b)
    throw ParameterError("rooted_block_map supports families a and b only");
  if (!detail::colored_as(poly, scheme::CyclicAdjusted3{}))
    throw ParameterError("family b expects the adjusted cyclic 3-coloring");
  detail::require_proper_triangulation(p, poly);
  if (n == 2) return p;
  const detail::FaceWalker walker(p);
  std::vector<Chord> removed;
  const auto root = walker.below(0, n - 1);
  const int t = root[1];
  switch (N % 3) {
    case 0:
      detail::require_grouped(walker, poly, 0, n - 1, removed);
      break;
    case 1:
      detail::require_grouped(walker, poly, 0, t, removed);
      detail::require_grouped(walker, poly, t, n - 1, removed);
      break;
    default: {
      if (t < 2) throw ContractError("root triangle has no partner across its first side");
      const auto partner = walker.below(0, t);
      const int a = partner[1];
      removed.emplace_back(0, t);
      const std::array<int, 4> quad{0, a, t, n - 1};
      for (std::size_t s = 0; s + 1 < quad.size(); ++s) {
        detail::require_grouped(walker, poly, quad[s], quad[s + 1], removed);
      }
      break;
    }
  }
  return detail::without(p, removed);
}

/// (K, D) shape produced by rooted_block_map for a family and polygon size.
inline std::pair<int, int> rooted_block_shape(const SequenceSpec& family, int num_vertices) {
  const int N = num_vertices - 2;
  if (family.family == Family::a) return {4, N % 2 == 0 ? 2 : 3};
  if (family.family == Family::b) return {5, N % 3 + 2};
  throw ParameterError("rooted block shapes exist for families a and b only");
}

/// Preimage of a rooted block partition under rooted_block_map.
inline std::vector<Partition> rooted_block_fiber(const Partition& p, const ColoredPolygon& poly,
                                                 const SequenceSpec& family) {
  detail::check_same_polygon(p, poly);
  const auto [K, D] = rooted_block_shape(family, p.num_vertices());
  if (!is_kd_partition(p, K, D))
    throw ContractError("rooted_block_fiber: input is not a (" + std::to_string(K) + "," +
                        std::to_string(D) + ")-partition");
  if (family.family == Family::b) return {blocks_to_tri3(p, poly)};
  if (!detail::colored_as(poly, scheme::Cyclic{2}))
    throw ParameterError("family a expects the cyclic 2-coloring");
  std::vector<std::vector<std::vector<Chord>>> options;
  for (const auto& r : regions(p)) {
    const auto& v = r.vertices;
    if (v.size() == 3) continue;
    options.push_back({{{v[0], v[2]}}, {{v[1], v[3]}}});
  }
  auto all = detail::expand_choices(p, options);
  std::vector<Partition> out;
  for (auto& q : all) {
    if (is_proper(q, poly, 3)) out.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// c = k >= 4: proper k-partitions <-> ((k-2)k+2)-gon superblocks
// ---------------------------------------------------------------------------

inline int superblock_size(int k) { return (k - 2) * k + 2; }

namespace detail {

// Glue the k-gon below (i, j) with the k-1 k-gons across its other sides.
inline void glue_superblock(const FaceWalker& walker, int i, int j, int k,
                            std::vector<Chord>& removed) {
  const auto top = walker.below(i, j);
  if (static_cast<int>(top.size()) != k) throw ContractError("expected a k-gon below the block edge");
  std::vector<int> block;
  for (std::size_t s = 0; s + 1 < top.size(); ++s) {
    const int a = top[s];
    const int b = top[s + 1];
    if (b - a < 2)
      throw ContractError("k-gon side {" + std::to_string(a) + "," + std::to_string(b) +
                          "} has no neighbor region to glue");
    removed.emplace_back(a, b);
    const auto nb = walker.below(a, b);
    if (static_cast<int>(nb.size()) != k) throw ContractError("neighbor is not a k-gon");
    block.insert(block.end(), nb.begin(), nb.end() - 1);
  }
  block.push_back(j);
  for (std::size_t s = 0; s + 1 < block.size(); ++s) {
    if (block[s + 1] - block[s] >= 2) glue_superblock(walker, block[s], block[s + 1], k, removed);
  }
}

}  // namespace detail

/// Glues a proper k-partition of the cyclically k-colored polygon into
/// superblocks. For N = (k-2)kn every region ends up in a superblock; for
/// N = (k-2)(kn+1) the root k-gon stays on its own.
inline Partition kpartition_to_superblocks(const Partition& p, const ColoredPolygon& poly, int k) {
  if (k < 4) throw ParameterError("superblock map needs k >= 4");
  if (!detail::colored_as(poly, scheme::Cyclic{k}))
    throw ContractError("superblock map needs the cyclic k-coloring");
  detail::check_same_polygon(p, poly);
  if (!is_k_partition(p, k) || !is_proper(p, poly, k))
    throw ContractError("superblock map needs a proper k-partition");
  const int n = p.num_vertices();
  const int N = n - 2;
  if (N == 0) return p;
  if (N % (k - 2) != 0) throw ContractError("no k-partition exists");
  const int M = N / (k - 2);
  const detail::FaceWalker walker(p);
  std::vector<Chord> removed;
  if (M % k == 0) {
    detail::glue_superblock(walker, 0, n - 1, k, removed);
  } else if (M % k == 1) {
    const auto root = walker.below(0, n - 1);
    for (std::size_t s = 0; s + 1 < root.size(); ++s) {
      if (root[s + 1] - root[s] >= 2)
        detail::glue_superblock(walker, root[s], root[s + 1], k, removed);
    }
  } else {
    throw ContractError("N/(k-2) mod k must be 0 or 1");
  }
  return detail::without(p, removed);
}

/// Inverse: each superblock receives the chain of chords between its
/// vertices at local positions 0, k-1, 2(k-1), ..., (k-1)^2.
inline Partition superblocks_to_kpartition(const Partition& p, const ColoredPolygon& poly, int k) {
  if (k < 4) throw ParameterError("superblock map needs k >= 4");
  detail::check_same_polygon(p, poly);
  const int m = superblock_size(k);
  std::vector<Chord> chords = p.chords();
  for (const auto& r : regions(p)) {
    const auto& v = r.vertices;
    const int size = static_cast<int>(v.size());
    if (size == k && r.contains_root_edge(p.num_vertices())) continue;
    if (size != m)
      throw ContractError("superblock_to_kpartition: unexpected region size " +
                          std::to_string(size));
    for (int s = 0; s + 1 < k; ++s) {
      chords.emplace_back(v[static_cast<std::size_t>(s * (k - 1))],
                          v[static_cast<std::size_t>((s + 1) * (k - 1))]);
    }
  }
  Partition out(p.num_vertices(), std::move(chords));
  if (!is_k_partition(out, k) || !is_proper(out, poly, k))
    throw ContractError("superblock refinement is not a proper k-partition");
  return out;
}

// ---------------------------------------------------------------------------
// Proper binary trees
// ---------------------------------------------------------------------------

/// At every internal vertex, one of the two child subtrees has an edge
/// count divisible by four.
inline bool is_proper_tree(const KAryTree& t) {
  if (t.arity() != 2) throw ParameterError("is_proper_tree needs a binary tree");
  for (std::size_t pos = 0; pos < t.size(); ++pos) {
    if (t.is_leaf(pos)) continue;
    const auto ch = t.children(pos);
    if (t.subtree_edges(ch[0]) % 4 != 0 && t.subtree_edges(ch[1]) % 4 != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fibered maps
// ---------------------------------------------------------------------------

struct FiberedMap {
  std::function<Partition(const Partition&)> forward;
  std::function<std::vector<Partition>(const Partition&)> fiber;
  std::function<BigCount(const Partition&)> declared_fiber_size;
};

struct FiberReport {
  bool ok = true;
  std::string failure;
};

/// Checks x in fiber(forward(x)) over the domain, declared fiber sizes and
/// disjointness over the codomain, and that the fibers cover the domain.
inline FiberReport verify_fibered_map(const FiberedMap& map, const std::vector<Partition>& domain,
                                      const std::vector<Partition>& codomain) {
  FiberReport rep;
  auto fail = [&](std::string why) {
    if (rep.ok) rep.failure = std::move(why);
    rep.ok = false;
  };
  for (const auto& x : domain) {
    const auto fib = map.fiber(map.forward(x));
    if (std::find(fib.begin(), fib.end(), x) == fib.end()) fail("x not in fiber(forward(x))");
  }
  std::set<Partition> seen;
  std::size_t total = 0;
  for (const auto& y : codomain) {
    const auto fib = map.fiber(y);
    if (BigCount(fib.size()) != map.declared_fiber_size(y)) fail("fiber size mismatch");
    for (const auto& x : fib) {
      if (!seen.insert(x).second) fail("fibers overlap");
      if (map.forward(x) != y) fail("fiber element maps elsewhere");
    }
    total += fib.size();
  }
  std::set<Partition> dom(domain.begin(), domain.end());
  if (seen != dom || total != domain.size()) fail("fibers do not cover the domain exactly");
  return rep;
}

/// proper_tri_to_quad / quad_to_proper_tris packaged as a 2^n-to-1 map.
inline FiberedMap tri_to_quad_map(const ColoredPolygon& poly) {
  return FiberedMap{
      [poly](const Partition& p) { return proper_tri_to_quad(p, poly); },
      [poly](const Partition& q) { return quad_to_proper_tris(q, poly); },
      [](const Partition& q) { return pow2(static_cast<unsigned>((q.num_vertices() - 2) / 2)); },
  };
}

}  // namespace ppart
