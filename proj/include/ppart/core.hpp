#pragma once

// Colored convex polygons, noncrossing partitions and their regions.
//
// Vertex 0 is the left endpoint of the top edge and indices increase
// counterclockwise, so the top (root) edge is always (0, n-1). A region's
// vertices listed in increasing index order are therefore in
// counterclockwise order, starting at the left endpoint of the edge that
// separates it from the root side.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "ppart/errors.hpp"

namespace ppart {

using Color = int;
using Chord = std::pair<int, int>;

class ColoredPolygon {
 public:
  ColoredPolygon(std::vector<Color> colors, int num_colors)
      : colors_(std::move(colors)), num_colors_(num_colors) {
    if (colors_.size() < 2)
      throw ParameterError("polygon needs at least 2 vertices");
    if (num_colors_ < 1 || num_colors_ > 64)
      throw ParameterError("number of colors must be in 1..64");
    for (Color c : colors_) {
      if (c < 1 || c > num_colors_)
        throw ParameterError("color " + std::to_string(c) + " outside 1.." +
                             std::to_string(num_colors_));
    }
  }

  int num_vertices() const { return static_cast<int>(colors_.size()); }
  int num_colors() const { return num_colors_; }
  Color color(int v) const { return colors_.at(static_cast<std::size_t>(v)); }
  const std::vector<Color>& colors() const { return colors_; }

  /// Bit (c-1) set for every color in 1..c.
  std::uint64_t full_color_mask() const {
    return num_colors_ == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << num_colors_) - 1;
  }
  std::uint64_t color_bit(int v) const {
    return std::uint64_t{1} << (color(v) - 1);
  }

  friend bool operator==(const ColoredPolygon&, const ColoredPolygon&) = default;

 private:
  std::vector<Color> colors_;
  int num_colors_;
};

namespace scheme {
struct Cyclic {
  int num_colors;
};
/// Cyclic with 3 colors, except the last vertex is recolored 2 when the
/// vertex count is 1 mod 3 (otherwise the top edge would read 1,1).
struct CyclicAdjusted3 {};
struct Blocks {
  int ones;
  int twos;
};
struct Explicit {
  std::vector<Color> colors;
};
}  // namespace scheme

using ColoringScheme = std::variant<scheme::Cyclic, scheme::CyclicAdjusted3,
                                    scheme::Blocks, scheme::Explicit>;

inline ColoredPolygon make_coloring(const ColoringScheme& s, int num_vertices) {
  if (num_vertices < 2) throw ParameterError("num_vertices must be >= 2");
  const auto n = static_cast<std::size_t>(num_vertices);
  std::vector<Color> colors(n);
  return std::visit(
      [&](const auto& sc) -> ColoredPolygon {
        using S = std::decay_t<decltype(sc)>;
        if constexpr (std::is_same_v<S, scheme::Cyclic>) {
          if (sc.num_colors < 1) throw ParameterError("cyclic scheme needs c >= 1");
          for (std::size_t i = 0; i < n; ++i)
            colors[i] = static_cast<Color>(i % static_cast<std::size_t>(sc.num_colors)) + 1;
          return ColoredPolygon(std::move(colors), sc.num_colors);
        } else if constexpr (std::is_same_v<S, scheme::CyclicAdjusted3>) {
          for (std::size_t i = 0; i < n; ++i) colors[i] = static_cast<Color>(i % 3) + 1;
          if (n % 3 == 1) colors.back() = 2;
          return ColoredPolygon(std::move(colors), 3);
        } else if constexpr (std::is_same_v<S, scheme::Blocks>) {
          if (sc.ones < 1 || sc.twos < 1 || sc.ones + sc.twos != num_vertices)
            throw ParameterError("blocks scheme needs m,n >= 1 and m+n = num_vertices");
          std::fill(colors.begin(), colors.begin() + sc.ones, 1);
          std::fill(colors.begin() + sc.ones, colors.end(), 2);
          return ColoredPolygon(std::move(colors), 2);
        } else {
          if (sc.colors.size() != n)
            throw ParameterError("explicit coloring length differs from num_vertices");
          const Color top = *std::max_element(sc.colors.begin(), sc.colors.end());
          return ColoredPolygon(sc.colors, top);
        }
      },
      s);
}

/// A set of pairwise noncrossing chords of a convex polygon, stored as
/// sorted (min, max) pairs.
class Partition {
 public:
  explicit Partition(int num_vertices, std::vector<Chord> chords = {})
      : n_(num_vertices), chords_(std::move(chords)) {
    if (n_ < 2) throw InvalidPartition("partition needs at least 2 vertices");
    for (auto& [a, b] : chords_) {
      if (a > b) std::swap(a, b);
      if (a < 0 || b >= n_)
        throw InvalidPartition("chord endpoint out of range");
      if (b - a < 2 || (a == 0 && b == n_ - 1))
        throw InvalidPartition("chord {" + std::to_string(a) + "," +
                               std::to_string(b) + "} joins adjacent vertices");
    }
    std::sort(chords_.begin(), chords_.end());
    chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
    for (std::size_t x = 0; x < chords_.size(); ++x) {
      for (std::size_t y = x + 1; y < chords_.size(); ++y) {
        const auto [a, b] = chords_[x];
        const auto [c, d] = chords_[y];
        // a <= c by sorting
        if (a < c && c < b && b < d)
          throw InvalidPartition("chords {" + std::to_string(a) + "," + std::to_string(b) +
                                 "} and {" + std::to_string(c) + "," +
                                 std::to_string(d) + "} cross");
      }
    }
  }

  int num_vertices() const { return n_; }
  const std::vector<Chord>& chords() const { return chords_; }
  std::size_t num_chords() const { return chords_.size(); }

  bool has_chord(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(chords_.begin(), chords_.end(), Chord{a, b});
  }

  /// True for polygon sides, the root edge and chords.
  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return b - a == 1 || (a == 0 && b == n_ - 1) || has_chord(a, b);
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  int n_;
  std::vector<Chord> chords_;
};

/// A bounded face, vertices in counterclockwise order starting at the
/// smallest index.
struct Region {
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains_root_edge(int num_vertices) const {
    return vertices.front() == 0 && vertices.back() == num_vertices - 1;
  }
  friend bool operator==(const Region&, const Region&) = default;
  friend auto operator<=>(const Region&, const Region&) = default;
};

namespace detail {

// Face walker over a partition: upper[v] lists the neighbors w > v
// (including v+1), sorted ascending.
class FaceWalker {
 public:
  explicit FaceWalker(const Partition& p)
      : n_(p.num_vertices()), upper_(static_cast<std::size_t>(p.num_vertices())) {
    for (int v = 0; v + 1 < n_; ++v) upper_[static_cast<std::size_t>(v)].push_back(v + 1);
    for (const auto& [a, b] : p.chords()) upper_[static_cast<std::size_t>(a)].push_back(b);
    for (auto& u : upper_) std::sort(u.begin(), u.end());
  }

  /// Vertices of the face lying on the inner side of edge (i, j), i < j-1.
  std::vector<int> below(int i, int j) const {
    std::vector<int> face{i};
    int cur = i;
    while (cur != j) {
      const auto& up = upper_[static_cast<std::size_t>(cur)];
      int next = -1;
      for (auto it = up.rbegin(); it != up.rend(); ++it) {
        if (*it <= j && !(cur == i && *it == j)) {
          next = *it;
          break;
        }
      }
      cur = next;
      face.push_back(cur);
    }
    return face;
  }

  /// Preorder visit of faces starting at the root edge; the callback
  /// receives the face and the parent edge it hangs from.
  template <typename Fn>
  void preorder(Fn&& fn) const {
    if (n_ >= 3) visit(0, n_ - 1, fn);
  }

 private:
  template <typename Fn>
  void visit(int i, int j, Fn& fn) const {
    auto face = below(i, j);
    fn(face, Chord{i, j});
    for (std::size_t s = 0; s + 1 < face.size(); ++s) {
      if (face[s + 1] - face[s] >= 2) visit(face[s], face[s + 1], fn);
    }
  }

  int n_;
  std::vector<std::vector<int>> upper_;
};

}  // namespace detail

/// All bounded faces, sorted lexicographically by vertex list.
inline std::vector<Region> regions(const Partition& p) {
  std::vector<Region> out;
  detail::FaceWalker(p).preorder(
      [&](const std::vector<int>& face, Chord) { out.push_back(Region{face}); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Regions in root-first preorder: the root face, then recursively the
/// sub-polygons hanging from its edges, left to right.
inline std::vector<Region> regions_preorder(const Partition& p) {
  std::vector<Region> out;
  detail::FaceWalker(p).preorder(
      [&](const std::vector<int>& face, Chord) { out.push_back(Region{face}); });
  return out;
}

/// Ordering key matching the enumerator's generation order.
inline std::vector<std::vector<int>> decomposition_key(const Partition& p) {
  std::vector<std::vector<int>> key;
  detail::FaceWalker(p).preorder(
      [&](const std::vector<int>& face, Chord) { key.push_back(face); });
  return key;
}

inline Region root_region(const Partition& p) {
  if (p.num_vertices() < 3) throw ContractError("a single edge has no regions");
  return Region{detail::FaceWalker(p).below(0, p.num_vertices() - 1)};
}

inline bool is_k_partition(const Partition& p, int k) {
  bool ok = true;
  detail::FaceWalker(p).preorder([&](const std::vector<int>& face, Chord) {
    if (static_cast<int>(face.size()) != k) ok = false;
  });
  return ok;
}

/// Root region a d-gon, every other region a k-gon. d = 2 means an
/// ordinary k-partition.
inline bool is_kd_partition(const Partition& p, int k, int d) {
  if (d == 2) return is_k_partition(p, k);
  if (p.num_vertices() < 3) return false;
  bool ok = true;
  const int n = p.num_vertices();
  detail::FaceWalker(p).preorder([&](const std::vector<int>& face, Chord parent) {
    const bool root = parent == Chord{0, n - 1};
    if (static_cast<int>(face.size()) != (root ? d : k)) ok = false;
  });
  return ok;
}

namespace detail {
inline void check_same_polygon(const Partition& p, const ColoredPolygon& poly) {
  if (poly.num_vertices() != p.num_vertices())
    throw ContractError("polygon and partition sizes differ");
}

inline std::uint64_t color_mask(const std::vector<int>& vs, const ColoredPolygon& poly) {
  std::uint64_t m = 0;
  for (int v : vs) m |= poly.color_bit(v);
  return m;
}
}  // namespace detail

/// Every region carries all colors. Requires a k-partition.
inline bool is_proper(const Partition& p, const ColoredPolygon& poly, int k) {
  detail::check_same_polygon(p, poly);
  if (!is_k_partition(p, k))
    throw ContractError("is_proper requires a " + std::to_string(k) + "-partition");
  bool ok = true;
  const auto full = poly.full_color_mask();
  detail::FaceWalker(p).preorder([&](const std::vector<int>& face, Chord) {
    if (detail::color_mask(face, poly) != full) ok = false;
  });
  return ok;
}

/// Properness check without the k-partition precondition: every region
/// carries all colors, whatever its size.
inline bool all_regions_full_colored(const Partition& p, const ColoredPolygon& poly) {
  detail::check_same_polygon(p, poly);
  bool ok = true;
  const auto full = poly.full_color_mask();
  detail::FaceWalker(p).preorder([&](const std::vector<int>& face, Chord) {
    if (detail::color_mask(face, poly) != full) ok = false;
  });
  return ok;
}

inline bool has_monochromatic_region(const Partition& p, const ColoredPolygon& poly) {
  detail::check_same_polygon(p, poly);
  bool mono = false;
  detail::FaceWalker(p).preorder([&](const std::vector<int>& face, Chord) {
    if (std::popcount(detail::color_mask(face, poly)) == 1) mono = true;
  });
  return mono;
}

/// Colors of the region read counterclockwise from its anchor vertex.
inline std::vector<Color> standard_reading(const Region& r, const ColoredPolygon& poly) {
  std::vector<Color> out;
  out.reserve(r.vertices.size());
  for (int v : r.vertices) {
    if (v < 0 || v >= poly.num_vertices()) throw ContractError("region vertex out of range");
    out.push_back(poly.color(v));
  }
  return out;
}

}  // namespace ppart
