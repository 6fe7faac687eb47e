#pragma once

// Brute-force generation of partitions and k-ary trees.
//
// Partitions are produced by decomposing on the root edge: the face below
// (i, j) is chosen by its interior vertex tuple in lexicographic order,
// then the sub-polygons hanging off its sides are filled left to right.
// The resulting order is increasing in decomposition_key().

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ppart/core.hpp"
#include "ppart/counting.hpp"
#include "ppart/generator.hpp"
#include "ppart/tree.hpp"

namespace ppart {

struct EnumerationLimits {
  std::uint64_t max_items = 10'000'000;
};

namespace detail {

inline void guard(const BigCount& projected, const EnumerationLimits& limits,
                  const std::string& what) {
  if (projected > limits.max_items)
    throw ResourceError(what + ": projected " + projected.str() + " items exceeds limit " +
                        std::to_string(limits.max_items));
}

// Increasing tuples i < t_1 < ... < t_s < j in lexicographic order such
// that every gap (a, b) leaves a sub-polygon whose size fits `region`-gons.
inline std::vector<std::vector<int>> face_tuples(int i, int j, int interior, int region) {
  std::vector<std::vector<int>> out;
  std::vector<int> t;
  auto fits = [region](int a, int b) { return b - a == 1 || (b - a - 1) % (region - 2) == 0; };
  auto rec = [&](auto&& self, int prev, int left) -> void {
    if (left == 0) {
      if (fits(prev, j)) out.push_back(t);
      return;
    }
    for (int v = prev + 1; v <= j - left; ++v) {
      if (!fits(prev, v)) continue;
      t.push_back(v);
      self(self, v, left - 1);
      t.pop_back();
    }
  };
  rec(rec, i, interior);
  return out;
}

// Chords strictly inside the sub-polygon i..j for every `region`-partition
// of it.
inline Generator<std::vector<Chord>> sub_partitions(int i, int j, int region);

inline Generator<std::vector<Chord>> fill_segments(std::vector<int> face, std::size_t idx,
                                                   std::vector<Chord> acc, int region) {
  if (idx + 1 >= face.size()) {
    co_yield acc;
    co_return;
  }
  const int a = face[idx];
  const int b = face[idx + 1];
  if (b - a == 1) {
    for (auto&& rest : fill_segments(face, idx + 1, acc, region)) co_yield rest;
    co_return;
  }
  for (auto&& inner : sub_partitions(a, b, region)) {
    std::vector<Chord> next = acc;
    next.emplace_back(a, b);
    next.insert(next.end(), inner.begin(), inner.end());
    for (auto&& rest : fill_segments(face, idx + 1, std::move(next), region)) co_yield rest;
  }
}

inline Generator<std::vector<Chord>> faces_below(int i, int j, int face_size, int region) {
  for (auto& t : face_tuples(i, j, face_size - 2, region)) {
    std::vector<int> face;
    face.reserve(t.size() + 2);
    face.push_back(i);
    face.insert(face.end(), t.begin(), t.end());
    face.push_back(j);
    for (auto&& chords : fill_segments(std::move(face), 0, {}, region)) co_yield chords;
  }
}

inline Generator<std::vector<Chord>> sub_partitions(int i, int j, int region) {
  if (j - i == 1) {
    co_yield std::vector<Chord>{};
    co_return;
  }
  if ((j - i - 1) % (region - 2) != 0) co_return;
  for (auto&& chords : faces_below(i, j, region, region)) co_yield chords;
}

inline Generator<Partition> wrap(int n, Generator<std::vector<Chord>> chords) {
  for (auto&& c : chords) co_yield Partition(n, c);
}

inline Generator<Partition> filter_proper(Generator<Partition> all, ColoredPolygon poly,
                                          int k) {
  for (auto&& p : all) {
    if (is_proper(p, poly, k)) co_yield p;
  }
}

inline Generator<std::string> tree_codes(int arity, int internal);

inline Generator<std::string> tree_children(int arity, int slots, int internal,
                                            std::string acc) {
  if (slots == 1) {
    for (auto&& code : tree_codes(arity, internal)) co_yield acc + code;
    co_return;
  }
  for (int here = 0; here <= internal; ++here) {
    for (auto&& code : tree_codes(arity, here)) {
      for (auto&& rest : tree_children(arity, slots - 1, internal - here, acc + code))
        co_yield rest;
    }
  }
}

inline Generator<std::string> tree_codes(int arity, int internal) {
  if (internal == 0) {
    co_yield std::string("L");
    co_return;
  }
  for (auto&& code : tree_children(arity, arity, internal - 1, "I")) co_yield code;
}

inline Generator<KAryTree> wrap_trees(int arity, Generator<std::string> codes) {
  for (auto&& c : codes) co_yield KAryTree(arity, c);
}

}  // namespace detail

/// Number of k-partitions of an n-gon, for guards and sizing.
inline BigCount k_partition_total(int num_vertices, int k) {
  if ((num_vertices - 2) % (k - 2) != 0) return 0;
  return catalan_k((num_vertices - 2) / (k - 2), k - 1);
}

inline Generator<Partition> enumerate_k_partitions(int num_vertices, int k,
                                                   EnumerationLimits limits = {}) {
  if (k < 3) throw ParameterError("enumerate_k_partitions needs k >= 3");
  if (num_vertices < 2) throw ParameterError("num_vertices must be >= 2");
  detail::guard(k_partition_total(num_vertices, k), limits, "enumerate_k_partitions");
  return detail::wrap(num_vertices, detail::sub_partitions(0, num_vertices - 1, k));
}

/// Proper k-partitions, filtered from the full enumeration.
inline Generator<Partition> enumerate_proper(const ColoredPolygon& poly, int k,
                                             EnumerationLimits limits = {}) {
  auto all = enumerate_k_partitions(poly.num_vertices(), k, limits);
  return detail::filter_proper(std::move(all), poly, k);
}

/// Partitions with a D-gon root region and K-gons elsewhere.
inline Generator<Partition> enumerate_kd_partitions(int num_vertices, int K, int D,
                                                    EnumerationLimits limits = {}) {
  if (K < 3 || D < 2) throw ParameterError("enumerate_kd_partitions needs K >= 3, D >= 2");
  if (num_vertices < 2) throw ParameterError("num_vertices must be >= 2");
  if (D == 2) return enumerate_k_partitions(num_vertices, K, limits);
  detail::guard(count_kd_partitions(num_vertices, K, D), limits, "enumerate_kd_partitions");
  return detail::wrap(num_vertices, detail::faces_below(0, num_vertices - 1, D, K));
}

inline Generator<KAryTree> enumerate_kary_trees(int arity, int internal,
                                                EnumerationLimits limits = {}) {
  if (arity < 2 || internal < 0)
    throw ParameterError("enumerate_kary_trees needs k >= 2, n >= 0");
  detail::guard(catalan_k(internal, arity), limits, "enumerate_kary_trees");
  return detail::wrap_trees(arity, detail::tree_codes(arity, internal));
}

template <typename T>
std::vector<T> collect(Generator<T> gen) {
  std::vector<T> out;
  for (auto&& x : gen) out.push_back(x);
  return out;
}

template <typename T>
std::uint64_t count_items(Generator<T> gen) {
  std::uint64_t n = 0;
  for ([[maybe_unused]] auto&& x : gen) ++n;
  return n;
}

/// Proper k-partitions counted by exhaustive enumeration.
inline BigCount count_proper_brute(const ColoredPolygon& poly, int k,
                                   EnumerationLimits limits = {}) {
  return BigCount(count_items(enumerate_proper(poly, k, limits)));
}

/// Triangulations of the cyclically 3-colored (N+2)-gon in which no
/// triangle is monochromatic.
inline BigCount b_prime_bruteforce(int N, EnumerationLimits limits = {}) {
  if (N < 0) throw ParameterError("b_prime_bruteforce needs N >= 0");
  const auto poly = make_coloring(scheme::Cyclic{3}, N + 2);
  std::uint64_t count = 0;
  for (auto&& p : enumerate_k_partitions(N + 2, 3, limits)) {
    if (!has_monochromatic_region(p, poly)) ++count;
  }
  return count;
}

}  // namespace ppart
