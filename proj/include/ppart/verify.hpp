#pragma once

// Oracle-agreement suites: every check compares two independent routes to
// the same answer (closed form, interval DP, exhaustive enumeration,
// constructive maps) on all instances up to a size bound.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ppart/bijections.hpp"
#include "ppart/enumerate.hpp"
#include "ppart/families.hpp"
#include "ppart/flips.hpp"

namespace ppart {

struct CheckResult {
  std::string suite;
  std::string name;
  bool ok = true;
  std::string detail;
};

namespace detail {

inline CheckResult run_check(const std::string& suite, const std::string& name,
                             const std::function<std::string()>& body) {
  CheckResult r{suite, name, true, ""};
  try {
    r.detail = body();
    r.ok = r.detail.empty();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

inline std::string engines_agree(const SequenceSpec& spec, int index) {
  const auto f = family_count(spec, index, Engine::formula);
  const auto d = family_count(spec, index, Engine::dp);
  const auto b = family_count(spec, index, Engine::brute);
  if (f == d && d == b) return "";
  return "index " + std::to_string(index) + ": formula " + f.str() + ", dp " + d.str() +
         ", brute " + b.str();
}

}  // namespace detail

/// formula = dp = brute for families a, b, c (k = 4), d and the (k,d)-Catalan
/// numbers on polygons with at most max_N + 2 vertices.
inline std::vector<CheckResult> verify_counts(int max_N) {
  std::vector<CheckResult> out;
  const auto sweep = [&](const std::string& name, SequenceSpec spec, int lo, int hi) {
    out.push_back(detail::run_check("counts", name, [=] {
      for (int i = lo; i <= hi; ++i) {
        auto why = detail::engines_agree(spec, i);
        if (!why.empty()) return why;
      }
      return std::string();
    }));
  };
  sweep("a", SequenceSpec{Family::a}, 0, max_N);
  sweep("b", SequenceSpec{Family::b}, 0, max_N);
  sweep("c k=4", SequenceSpec{Family::c_k, 4}, 0, max_N);
  for (int m = 1; m <= max_N + 1; ++m) {
    sweep("d m=" + std::to_string(m), SequenceSpec{Family::d_blocks, 0, 0, m}, 1,
          max_N + 2 - m);
  }
  for (int K = 3; K <= 5; ++K) {
    for (int D = 2; D <= 4; ++D) {
      // vertices n(K-2) + D <= max_N + 2
      const int top = (max_N + 2 - D) / (K - 2);
      if (top < 0) continue;
      sweep("catalan_kd K=" + std::to_string(K) + " D=" + std::to_string(D),
            SequenceSpec{Family::catalan_kd, K - 1, D - 1}, 0, top);
    }
  }
  return out;
}

/// Recursions satisfied by the closed forms.
inline std::vector<CheckResult> verify_recursions(int max_N) {
  std::vector<CheckResult> out;
  out.push_back(detail::run_check("recursions", "a", [max_N] {
    for (int n = 1; 2 * n + 1 <= std::max(max_N, 3); ++n) {
      BigCount odd = 0;
      for (int i = 0; i <= n; ++i) odd += a_formula(2 * i) * a_formula(2 * n - 2 * i);
      if (odd != a_formula(2 * n + 1)) return "odd recursion fails at n=" + std::to_string(n);
      BigCount even = 0;
      for (int i = 0; i <= 2 * n - 1; ++i) even += a_formula(i) * a_formula(2 * n - 1 - i);
      if (even != a_formula(2 * n)) return "even recursion fails at n=" + std::to_string(n);
    }
    return std::string();
  }));
  out.push_back(detail::run_check("recursions", "d", [max_N] {
    for (int m = 2; m <= max_N; ++m)
      for (int n = 2; n <= max_N; ++n)
        if (d_formula(m, n) != d_formula(m - 1, n) + d_formula(m, n - 1))
          return "fails at m=" + std::to_string(m) + " n=" + std::to_string(n);
    return std::string();
  }));
  return out;
}

inline std::vector<CheckResult> verify_bijections(int max_N) {
  std::vector<CheckResult> out;
  out.push_back(detail::run_check("bijections", "tree round trip", [max_N] {
    for (int arity = 2; arity <= 4; ++arity) {
      for (int v = 2; v <= max_N + 2; v += arity - 1) {
        for (auto&& p : enumerate_k_partitions(v, arity + 1)) {
          if (tree_to_partition(partition_to_tree(p, arity), v) != p)
            return "partition " + serialize(p) + " does not round-trip";
        }
      }
    }
    return std::string();
  }));
  out.push_back(detail::run_check("bijections", "tri_to_quad fibers", [max_N] {
    for (int v = 2; v <= max_N + 2; v += 2) {
      const auto poly = make_coloring(scheme::Cyclic{2}, v);
      const auto rep = verify_fibered_map(tri_to_quad_map(poly), collect(enumerate_proper(poly, 3)),
                                          collect(enumerate_k_partitions(v, 4)));
      if (!rep.ok) return std::to_string(v) + "-gon: " + rep.failure;
    }
    return std::string();
  }));
  out.push_back(detail::run_check("bijections", "tri3 blocks", [max_N] {
    for (int v = 2; v <= max_N + 2; v += 3) {
      const auto poly = make_coloring(scheme::Cyclic{3}, v);
      std::set<Partition> images;
      for (auto&& t : enumerate_proper(poly, 3)) {
        const auto b = tri3_to_blocks(t, poly);
        if (blocks_to_tri3(b, poly) != t) return "no round trip for " + serialize(t);
        images.insert(b);
      }
      if (BigCount(images.size()) != k_partition_total(v, 5))
        return std::to_string(v) + "-gon: image is not all pentagon partitions";
    }
    return std::string();
  }));
  out.push_back(detail::run_check("bijections", "proper trees", [max_N] {
    for (int v = 2; v <= max_N + 2; ++v) {
      const auto poly = make_coloring(scheme::Cyclic{2}, v);
      for (auto&& p : enumerate_k_partitions(v, 3)) {
        if (is_proper_tree(partition_to_tree(p, 2)) != is_proper(p, poly, 3))
          return "disagreement at " + serialize(p);
      }
    }
    return std::string();
  }));
  return out;
}

inline std::vector<CheckResult> verify_flips(int max_N) {
  std::vector<CheckResult> out;
  out.push_back(detail::run_check("flips", "tree flip graphs connected", [max_N] {
    for (int k = 2; k <= 4; ++k) {
      for (int n = 1; n <= std::min(max_N, 5); ++n) {
        if (components(build_tree_flip_graph(enumerate_kary_trees(k, n))).size() != 1)
          return "disconnected at k=" + std::to_string(k) + " n=" + std::to_string(n);
      }
    }
    return std::string();
  }));
  out.push_back(detail::run_check("flips", "comb sequences", [max_N] {
    for (int k = 2; k <= 4; ++k) {
      for (int n = 1; n <= std::min(max_N, 5); ++n) {
        for (auto&& t : enumerate_kary_trees(k, n)) {
          const auto path = replay(t, comb_sequence(t));
          if (path.back() != KAryTree::left_comb(k, n)) return std::string("does not reach the comb");
          for (std::size_t s = 1; s < path.size(); ++s)
            if (left_path_length(path[s]) <= left_path_length(path[s - 1]))
              return "left path did not grow from " + t.preorder();
        }
      }
    }
    return std::string();
  }));
  out.push_back(detail::run_check("flips", "proper triangulations connected", [max_N] {
    for (int v = 3; v <= max_N + 2; ++v) {
      const auto poly = make_coloring(scheme::Cyclic{2}, v);
      if (components(build_flip_graph(enumerate_proper(poly, 3), 3, poly)).size() != 1)
        return std::to_string(v) + "-gon: proper flip graph disconnected";
    }
    return std::string();
  }));
  return out;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"counts", "recursions", "bijections", "flips"};
  return names;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<CheckResult> run_verify(const std::string& suite, int max_N) {
  if (max_N < 0) throw ParameterError("max-N must be >= 0");
  const std::map<std::string, std::function<std::vector<CheckResult>(int)>> table{
      {"counts", verify_counts},
      {"recursions", verify_recursions},
      {"bijections", verify_bijections},
      {"flips", verify_flips}};
  std::vector<CheckResult> out;
  for (const auto& name : verify_suite_names()) {
    if (suite != "all" && suite != name) continue;
    auto part = table.at(name)(max_N);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (out.empty()) throw ParameterError("unknown suite " + suite);
  return out;
}

}  // namespace ppart
