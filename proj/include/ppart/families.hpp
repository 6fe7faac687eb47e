#pragma once

// Sequence families and the three counting engines behind them.
//
// Index meaning per family:
//   a, b, c, b_prime  N (polygon has N+2 vertices)
//   d                 n, with spec.m leading ones (polygon 1^m 2^n)
//   catalan           n, arity spec.k
//   catalan_kd        n, arity spec.k, root parameter spec.d

#include <optional>
#include <string>

#include "ppart/core.hpp"
#include "ppart/counting.hpp"
#include "ppart/enumerate.hpp"

namespace ppart {

enum class Engine { formula, dp, brute };

inline std::string engine_name(Engine e) {
  switch (e) {
    case Engine::formula: return "formula";
    case Engine::dp: return "dp";
    case Engine::brute: return "brute";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  if (s == "a") return Family::a;
  if (s == "b") return Family::b;
  if (s == "c") return Family::c_k;
  if (s == "d") return Family::d_blocks;
  if (s == "catalan") return Family::catalan_k;
  if (s == "catalan_kd") return Family::catalan_kd;
  if (s == "b_prime") return Family::b_prime;
  return std::nullopt;
}

inline std::optional<Engine> parse_engine(const std::string& s) {
  if (s == "formula") return Engine::formula;
  if (s == "dp") return Engine::dp;
  if (s == "brute") return Engine::brute;
  return std::nullopt;
}

/// Colored polygon and region size of a colored family at `index`.
struct ColoredInstance {
  ColoredPolygon poly;
  int region;
};

inline ColoredInstance colored_instance(const SequenceSpec& spec, int index) {
  if (index < 0) throw ParameterError("index must be >= 0");
  switch (spec.family) {
    case Family::a:
      return {make_coloring(scheme::Cyclic{2}, index + 2), 3};
    case Family::b:
      return {make_coloring(scheme::CyclicAdjusted3{}, index + 2), 3};
    case Family::c_k:
      if (spec.k < 4) throw ParameterError("family c needs k >= 4");
      return {make_coloring(scheme::Cyclic{spec.k}, index + 2), spec.k};
    case Family::d_blocks:
      if (spec.m < 1 || index < 1) throw ParameterError("family d needs m, n >= 1");
      return {make_coloring(scheme::Blocks{spec.m, index}, spec.m + index), 3};
    case Family::b_prime:
      return {make_coloring(scheme::Cyclic{3}, index + 2), 3};
    default:
      throw ParameterError("family " + family_name(spec.family) + " is uncolored");
  }
}

namespace detail {
[[noreturn]] inline void no_engine(const SequenceSpec& spec, Engine e) {
  throw ParameterError("engine " + engine_name(e) + " is not available for family " +
                       family_name(spec.family));
}
}  // namespace detail

inline BigCount family_count(const SequenceSpec& spec, int index, Engine engine,
                             EnumerationLimits limits = {}) {
  if (index < 0) throw ParameterError("index must be >= 0");
  if (spec.family == Family::catalan_k || spec.family == Family::catalan_kd) {
    const int k = spec.k;
    const int d = spec.family == Family::catalan_k ? 1 : spec.d;
    if (k < 2 || d < 1) throw ParameterError("catalan families need k >= 2, d >= 1");
    const int vertices = index * (k - 1) + d + 1;
    switch (engine) {
      case Engine::formula: return catalan_kd(index, k, d);
      case Engine::dp: return count_kd_partitions(vertices, k + 1, d + 1);
      case Engine::brute:
        return BigCount(count_items(enumerate_kd_partitions(vertices, k + 1, d + 1, limits)));
    }
  }
  const auto inst = colored_instance(spec, index);
  switch (engine) {
    case Engine::formula:
      switch (spec.family) {
        case Family::a: return a_formula(index);
        case Family::b: return b_formula(index);
        case Family::c_k: return c_formula(index, spec.k);
        case Family::d_blocks: return d_formula(spec.m, index);
        default: detail::no_engine(spec, engine);
      }
    case Engine::dp:
      if (spec.family == Family::b_prime) detail::no_engine(spec, engine);
      return count_proper_dp(inst.poly, inst.region);
    case Engine::brute:
      if (spec.family == Family::b_prime) return b_prime_bruteforce(index, limits);
      return count_proper_brute(inst.poly, inst.region, limits);
  }
  detail::no_engine(spec, engine);
}

}  // namespace ppart
