#pragma once

// Closed-form counts and the interval DP that serves as their oracle.
// All arithmetic is exact; every closed-form division asserts a zero
// remainder.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ppart/core.hpp"

namespace ppart {

using BigCount = boost::multiprecision::cpp_int;

inline std::string to_string(const BigCount& x) { return x.str(); }

/// Division that must be exact; a remainder means a mistranscribed formula.
inline BigCount exact_div(const BigCount& num, const BigCount& den) {
  if (den == 0) throw std::logic_error("division by zero in closed form");
  BigCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw std::logic_error("inexact division " + num.str() + " / " + den.str());
  return q;
}

/// binom(n, r); zero when r < 0 or r > n.
inline BigCount binomial(std::int64_t n, std::int64_t r) {
  if (n < 0) throw ParameterError("binomial: negative n");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigCount acc = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    acc *= (n - i);
    acc = exact_div(acc, i + 1);
  }
  return acc;
}

inline BigCount pow2(unsigned e) {
  BigCount x = 1;
  x <<= e;
  return x;
}

/// k-Catalan number binom(kn, n) / ((k-1)n + 1).
inline BigCount catalan_k(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 2) throw ParameterError("catalan_k needs n >= 0, k >= 2");
  return exact_div(binomial(k * n, n), (k - 1) * n + 1);
}

/// (k,d)-Catalan number d * binom(kn + d - 1, n) / ((k-1)n + d).
inline BigCount catalan_kd(std::int64_t n, std::int64_t k, std::int64_t d) {
  if (n < 0 || k < 2 || d < 1)
    throw ParameterError("catalan_kd needs n >= 0, k >= 2, d >= 1");
  return exact_div(BigCount(d) * binomial(k * n + d - 1, n), (k - 1) * n + d);
}

/// Proper triangulations of the cyclically 2-colored (N+2)-gon.
inline BigCount a_formula(std::int64_t N) {
  if (N < 0) throw ParameterError("a_formula needs N >= 0");
  const std::int64_t n = N / 2;
  if (N % 2 == 0) {
    if (n == 0) return 1;
    return exact_div(pow2(static_cast<unsigned>(n)) * binomial(3 * n, n - 1), n);
  }
  if (n == 0) return 1;
  return exact_div(pow2(static_cast<unsigned>(n + 1)) * binomial(3 * n + 1, n - 1), n);
}

/// Proper triangulations of the 3-colored (N+2)-gon (last vertex 2 when
/// N+2 = 1 mod 3).
inline BigCount b_formula(std::int64_t N) {
  if (N < 0) throw ParameterError("b_formula needs N >= 0");
  const std::int64_t n = N / 3;
  switch (N % 3) {
    case 0:
      return exact_div(binomial(4 * n, n), 3 * n + 1);
    case 1:
      return exact_div(2 * binomial(4 * n + 1, n), 3 * n + 2);
    default:
      return exact_div(3 * binomial(4 * n + 2, n), 3 * n + 3);
  }
}

/// Proper k-partitions of the cyclically k-colored (N+2)-gon, k >= 4.
inline BigCount c_formula(std::int64_t N, std::int64_t k) {
  if (k < 4) throw ParameterError("c_formula needs k >= 4");
  if (N < 0) throw ParameterError("c_formula needs N >= 0");
  if (N == 0) return 1;
  if (N % (k - 2) != 0) return 0;
  const std::int64_t M = N / (k - 2);
  const std::int64_t n = M / k;
  const std::int64_t r = M % k;
  const std::int64_t sq = (k - 1) * (k - 1);
  if (r == 0) return exact_div(binomial(sq * n, n - 1), n);
  if (r == 1) {
    // n = 0 is a single k-gon carrying all k colors.
    if (n == 0) return 1;
    return exact_div(BigCount(k - 1) * binomial(sq * n + (k - 2), n - 1), n);
  }
  return 0;
}

/// Proper triangulations of the polygon colored 1^m 2^n.
inline BigCount d_formula(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw ParameterError("d_formula needs m, n >= 1");
  return binomial(m + n - 2, m - 1);
}

namespace detail {

// Interval DP over sub-polygons i..j rooted at edge (i, j). A face below
// (i, j) is chosen as i < t_1 < ... < t_s < j and `accept` filters it by
// the color mask of its vertices.
class IntervalCounter {
 public:
  IntervalCounter(int num_vertices, int region_size,
                  std::function<bool(std::uint64_t)> accept,
                  std::function<std::uint64_t(int)> vertex_bit)
      : n_(num_vertices),
        k_(region_size),
        accept_(std::move(accept)),
        bit_(std::move(vertex_bit)),
        memo_(static_cast<std::size_t>(n_ * n_)),
        known_(static_cast<std::size_t>(n_ * n_), false) {}

  const BigCount& f(int i, int j) {
    const auto idx = static_cast<std::size_t>(i * n_ + j);
    if (known_[idx]) return memo_[idx];
    BigCount total = 0;
    if (j - i == 1) {
      total = 1;
    } else if ((j - i - 1) % (k_ - 2) == 0) {
      total = face_sum(i, j, k_, accept_);
    }
    memo_[idx] = std::move(total);
    known_[idx] = true;
    return memo_[idx];
  }

  /// Sum over faces below (i, j) with `size` vertices of the product of
  /// the sub-polygon counts.
  BigCount face_sum(int i, int j, int size,
                    const std::function<bool(std::uint64_t)>& accept) {
    BigCount total = 0;
    extend(i, j, size - 2, i, bit_(i) | bit_(j), BigCount(1), accept, total);
    return total;
  }

 private:
  void extend(int i, int j, int remaining, int prev, std::uint64_t mask,
              const BigCount& acc, const std::function<bool(std::uint64_t)>& accept,
              BigCount& total) {
    if (remaining == 0) {
      if (!accept(mask)) return;
      const BigCount& last = f(prev, j);
      if (last != 0) total += acc * last;
      return;
    }
    for (int t = prev + 1; t <= j - remaining; ++t) {
      const BigCount& part = f(prev, t);
      if (part == 0) continue;
      extend(i, j, remaining - 1, t, mask | bit_(t), acc * part, accept, total);
    }
  }

  int n_;
  int k_;
  std::function<bool(std::uint64_t)> accept_;
  std::function<std::uint64_t(int)> bit_;
  std::vector<BigCount> memo_;
  std::vector<bool> known_;
};

}  // namespace detail

/// Number of proper k-partitions of `poly` by interval DP.
inline BigCount count_proper_dp(const ColoredPolygon& poly, int k) {
  if (k < 3) throw ParameterError("count_proper_dp needs k >= 3");
  const int n = poly.num_vertices();
  if ((n - 2) % (k - 2) != 0) return 0;
  const auto full = poly.full_color_mask();
  detail::IntervalCounter counter(
      n, k, [full](std::uint64_t m) { return m == full; },
      [&poly](int v) { return poly.color_bit(v); });
  return counter.f(0, n - 1);
}

/// Uncolored partitions whose root region is a D-gon and all others
/// K-gons (D = 2: ordinary K-partitions).
inline BigCount count_kd_partitions(int num_vertices, int K, int D) {
  if (K < 3 || D < 2) throw ParameterError("count_kd_partitions needs K >= 3, D >= 2");
  if (num_vertices < 2) throw ParameterError("num_vertices must be >= 2");
  if (num_vertices < D) return 0;
  const auto any = [](std::uint64_t) { return true; };
  detail::IntervalCounter counter(num_vertices, K, any, [](int) { return std::uint64_t{0}; });
  if (D == 2) return counter.f(0, num_vertices - 1);
  return counter.face_sum(0, num_vertices - 1, D, any);
}

/// Which sequence a count refers to.
enum class Family { a, b, c_k, d_blocks, catalan_k, catalan_kd, b_prime };

struct SequenceSpec {
  Family family = Family::a;
  int k = 0;  ///< region size for c_k, arity for catalan_k / catalan_kd
  int d = 0;  ///< catalan_kd only
  int m = 0;  ///< d_blocks: number of leading ones
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::c_k: return "c";
    case Family::d_blocks: return "d";
    case Family::catalan_k: return "catalan";
    case Family::catalan_kd: return "catalan_kd";
    case Family::b_prime: return "b_prime";
  }
  return "?";
}

}  // namespace ppart
