#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ppart/counting.hpp"
#include "ppart/enumerate.hpp"
#include "ppart/families.hpp"

using namespace ppart;

TEST(Arithmetic, BinomialAndExactDivision) {
  EXPECT_EQ(binomial(18, 6), 18564);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(exact_div(42, 6), 7);
  EXPECT_THROW(exact_div(43, 6), std::logic_error);
  EXPECT_EQ(pow2(70).str(), "1180591620717411303424");
}

TEST(Catalan, KnownValues) {
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(catalan_k(0, k), 1);
  EXPECT_EQ(catalan_k(2, 3), 3);
  EXPECT_EQ(catalan_k(3, 2), 5);
  EXPECT_EQ(catalan_k(4, 2), 14);
  EXPECT_EQ(catalan_k(5, 4), 969);
  EXPECT_THROW(catalan_k(-1, 2), ParameterError);
  EXPECT_THROW(catalan_k(2, 1), ParameterError);
}

TEST(Catalan, KdReducesToKAtD1) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 2; k <= 5; ++k) EXPECT_EQ(catalan_kd(n, k, 1), catalan_k(n, k)) << n << "," << k;
  for (int k = 2; k <= 5; ++k)
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(catalan_kd(0, k, d), 1);
  EXPECT_EQ(catalan_kd(2, 3, 2), 7);
  EXPECT_EQ(catalan_kd(3, 3, 2), 30);
  EXPECT_THROW(catalan_kd(1, 3, 0), ParameterError);
}

TEST(Catalan, OracleAgreementOnSmallPolygons) {
  // dissection counts by an independent search
  EXPECT_EQ(oracle::count_kd(7, 4, 3), 7);
  EXPECT_EQ(oracle::count_kd(5, 4, 3), 2);
  EXPECT_EQ(oracle::count_kd(9, 4, 3), 30);
  EXPECT_EQ(oracle::count_kd(6, 5, 3), 2);
  EXPECT_EQ(count_kd_partitions(7, 4, 3), 7);
  EXPECT_EQ(count_kd_partitions(5, 4, 3), 2);
  EXPECT_EQ(count_kd_partitions(9, 4, 3), 30);
  EXPECT_EQ(count_kd_partitions(6, 5, 3), 2);
  EXPECT_EQ(count_kd_partitions(3, 4, 3), 1);
  EXPECT_EQ(count_kd_partitions(8, 4, 3), 0);
}

TEST(Catalan, KdFormulaMatchesBruteForce) {
  for (int K = 3; K <= 5; ++K)
    for (int D = 2; D <= 4; ++D)
      for (int n = 0; n <= 3; ++n) {
        const int v = n * (K - 2) + D;
        EXPECT_EQ(count_kd_partitions(v, K, D), catalan_kd(n, K - 1, D - 1))
            << "n=" << n << " K=" << K << " D=" << D;
        if (v <= 9) {
          EXPECT_EQ(count_kd_partitions(v, K, D), oracle::count_kd(v, K, D));
        }
      }
}

TEST(FamilyA, FrozenValues) {
  const std::vector<long> expected{1, 1, 2, 4, 12, 28, 96, 240, 880, 2288, 8736, 23296, 91392};
  for (int N = 0; N <= 12; ++N) EXPECT_EQ(a_formula(N), expected[static_cast<std::size_t>(N)]);
  EXPECT_EQ(oracle::count_proper(oracle::cyclic(5, 2), 2, 3), 4);
}

TEST(FamilyA, Recursions) {
  for (int n = 1; n <= 6; ++n) {
    BigCount odd = 0;
    for (int i = 0; i <= n; ++i) odd += a_formula(2 * i) * a_formula(2 * n - 2 * i);
    EXPECT_EQ(a_formula(2 * n + 1), odd) << n;
    BigCount even = 0;
    for (int i = 0; i <= 2 * n - 1; ++i) even += a_formula(i) * a_formula(2 * n - 1 - i);
    EXPECT_EQ(a_formula(2 * n), even) << n;
  }
}

TEST(FamilyB, FrozenValues) {
  EXPECT_EQ(b_formula(0), 1);
  EXPECT_EQ(b_formula(2), 1);
  EXPECT_EQ(b_formula(4), 2);
  EXPECT_EQ(b_formula(6), 4);
  const auto adjusted = [](int n) { return make_coloring(scheme::CyclicAdjusted3{}, n).colors(); };
  EXPECT_EQ(oracle::count_proper(adjusted(4), 3, 3), 1);
  EXPECT_EQ(oracle::count_proper(adjusted(6), 3, 3), 2);
  EXPECT_EQ(oracle::count_proper(adjusted(7), 3, 3), 3);
  EXPECT_EQ(oracle::count_proper(adjusted(8), 3, 3), 4);
  EXPECT_EQ(b_formula(5), 3);
}

TEST(FamilyB, DpMatchesFormula) {
  for (int N = 0; N <= 14; ++N) {
    const auto poly = make_coloring(scheme::CyclicAdjusted3{}, N + 2);
    EXPECT_EQ(count_proper_dp(poly, 3), b_formula(N)) << N;
  }
}

TEST(FamilyC, FrozenValues) {
  EXPECT_EQ(c_formula(0, 4), 1);
  EXPECT_EQ(c_formula(6, 4), 0);
  EXPECT_EQ(c_formula(8, 4), 1);
  EXPECT_EQ(c_formula(10, 4), 3);
  EXPECT_EQ(c_formula(16, 4), 9);
  EXPECT_EQ(c_formula(15, 5), 1);
  EXPECT_EQ(c_formula(3, 4), 0);
  EXPECT_THROW(c_formula(4, 3), ParameterError);
  EXPECT_EQ(oracle::count_proper(oracle::cyclic(10, 4), 4, 4), 1);
  EXPECT_EQ(oracle::count_proper(oracle::cyclic(12, 4), 4, 4), 3);
}

// A single k-gon carries each of the k colors once.
TEST(FamilyC, SingleRegionIsProper) {
  for (int k = 4; k <= 6; ++k) {
    EXPECT_EQ(c_formula(k - 2, k), 1);
    EXPECT_EQ(count_proper_dp(make_coloring(scheme::Cyclic{k}, k), k), 1);
  }
  EXPECT_EQ(oracle::count_proper(oracle::cyclic(4, 4), 4, 4), 1);
}

TEST(FamilyC, DpVanishesOutsideRemainders0And1) {
  for (int k = 4; k <= 5; ++k) {
    for (int N = 0; N <= 18; ++N) {
      const auto dp = count_proper_dp(make_coloring(scheme::Cyclic{k}, N + 2), k);
      EXPECT_EQ(dp, c_formula(N, k)) << "k=" << k << " N=" << N;
      const bool divisible = N % (k - 2) == 0;
      const int r = divisible ? (N / (k - 2)) % k : -1;
      if (!divisible || (r != 0 && r != 1)) {
        EXPECT_EQ(dp, 0) << N;
      }
    }
  }
}

TEST(FamilyD, FrozenValuesAndRecursion) {
  EXPECT_EQ(d_formula(1, 7), 1);
  EXPECT_EQ(d_formula(7, 1), 1);
  EXPECT_EQ(d_formula(2, 2), 2);
  EXPECT_EQ(d_formula(3, 3), 6);
  EXPECT_EQ(oracle::count_proper({1, 1, 2, 2}, 2, 3), 2);
  EXPECT_EQ(oracle::count_proper({1, 1, 1, 2, 2, 2}, 2, 3), 6);
  EXPECT_THROW(d_formula(0, 3), ParameterError);
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(d_formula(m, n), d_formula(m - 1, n) + d_formula(m, n - 1));
}

TEST(Dp, SpecificPolygons) {
  EXPECT_EQ(count_proper_dp(ColoredPolygon({1, 2, 1, 2, 1}, 2), 3), 4);
  EXPECT_EQ(count_proper_dp(ColoredPolygon({1, 2, 3, 1, 2, 3, 2}, 3), 3), b_formula(5));
  EXPECT_EQ(count_proper_dp(make_coloring(scheme::Cyclic{2}, 7), 4), 0);
  EXPECT_THROW(count_proper_dp(make_coloring(scheme::Cyclic{2}, 7), 2), ParameterError);
}

// Definition-faithful on arbitrary colorings: compare against the oracle.
TEST(Dp, AgreesWithOracleOnMixedColorings) {
  const std::vector<std::vector<int>> polys{
      {1, 2, 2, 1, 3, 2, 3}, {1, 1, 2, 3, 1, 2, 3, 3}, {2, 1, 2, 1, 1, 2, 1, 2, 2}, {1, 2, 3, 4, 1, 2}};
  for (const auto& c : polys) {
    const int colors = *std::max_element(c.begin(), c.end());
    for (int k = 3; k <= 5; ++k) {
      EXPECT_EQ(count_proper_dp(ColoredPolygon(c, colors), k), oracle::count_proper(c, colors, k));
    }
  }
}

TEST(BPrime, FrozenValues) {
  const std::vector<long> expected{1, 1, 2, 5, 14, 38, 124};
  for (int N = 0; N <= 6; ++N) {
    EXPECT_EQ(b_prime_bruteforce(N), expected[static_cast<std::size_t>(N)]) << N;
  }
  EXPECT_THROW(b_prime_bruteforce(12, EnumerationLimits{1000}), ResourceError);
}

TEST(Families, EnginesAgreeAndErrorsAreExplicit) {
  const SequenceSpec a{Family::a};
  for (int N = 0; N <= 8; ++N) {
    EXPECT_EQ(family_count(a, N, Engine::formula), family_count(a, N, Engine::dp));
    EXPECT_EQ(family_count(a, N, Engine::formula), family_count(a, N, Engine::brute));
  }
  const SequenceSpec d{Family::d_blocks, 3, 2, 3};
  EXPECT_EQ(family_count(d, 3, Engine::dp), 6);
  EXPECT_EQ(family_count(d, 3, Engine::brute), 6);
  const SequenceSpec ckd{Family::catalan_kd, 3, 2};
  EXPECT_EQ(family_count(ckd, 2, Engine::formula), 7);
  EXPECT_EQ(family_count(ckd, 2, Engine::dp), 7);
  EXPECT_EQ(family_count(ckd, 2, Engine::brute), 7);
  const SequenceSpec cat{Family::catalan_k, 3};
  EXPECT_EQ(family_count(cat, 2, Engine::brute), 3);
  const SequenceSpec bp{Family::b_prime};
  EXPECT_THROW(family_count(bp, 3, Engine::formula), ParameterError);
  EXPECT_THROW(family_count(bp, 3, Engine::dp), ParameterError);
  EXPECT_EQ(family_count(bp, 3, Engine::brute), 5);
  EXPECT_THROW(family_count(SequenceSpec{Family::c_k, 3}, 4, Engine::dp), ParameterError);
}
