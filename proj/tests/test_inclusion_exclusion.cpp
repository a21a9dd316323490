#include <gtest/gtest.h>

#include <map>

#include "permstat/error.hpp"
#include "permstat/exact_oracle.hpp"
#include "permstat/inclusion_exclusion.hpp"

namespace permstat {
namespace {

SubsetProfile profile(std::vector<unsigned> I, unsigned n) { return profile_subset(I, n); }

TEST(JumpGraph, Shape) {
  const auto g = jump_constraint_graph(profile({2, 3, 5}, 8), 2);
  // Vertices {2, 3, 4, 5, 6} plus two isolated ones.
  EXPECT_EQ(g.vertex_count(), 7u);
  EXPECT_EQ(g.edges().size(), 3u);
  EXPECT_TRUE(g.all_red());
  EXPECT_EQ(g.components().size(), 4u);
}

// Frozen from a Python brute force over itertools.permutations(range(1, n + 1), k).
TEST(Nu, BruteForceValues) {
  EXPECT_EQ(nu(profile({1}, 8), 8, 2), 26);
  EXPECT_EQ(nu(profile({1, 2}, 8), 8, 2), 64);
  EXPECT_EQ(nu(profile({1, 3}, 8), 8, 2), 368);
  EXPECT_EQ(nu(profile({1, 2, 3}, 8), 8, 2), 122);
  EXPECT_EQ(nu(profile({1, 2, 4}, 8), 8, 1), 80);
  EXPECT_EQ(nu(profile({1, 3}, 7), 7, 2, 1), 696);
  EXPECT_EQ(nu(profile({2, 3, 5, 6}, 9), 9, 2), 1696);
}

TEST(Nu, DegenerateCases) {
  EXPECT_EQ(nu(profile({}, 6), 6, 2, 3), 120);  // (6)_3
  EXPECT_EQ(nu(profile({1, 2, 3, 4}, 5), 4, 2), 0);  // five vertices, four values
  EXPECT_EQ(nu(profile({1}, 6), 6, 0), 0);
  EXPECT_EQ(nu(profile({}, 6), 6, 0, 2), 30);
}

TEST(Nu, DependsOnlyOnType) {
  const unsigned n = 10;
  for (std::uint64_t d = 1; d <= 2; ++d) {
    for (unsigned t = 0; t <= 1; ++t) {
      std::map<std::pair<unsigned, Partition>, std::vector<BigInt>> seen;
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        const unsigned m = static_cast<unsigned>(__builtin_popcount(mask));
        if (m > 3) continue;
        std::vector<unsigned> I;
        for (unsigned i = 0; i + 1 < n; ++i) {
          if (mask >> i & 1) I.push_back(i + 1);
        }
        const auto p = profile_subset(I, n);
        auto& values = seen[{m, p.type}];
        if (values.size() < 4) values.push_back(nu(p, n, d, t));
      }
      for (const auto& [key, values] : seen) {
        ASSERT_GE(values.size(), 3u);
        for (const auto& v : values) EXPECT_EQ(v, values.front());
        EXPECT_EQ(nu_of_type(key.first, key.second, n, d, t), values.front());
      }
    }
  }
}

TEST(SmFormula, MatchesExhaustiveOracle) {
  for (unsigned n = 2; n <= 8; ++n) {
    for (std::uint64_t d = 0; d <= 2; ++d) {
      const auto oracle = exact_Sm_table(n, d, IndicatorFamily::minjump);
      const auto formula = Sm_formula_table(n, d);
      ASSERT_EQ(formula.size(), oracle.size());
      for (unsigned m = 0; m < n; ++m) EXPECT_EQ(formula[m], oracle[m]) << "n=" << n << " d=" << d << " m=" << m;
    }
  }
}

TEST(SmFormula, MethodsAgree) {
  for (unsigned m = 0; m <= 3; ++m) {
    EXPECT_EQ(Sm_formula(12, 2, m, ZStarMethod::tuples), Sm_formula(12, 2, m, ZStarMethod::pie));
  }
}

TEST(SmFormula, SingleIndex) {
  // S_1 = (n - 1) (2dn - d(d+1)) / (n (n - 1)).
  for (unsigned n = 4; n <= 30; ++n) {
    for (std::uint64_t d = 1; d <= 3 && d < n; ++d) {
      EXPECT_EQ(Sm_formula(n, d, 1), ExactRational(2 * d * n - d * (d + 1), n));
    }
  }
}

TEST(Bonferroni, PartialSumsAndBrackets) {
  const std::vector<ExactRational> S{1, ExactRational(5, 3), ExactRational(16, 15), ExactRational(19, 60),
                                     ExactRational(2, 45), ExactRational(1, 360)};
  const auto partial = alternating_partial_sums(S);
  EXPECT_EQ(partial.back(), ExactRational(90, 720));
  const auto b0 = bonferroni_bracket_from(S, 0);
  EXPECT_EQ(b0.lower_depth, -1);
  EXPECT_EQ(b0.lower, 0);
  EXPECT_EQ(b0.upper, 1);
  const auto b3 = bonferroni_bracket_from(S, 3);
  EXPECT_EQ(b3.lower_depth, 3);
  EXPECT_EQ(b3.upper_depth, 2);
  EXPECT_EQ(b3.width(), S[3]);
  const auto b9 = bonferroni_bracket_from(S, 9);
  EXPECT_EQ(b9.upper_depth, 4);
  EXPECT_EQ(b9.lower_depth, 5);
  EXPECT_EQ(b9.lower, partial[5]);
  EXPECT_EQ(b9.upper, partial[4]);
  EXPECT_THROW(bonferroni_bracket_from({}, 0), DomainError);
}

TEST(Bonferroni, BracketsContainExactProbability) {
  for (unsigned n = 3; n <= 8; ++n) {
    for (std::uint64_t d = 1; d <= 2; ++d) {
      for (auto family : {IndicatorFamily::breadth, IndicatorFamily::minjump}) {
        const auto stat = family == IndicatorFamily::breadth ? Statistic::breadth() : Statistic::minjump();
        const auto exact = exact_prob_ge(n, stat, prolific_threshold(family, d));
        for (unsigned r = 0; r < n; ++r) {
          const auto b = bonferroni_bracket(n, d, r, family);
          EXPECT_TRUE(b.contains(exact)) << "n=" << n << " d=" << d << " r=" << r;
        }
      }
    }
  }
}

TEST(Bonferroni, WidthShrinksForDOne) {
  // With d = 1 the binomial moments decrease from m = 1 on, so the bracket
  // narrows with depth; at d = 2 S_2 > S_1 and it does not.
  const unsigned n = 8;
  auto prev = bonferroni_bracket(n, 1, 1, IndicatorFamily::minjump).width();
  for (unsigned r = 2; r < n; ++r) {
    const auto w = bonferroni_bracket(n, 1, r, IndicatorFamily::minjump).width();
    EXPECT_LE(w, prev) << r;
    prev = w;
  }
  EXPECT_GT(bonferroni_bracket(n, 2, 2, IndicatorFamily::minjump).width(),
            bonferroni_bracket(n, 2, 1, IndicatorFamily::minjump).width());
}

}  // namespace
}  // namespace permstat
