#pragma once

#include <cstdint>
#include <vector>

#include "permstat/exact_oracle.hpp"
#include "permstat/exact_rational.hpp"
#include "permstat/height_graph.hpp"
#include "permstat/subsets.hpp"

namespace permstat {

// Red paths {i, i+1} for i in I on the vertex set I u (1 + I), plus `extra`
// isolated vertices. Vertices are numbered in increasing order of position.
ColoredGraph jump_constraint_graph(const SubsetProfile& subset, unsigned extra = 0);

// nu_I: number of distinct-valued (h_i) in [n] on the vertices of
// jump_constraint_graph(I, t) with h_{i+1} - h_i in K for every i in I.
BigInt nu(const SubsetProfile& subset, std::uint64_t n, std::uint64_t d, unsigned t = 0,
          ZStarMethod method = ZStarMethod::automatic, const CountingBudget& budget = {});

// nu for any m-subset of the given type (the value depends only on d, m, the type and t).
BigInt nu_of_type(unsigned m, const Partition& type, std::uint64_t n, std::uint64_t d, unsigned t = 0,
                  ZStarMethod method = ZStarMethod::automatic, const CountingBudget& budget = {});

// S_m for the jump indicators, grouped by subset type:
//   sum over types lambda of count_subsets_of_type(n, m, lambda) * nu(lambda) / (n)_{2m - z}
ExactRational Sm_formula(unsigned n, std::uint64_t d, unsigned m,
                         ZStarMethod method = ZStarMethod::automatic, const CountingBudget& budget = {});

std::vector<ExactRational> Sm_formula_table(unsigned n, std::uint64_t d,
                                            ZStarMethod method = ZStarMethod::automatic,
                                            const CountingBudget& budget = {});

// partial[r] = sum_{m <= r} (-1)^m S_m.
std::vector<ExactRational> alternating_partial_sums(const std::vector<ExactRational>& S);

struct BonferroniBracket {
  ExactRational lower;
  ExactRational upper;
  // Truncation depths used; lower_depth is -1 when no odd depth <= r exists
  // and the trivial bound 0 is reported.
  int lower_depth = -1;
  int upper_depth = 0;

  ExactRational width() const { return upper - lower; }
  bool contains(const ExactRational& value) const { return lower <= value && value <= upper; }
};

// Bracket on Pr[no indicator fires] from the partial sums at the largest odd
// (lower) and even (upper) depths <= r. S_m comes from Sm_formula for minjump
// and from exhaustive enumeration for breadth.
BonferroniBracket bonferroni_bracket(unsigned n, std::uint64_t d, unsigned r, IndicatorFamily family,
                                     const OracleLimits& limits = {}, const CountingBudget& budget = {});

BonferroniBracket bonferroni_bracket_from(const std::vector<ExactRational>& S, unsigned r);

}  // namespace permstat
