#include "permstat/inclusion_exclusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "permstat/error.hpp"

namespace permstat {

ColoredGraph jump_constraint_graph(const SubsetProfile& subset, unsigned extra) {
  std::set<unsigned> positions;
  for (unsigned i : subset.elements) {
    positions.insert(i);
    positions.insert(i + 1);
  }
  std::vector<unsigned> order(positions.begin(), positions.end());
  ColoredGraph graph(static_cast<unsigned>(order.size()) + extra);
  auto vertex_of = [&](unsigned position) {
    return static_cast<unsigned>(std::lower_bound(order.begin(), order.end(), position) - order.begin());
  };
  for (unsigned i : subset.elements) graph.add_edge(vertex_of(i), vertex_of(i + 1), EdgeColor::red);
  return graph;
}

BigInt nu(const SubsetProfile& subset, std::uint64_t n, std::uint64_t d, unsigned t, ZStarMethod method,
          const CountingBudget& budget) {
  const ColoredGraph graph = jump_constraint_graph(subset, t);
  if (graph.vertex_count() > n) return 0;
  if (d == 0) return subset.elements.empty() ? falling_factorial(n, t) : BigInt(0);
  return Z_star(graph, n, d, method, budget);
}

BigInt nu_of_type(unsigned m, const Partition& type, std::uint64_t n, std::uint64_t d, unsigned t,
                  ZStarMethod method, const CountingBudget& budget) {
  const auto subset = canonical_subset(m, type);
  const unsigned universe = subset.empty() ? 2 : subset.back() + 1;
  return nu(profile_subset(subset, universe), n, d, t, method, budget);
}

ExactRational Sm_formula(unsigned n, std::uint64_t d, unsigned m, ZStarMethod method,
                         const CountingBudget& budget) {
  if (n < 2) throw DomainError("Sm_formula requires n >= 2");
  if (m > n - 1) {
    throw DomainError("m = " + std::to_string(m) + " outside [0, n-1] for n = " + std::to_string(n));
  }
  if (m == 0) return 1;
  if (d == 0) return 0;
  ExactRational sum = 0;
  for (unsigned z = 0; z < m; ++z) {
    const unsigned vertices = 2 * m - z;
    if (vertices > n) continue;
    for (const Partition& type : partitions_of(z)) {
      const BigInt count = count_subsets_of_type(n, m, type);
      if (count == 0) continue;
      const BigInt weight = nu_of_type(m, type, n, d, 0, method, budget);
      sum += ExactRational(count * weight, falling_factorial(n, vertices));
    }
  }
  return sum;
}

std::vector<ExactRational> Sm_formula_table(unsigned n, std::uint64_t d, ZStarMethod method,
                                            const CountingBudget& budget) {
  std::vector<ExactRational> table;
  table.reserve(n);
  for (unsigned m = 0; m < n; ++m) table.push_back(Sm_formula(n, d, m, method, budget));
  return table;
}

std::vector<ExactRational> alternating_partial_sums(const std::vector<ExactRational>& S) {
  std::vector<ExactRational> partial;
  partial.reserve(S.size());
  ExactRational running = 0;
  for (std::size_t m = 0; m < S.size(); ++m) {
    running += (m % 2 ? -S[m] : S[m]);
    partial.push_back(running);
  }
  return partial;
}

BonferroniBracket bonferroni_bracket_from(const std::vector<ExactRational>& S, unsigned r) {
  if (S.empty()) throw DomainError("bonferroni_bracket needs at least S_0");
  const auto partial = alternating_partial_sums(S);
  const unsigned top = std::min<unsigned>(r, static_cast<unsigned>(S.size() - 1));
  BonferroniBracket bracket;
  bracket.upper_depth = static_cast<int>(top % 2 ? top - 1 : top);
  bracket.upper = partial[bracket.upper_depth];
  if (top >= 1) {
    bracket.lower_depth = static_cast<int>(top % 2 ? top : top - 1);
    bracket.lower = partial[bracket.lower_depth];
  } else {
    bracket.lower = 0;
  }
  return bracket;
}

BonferroniBracket bonferroni_bracket(unsigned n, std::uint64_t d, unsigned r, IndicatorFamily family,
                                     const OracleLimits& limits, const CountingBudget& budget) {
  if (n < 2) throw DomainError("bonferroni_bracket requires n >= 2");
  std::vector<ExactRational> S;
  const unsigned top = std::min(r, n - 1);
  if (family == IndicatorFamily::minjump) {
    for (unsigned m = 0; m <= top; ++m) S.push_back(Sm_formula(n, d, m, ZStarMethod::automatic, budget));
  } else {
    S = exact_Sm_table(n, d, family, limits);
    S.resize(top + 1);
  }
  return bonferroni_bracket_from(S, r);
}

}  // namespace permstat
