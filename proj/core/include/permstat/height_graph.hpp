#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permstat/exact_rational.hpp"

namespace permstat {

enum class EdgeColor { red, blue };

struct Edge {
  unsigned u = 0;
  unsigned v = 0;
  EdgeColor color = EdgeColor::red;
};

// Simple loopless graph on vertices 0..vertex_count()-1 with red and blue edges.
class ColoredGraph {
 public:
  explicit ColoredGraph(unsigned vertex_count = 0);

  unsigned add_vertex();
  // Throws DomainError for loops, unknown vertices, or an edge already present
  // (in either colour).
  std::size_t add_edge(unsigned u, unsigned v, EdgeColor color);

  unsigned vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t red_edge_count() const noexcept;
  bool all_red() const noexcept { return red_edge_count() == edges_.size(); }

  std::optional<std::size_t> edge_index(unsigned u, unsigned v) const;
  bool adjacent(unsigned u, unsigned v) const { return edge_index(u, v).has_value(); }

  // Vertex sets of the connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<unsigned>> components() const;

  // Unordered vertex pairs u < v that are not joined by an edge.
  std::vector<std::pair<unsigned, unsigned>> non_edges() const;

  // Vertices of `other` are renumbered after this graph's vertices.
  ColoredGraph disjoint_union(const ColoredGraph& other) const;

  // Subgraph induced on `vertices`, renumbered 0..k-1 in the given order.
  ColoredGraph induced(std::span<const unsigned> vertices) const;

 private:
  unsigned vertex_count_;
  std::vector<Edge> edges_;
  // adjacency_[u] = (neighbour, edge index)
  std::vector<std::vector<std::pair<unsigned, std::size_t>>> adjacency_;

  friend class HeightLabelling;
};

// Antisymmetric offsets on the edges of one graph: omega(u, v) = -omega(v, u),
// with h_u = h_v + omega(u, v) for every edge uv. Stored per edge index as
// omega(edge.u, edge.v).
class HeightLabelling {
 public:
  HeightLabelling() = default;
  explicit HeightLabelling(std::vector<std::int64_t> per_edge) : offsets_(std::move(per_edge)) {}

  // omega(from, to). Throws DomainError when from-to is not an edge.
  std::int64_t offset(const ColoredGraph& graph, unsigned from, unsigned to) const;
  void set(const ColoredGraph& graph, unsigned from, unsigned to, std::int64_t value);

  const std::vector<std::int64_t>& per_edge() const noexcept { return offsets_; }

  // True iff red edges carry offsets in K = {x != 0 : |x| <= d} and blue edges carry 0.
  bool is_valid_for(const ColoredGraph& graph, std::uint64_t d) const;

 private:
  std::vector<std::int64_t> offsets_;
};

// Calls `visit` for each of the (2d)^m height labellings of a graph with m red
// edges. Throws BudgetExceeded when (2d)^m > max_labellings.
void for_each_height_labelling(const ColoredGraph& graph, std::uint64_t d,
                               std::uint64_t max_labellings,
                               const std::function<void(const HeightLabelling&)>& visit);

// Sum of omega along consecutive walk vertices; 0 for a one-vertex walk.
std::int64_t incline(const ColoredGraph& graph, const HeightLabelling& omega,
                     std::span<const unsigned> walk);

// Every cycle has incline zero. Checked by fixing potentials on a spanning
// forest and testing each remaining edge.
bool is_consistent(const ColoredGraph& graph, const HeightLabelling& omega);

// Number of (h_v) in [n]^V with h_u = h_v + omega(u, v) on every edge.
// Zero when omega is inconsistent; otherwise the product over components of
// max(0, n - b1 - b2), where b1 + b2 is the spread of the potentials.
BigInt z_omega(const ColoredGraph& graph, const HeightLabelling& omega, std::uint64_t n);

struct CountingBudget {
  // Labellings visited by Z (per component, summed) and by the literal sum.
  std::uint64_t max_labellings = std::uint64_t{1} << 26;
  // n^c * (2d)^(V-c) for the tuple method of Z*.
  std::uint64_t max_tuples = 400'000'000;
  // |E(complement)| for the inclusion-exclusion method of Z*.
  unsigned max_complement_edges = 24;
};

// Z(Gamma) = sum over height labellings of z_omega. Enumerates offsets only on
// a spanning forest per component; the offsets of the remaining edges are then
// forced, so the sum skips labellings with z_omega = 0.
BigInt Z(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d,
         const CountingBudget& budget = {});

// Z(Gamma) straight from the definition: every one of the (2d)^m labellings.
BigInt Z_by_labellings(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d,
                       const CountingBudget& budget = {});

enum class ZStarMethod { automatic, tuples, pie };

// Z*(Gamma) for an all-red graph: assignments counted by Z with all h_v
// distinct. `tuples` enumerates values directly; `pie` sums
// (-1)^|F| Z(Gamma_F) over subsets F of the complement edges coloured blue.
// `automatic` uses tuples when within budget, otherwise pie.
BigInt Z_star(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d,
              ZStarMethod method = ZStarMethod::automatic, const CountingBudget& budget = {});

// Inclusion-exclusion partial sum over |F| <= max_blue. An upper bound for Z*
// when max_blue is even and a lower bound when it is odd.
BigInt Z_star_partial(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d,
                      unsigned max_blue, const CountingBudget& budget = {});

}  // namespace permstat
