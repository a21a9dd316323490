#include "permstat/height_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "permstat/error.hpp"

namespace permstat {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t k = 0; k < exponent; ++k) result = saturating_mul(result, base);
  return result;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

// Adjacency-list view over a vertex count and an edge list. Used for the
// many short-lived graphs built during inclusion-exclusion.
struct EdgeListGraph {
  unsigned vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<unsigned, std::size_t>>> adjacency;

  EdgeListGraph(unsigned v, std::vector<Edge> e) : vertices(v), edges(std::move(e)), adjacency(v) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      adjacency[edges[k].u].emplace_back(edges[k].v, k);
      adjacency[edges[k].v].emplace_back(edges[k].u, k);
    }
  }
};

// Breadth-first layout of one component: order[0] is the root; every other
// vertex has a tree edge to an earlier vertex, and `checks` lists the other
// edges back to earlier vertices.
struct ComponentLayout {
  std::vector<unsigned> order;
  std::vector<unsigned> parent;           // by position; parent vertex
  std::vector<EdgeColor> parent_color;    // by position
  std::vector<std::vector<std::pair<unsigned, EdgeColor>>> checks;  // by position
  std::size_t red_tree_edges = 0;
};

std::vector<ComponentLayout> layout_components(const EdgeListGraph& g) {
  std::vector<ComponentLayout> layouts;
  std::vector<int> position(g.vertices, -1);
  std::vector<char> tree_edge(g.edges.size(), 0);
  for (unsigned root = 0; root < g.vertices; ++root) {
    if (position[root] >= 0) continue;
    ComponentLayout layout;
    std::vector<unsigned> parent_edge_of;
    layout.order.push_back(root);
    position[root] = 0;
    parent_edge_of.push_back(0);
    for (std::size_t head = 0; head < layout.order.size(); ++head) {
      const unsigned u = layout.order[head];
      for (const auto& [w, e] : g.adjacency[u]) {
        if (position[w] >= 0) continue;
        position[w] = static_cast<int>(layout.order.size());
        layout.order.push_back(w);
        tree_edge[e] = 1;
        parent_edge_of.push_back(static_cast<unsigned>(e));
      }
    }
    const std::size_t size = layout.order.size();
    layout.parent.assign(size, 0);
    layout.parent_color.assign(size, EdgeColor::blue);
    layout.checks.assign(size, {});
    for (std::size_t pos = 1; pos < size; ++pos) {
      const Edge& e = g.edges[parent_edge_of[pos]];
      const unsigned v = layout.order[pos];
      layout.parent[pos] = e.u == v ? e.v : e.u;
      layout.parent_color[pos] = e.color;
      if (e.color == EdgeColor::red) ++layout.red_tree_edges;
    }
    for (std::size_t pos = 0; pos < size; ++pos) {
      const unsigned v = layout.order[pos];
      for (const auto& [w, e] : g.adjacency[v]) {
        if (tree_edge[e]) continue;
        if (position[w] < static_cast<int>(pos)) layout.checks[pos].emplace_back(w, g.edges[e].color);
      }
    }
    layouts.push_back(std::move(layout));
  }
  return layouts;
}

bool edge_ok(std::int64_t diff, EdgeColor color, std::int64_t d) {
  if (color == EdgeColor::blue) return diff == 0;
  const auto a = iabs(diff);
  return a >= 1 && a <= d;
}

// Sum over consistent labellings of one component of max(0, n - spread).
class PotentialSearch {
 public:
  PotentialSearch(const ComponentLayout& layout, unsigned vertices, std::int64_t n, std::int64_t d)
      : layout_(layout), n_(n), d_(d), potential_(vertices, 0) {}

  std::uint64_t run() {
    total_ = 0;
    potential_[layout_.order[0]] = 0;
    descend(1, 0, 0);
    return total_;
  }

 private:
  void descend(std::size_t pos, std::int64_t lo, std::int64_t hi) {
    if (pos == layout_.order.size()) {
      const std::int64_t room = n_ - (hi - lo);
      if (room > 0) total_ += static_cast<std::uint64_t>(room);
      return;
    }
    const unsigned v = layout_.order[pos];
    const std::int64_t base = potential_[layout_.parent[pos]];
    if (layout_.parent_color[pos] == EdgeColor::blue) {
      try_value(pos, v, base, lo, hi);
      return;
    }
    for (std::int64_t s = -d_; s <= d_; ++s) {
      if (s != 0) try_value(pos, v, base + s, lo, hi);
    }
  }

  void try_value(std::size_t pos, unsigned v, std::int64_t value, std::int64_t lo, std::int64_t hi) {
    for (const auto& [w, color] : layout_.checks[pos]) {
      if (!edge_ok(value - potential_[w], color, d_)) return;
    }
    potential_[v] = value;
    descend(pos + 1, std::min(lo, value), std::max(hi, value));
  }

  const ComponentLayout& layout_;
  std::int64_t n_;
  std::int64_t d_;
  std::vector<std::int64_t> potential_;
  std::uint64_t total_ = 0;
};

BigInt Z_of(const EdgeListGraph& g, std::uint64_t n, std::uint64_t d, const CountingBudget& budget) {
  const auto layouts = layout_components(g);
  std::uint64_t work = 0;
  for (const auto& layout : layouts) {
    work = saturating_add(work, saturating_pow(2 * d, layout.red_tree_edges));
  }
  if (work > budget.max_labellings) {
    throw BudgetExceeded("Z would visit " + (work == kSaturated ? std::string("> 2^64") : std::to_string(work)) +
                         " forest labellings (budget " + std::to_string(budget.max_labellings) + ")");
  }
  BigInt product = 1;
  for (const auto& layout : layouts) {
    if (layout.red_tree_edges > 0 && d == 0) return 0;
    PotentialSearch search(layout, g.vertices, static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    const std::uint64_t count = search.run();
    if (count == 0) return 0;
    product *= count;
  }
  return product;
}

EdgeListGraph as_edge_list(const ColoredGraph& graph) {
  return EdgeListGraph(graph.vertex_count(), graph.edges());
}

// Direct enumeration of distinct values: per component, an anchor value for
// the root and then a tree offset in K for each further vertex.
class DistinctValueSearch {
 public:
  DistinctValueSearch(const std::vector<ComponentLayout>& layouts, unsigned vertices, std::int64_t n,
                      std::int64_t d)
      : layouts_(layouts), n_(n), d_(d), value_(vertices, 0), used_(static_cast<std::size_t>(n) + 1, 0) {}

  std::uint64_t run() {
    count_ = 0;
    component(0);
    return count_;
  }

 private:
  void component(std::size_t c) {
    if (c == layouts_.size()) {
      ++count_;
      return;
    }
    const unsigned root = layouts_[c].order[0];
    for (std::int64_t x = 1; x <= n_; ++x) {
      if (used_[x]) continue;
      used_[x] = 1;
      value_[root] = x;
      descend(c, 1);
      used_[x] = 0;
    }
  }

  void descend(std::size_t c, std::size_t pos) {
    const ComponentLayout& layout = layouts_[c];
    if (pos == layout.order.size()) {
      component(c + 1);
      return;
    }
    const unsigned v = layout.order[pos];
    const std::int64_t base = value_[layout.parent[pos]];
    for (std::int64_t s = -d_; s <= d_; ++s) {
      const std::int64_t x = base + s;
      if (s == 0 || x < 1 || x > n_ || used_[x]) continue;
      bool ok = true;
      for (const auto& [w, color] : layout.checks[pos]) {
        if (!edge_ok(x - value_[w], color, d_)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_[x] = 1;
      value_[v] = x;
      descend(c, pos + 1);
      used_[x] = 0;
    }
  }

  const std::vector<ComponentLayout>& layouts_;
  std::int64_t n_;
  std::int64_t d_;
  std::vector<std::int64_t> value_;
  std::vector<char> used_;
  std::uint64_t count_ = 0;
};

void require_all_red(const ColoredGraph& graph) {
  if (!graph.all_red()) throw DomainError("Z* is defined for graphs whose edges are all red");
}

std::uint64_t tuple_work(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d) {
  const auto comps = graph.components().size();
  return saturating_mul(saturating_pow(n, comps), saturating_pow(2 * d, graph.vertex_count() - comps));
}

BigInt Z_star_tuples(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d,
                     const CountingBudget& budget) {
  const std::uint64_t work = tuple_work(graph, n, d);
  if (work > budget.max_tuples) {
    throw BudgetExceeded("Z* tuple enumeration bound n^c (2d)^(V-c) = " +
                         (work == kSaturated ? std::string("> 2^64") : std::to_string(work)) +
                         " exceeds budget " + std::to_string(budget.max_tuples));
  }
  if (graph.vertex_count() > n) return 0;
  const EdgeListGraph g = as_edge_list(graph);
  const auto layouts = layout_components(g);
  DistinctValueSearch search(layouts, g.vertices, static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  return search.run();
}

BigInt Z_star_pie(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d, unsigned max_blue,
                  const CountingBudget& budget) {
  const auto missing = graph.non_edges();
  if (missing.size() > budget.max_complement_edges) {
    throw BudgetExceeded("Z* inclusion-exclusion over 2^" + std::to_string(missing.size()) +
                         " blue edge sets exceeds budget 2^" + std::to_string(budget.max_complement_edges));
  }
  const std::uint64_t subsets = std::uint64_t{1} << missing.size();
  BigInt sum = 0;
  std::vector<Edge> edges = graph.edges();
  const std::size_t base = edges.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto blue = static_cast<unsigned>(std::popcount(mask));
    if (blue > max_blue) continue;
    edges.resize(base);
    for (std::size_t k = 0; k < missing.size(); ++k) {
      if (mask >> k & 1) edges.push_back({missing[k].first, missing[k].second, EdgeColor::blue});
    }
    const BigInt term = Z_of(EdgeListGraph(graph.vertex_count(), edges), n, d, budget);
    if (blue % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

ColoredGraph::ColoredGraph(unsigned vertex_count)
    : vertex_count_(vertex_count), adjacency_(vertex_count) {}

unsigned ColoredGraph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count_++;
}

std::size_t ColoredGraph::add_edge(unsigned u, unsigned v, EdgeColor color) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) + " names a missing vertex");
  }
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
  }
  const std::size_t index = edges_.size();
  edges_.push_back({u, v, color});
  adjacency_[u].emplace_back(v, index);
  adjacency_[v].emplace_back(u, index);
  return index;
}

std::size_t ColoredGraph::red_edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.color == EdgeColor::red; }));
}

std::optional<std::size_t> ColoredGraph::edge_index(unsigned u, unsigned v) const {
  if (u >= vertex_count_) return std::nullopt;
  for (const auto& [w, e] : adjacency_[u]) {
    if (w == v) return e;
  }
  return std::nullopt;
}

std::vector<std::vector<unsigned>> ColoredGraph::components() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<char> seen(vertex_count_, 0);
  for (unsigned root = 0; root < vertex_count_; ++root) {
    if (seen[root]) continue;
    std::vector<unsigned> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& [w, e] : adjacency_[comp[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::pair<unsigned, unsigned>> ColoredGraph::non_edges() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned u = 0; u < vertex_count_; ++u) {
    for (unsigned v = u + 1; v < vertex_count_; ++v) {
      if (!adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

ColoredGraph ColoredGraph::disjoint_union(const ColoredGraph& other) const {
  ColoredGraph g(vertex_count_ + other.vertex_count_);
  for (const Edge& e : edges_) g.add_edge(e.u, e.v, e.color);
  for (const Edge& e : other.edges_) g.add_edge(e.u + vertex_count_, e.v + vertex_count_, e.color);
  return g;
}

ColoredGraph ColoredGraph::induced(std::span<const unsigned> vertices) const {
  std::vector<int> index(vertex_count_, -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) index[vertices[k]] = static_cast<int>(k);
  ColoredGraph g(static_cast<unsigned>(vertices.size()));
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      g.add_edge(static_cast<unsigned>(index[e.u]), static_cast<unsigned>(index[e.v]), e.color);
    }
  }
  return g;
}

std::int64_t HeightLabelling::offset(const ColoredGraph& graph, unsigned from, unsigned to) const {
  const auto index = graph.edge_index(from, to);
  if (!index) {
    throw DomainError("no edge between " + std::to_string(from) + " and " + std::to_string(to));
  }
  if (*index >= offsets_.size()) throw DomainError("labelling does not cover every edge");
  const Edge& e = graph.edges()[*index];
  return e.u == from ? offsets_[*index] : -offsets_[*index];
}

void HeightLabelling::set(const ColoredGraph& graph, unsigned from, unsigned to, std::int64_t value) {
  const auto index = graph.edge_index(from, to);
  if (!index) {
    throw DomainError("no edge between " + std::to_string(from) + " and " + std::to_string(to));
  }
  if (offsets_.size() < graph.edges().size()) offsets_.resize(graph.edges().size(), 0);
  const Edge& e = graph.edges()[*index];
  offsets_[*index] = e.u == from ? value : -value;
}

bool HeightLabelling::is_valid_for(const ColoredGraph& graph, std::uint64_t d) const {
  if (offsets_.size() != graph.edges().size()) return false;
  for (std::size_t k = 0; k < offsets_.size(); ++k) {
    if (!edge_ok(offsets_[k], graph.edges()[k].color, static_cast<std::int64_t>(d))) return false;
  }
  return true;
}

void for_each_height_labelling(const ColoredGraph& graph, std::uint64_t d, std::uint64_t max_labellings,
                               const std::function<void(const HeightLabelling&)>& visit) {
  const auto& edges = graph.edges();
  std::vector<std::size_t> red;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].color == EdgeColor::red) red.push_back(k);
  }
  const std::uint64_t total = saturating_pow(2 * d, red.size());
  if (total > max_labellings) {
    throw BudgetExceeded("(2d)^m = " + (total == kSaturated ? std::string("> 2^64") : std::to_string(total)) +
                         " height labellings exceed budget " + std::to_string(max_labellings));
  }
  if (total == 0) return;
  const auto sd = static_cast<std::int64_t>(d);
  std::vector<std::int64_t> offsets(edges.size(), 0);
  for (std::size_t k : red) offsets[k] = -sd;
  for (;;) {
    visit(HeightLabelling(offsets));
    // Odometer over K = {-d..-1, 1..d}.
    std::size_t pos = 0;
    for (; pos < red.size(); ++pos) {
      auto& x = offsets[red[pos]];
      if (x == sd) {
        x = -sd;
        continue;
      }
      x = x == -1 ? 1 : x + 1;
      break;
    }
    if (pos == red.size()) return;
  }
}

std::int64_t incline(const ColoredGraph& graph, const HeightLabelling& omega, std::span<const unsigned> walk) {
  if (walk.empty()) throw DomainError("a walk needs at least one vertex");
  if (walk[0] >= graph.vertex_count()) throw DomainError("walk names a missing vertex");
  std::int64_t sum = 0;
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) sum += omega.offset(graph, walk[k], walk[k + 1]);
  return sum;
}

namespace {

// Potentials p with p_u - p_v = omega(u, v) along a BFS forest (root 0 per
// component); nullopt when some non-tree edge disagrees.
std::optional<std::vector<std::int64_t>> potentials(const ColoredGraph& graph, const HeightLabelling& omega) {
  if (omega.per_edge().size() != graph.edges().size()) {
    throw DomainError("labelling does not cover every edge");
  }
  const unsigned V = graph.vertex_count();
  std::vector<std::int64_t> p(V, 0);
  std::vector<char> seen(V, 0);
  for (unsigned root = 0; root < V; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<unsigned> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const unsigned u = queue[head];
      for (unsigned w = 0; w < V; ++w) {
        if (seen[w] || !graph.adjacent(u, w)) continue;
        // h_u = h_w + omega(u, w)
        p[w] = p[u] - omega.offset(graph, u, w);
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (const Edge& e : graph.edges()) {
    if (p[e.u] - p[e.v] != omega.offset(graph, e.u, e.v)) return std::nullopt;
  }
  return p;
}

}  // namespace

bool is_consistent(const ColoredGraph& graph, const HeightLabelling& omega) {
  return potentials(graph, omega).has_value();
}

BigInt z_omega(const ColoredGraph& graph, const HeightLabelling& omega, std::uint64_t n) {
  const auto p = potentials(graph, omega);
  if (!p) return 0;
  BigInt product = 1;
  for (const auto& comp : graph.components()) {
    std::int64_t lo = (*p)[comp[0]];
    std::int64_t hi = lo;
    for (unsigned v : comp) {
      lo = std::min(lo, (*p)[v]);
      hi = std::max(hi, (*p)[v]);
    }
    const std::int64_t room = static_cast<std::int64_t>(n) - (hi - lo);
    if (room <= 0) return 0;
    product *= room;
  }
  return product;
}

BigInt Z(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d, const CountingBudget& budget) {
  if (d < 1) throw DomainError("Z requires d >= 1");
  return Z_of(as_edge_list(graph), n, d, budget);
}

BigInt Z_by_labellings(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d,
                       const CountingBudget& budget) {
  if (d < 1) throw DomainError("Z requires d >= 1");
  BigInt sum = 0;
  for_each_height_labelling(graph, d, budget.max_labellings,
                            [&](const HeightLabelling& omega) { sum += z_omega(graph, omega, n); });
  return sum;
}

BigInt Z_star(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d, ZStarMethod method,
              const CountingBudget& budget) {
  require_all_red(graph);
  if (d < 1) throw DomainError("Z* requires d >= 1");
  switch (method) {
    case ZStarMethod::tuples:
      return Z_star_tuples(graph, n, d, budget);
    case ZStarMethod::pie:
      return Z_star_pie(graph, n, d, std::numeric_limits<unsigned>::max(), budget);
    case ZStarMethod::automatic:
      if (tuple_work(graph, n, d) <= budget.max_tuples) return Z_star_tuples(graph, n, d, budget);
      return Z_star_pie(graph, n, d, std::numeric_limits<unsigned>::max(), budget);
  }
  return 0;
}

BigInt Z_star_partial(const ColoredGraph& graph, std::uint64_t n, std::uint64_t d, unsigned max_blue,
                      const CountingBudget& budget) {
  require_all_red(graph);
  if (d < 1) throw DomainError("Z* requires d >= 1");
  return Z_star_pie(graph, n, d, max_blue, budget);
}

}  // namespace permstat
