#ifndef FLATLAND_GRAPH_HPP_
#define FLATLAND_GRAPH_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace flatland {

using Vertex = int;
/// Unordered pair stored with the smaller endpoint first.
using Edge = std::array<Vertex, 2>;

/// Undirected graph without loops or multi-edges on the vertices 0..n-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  /// Duplicate pairs are merged. Throws std::invalid_argument on loops or
  /// endpoints outside 0..n-1.
  SimpleGraph(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  SimpleGraph complement() const;
  /// Edges present in both graphs; vertex counts must agree.
  SimpleGraph intersection(const SimpleGraph& other) const;
  /// True if every edge of this graph is an edge of `other` (identity labeling).
  bool is_subgraph_of(const SimpleGraph& other) const;
  /// Image under the vertex map v -> perm[v].
  SimpleGraph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Shape of one connected component.
struct ComponentShape {
  enum class Kind { kCycle, kComplete, kPath, kOther, kIsolated };
  Kind kind = Kind::kIsolated;
  int vertices = 1;
  int edges = 0;
  /// Sorted degree multiset; only populated for kOther.
  std::vector<int> degrees;

  auto operator<=>(const ComponentShape&) const = default;
};

/// Decomposition of a graph into classified components, sorted so that
/// equal graphs up to isomorphism of components compare equal.
struct GraphShape {
  int vertex_count = 0;
  std::vector<ComponentShape> components;

  /// Renders as `C_12`, `3K_4`, `7K_2`, `null_15`, `2C_9`, `C_8+K_4`,
  /// `4C_3+null_3`, ...
  std::string to_string() const;
  int count(ComponentShape::Kind kind) const;
  bool operator==(const GraphShape&) const = default;
};

/// G_c(G): u-v adjacent iff u and v have exactly `c` common neighbours in G.
SimpleGraph common_neighbor_graph(const SimpleGraph& g, int c);

GraphShape graph_shape(const SimpleGraph& g);

/// Exact isomorphism test (colour refinement followed by backtracking).
bool graphs_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace flatland

#endif  // FLATLAND_GRAPH_HPP_
