#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hamswitch {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return u == x ? v : u; }
};

/// Edge sets are kept sorted by (min endpoint, max endpoint) and duplicate
/// free. All set operations below assume and preserve that form.
using EdgeList = std::vector<Edge>;

EdgeList canonical(EdgeList edges);
EdgeList symmetric_difference(const EdgeList& x, const EdgeList& y);
EdgeList set_union(const EdgeList& x, const EdgeList& y);
EdgeList set_intersection(const EdgeList& x, const EdgeList& y);
EdgeList set_minus(const EdgeList& x, const EdgeList& y);
bool contains(const EdgeList& edges, Edge e);

/// Simple undirected graph on vertices 0..n-1. When a bipartition is given,
/// part A is the prefix 0..a-1 and part B the rest, with |A| = |B|.
class Graph {
 public:
  Graph() = default;
  Graph(int n, EdgeList edges, std::optional<int> part_a = std::nullopt);

  static Graph complete(int n);
  static Graph complete_bipartite(int side);
  static Graph cycle(int n);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a,b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool bipartite() const { return part_a_.has_value(); }
  /// 0 for part A, 1 for part B. Only meaningful when bipartite().
  int side(Vertex v) const { return v < *part_a_ ? 0 : 1; }
  /// |A| (= |B|) for bipartite graphs; n otherwise.
  int part_size() const { return part_a_ ? *part_a_ : n_; }
  std::optional<int> part_a() const { return part_a_; }

 private:
  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> index_;
  std::optional<int> part_a_;
};

int min_degree(const Graph& g);

/// Checks 2*delta(G) >= n_eff + 2*slack where n_eff is the part size in
/// bipartite mode and the vertex count otherwise.
bool satisfies_degree_bound(const Graph& g, bool bipartite_mode, int slack);

enum class SubgraphClass { Not2Factor, TwoFactor, HamCycle };

std::string to_string(SubgraphClass c);

/// Throws PreconditionError if some edge is not in g.
SubgraphClass classify(const Graph& g, const EdgeList& edges);

/// Vertex sets of the connected components of (0..n-1, edges), ordered by
/// smallest vertex; singletons included.
std::vector<std::vector<Vertex>> components(int n, const EdgeList& edges);

/// Spanning 2-regular subgraph. Cycles are stored in canonical orientation:
/// starting at the smallest vertex and heading to its smaller neighbour,
/// ordered by smallest vertex.
class TwoFactor {
 public:
  TwoFactor() = default;
  static TwoFactor from_edges(const Graph& g, EdgeList edges);

  int n() const { return static_cast<int>(next_.size()); }
  const EdgeList& edges() const { return edges_; }
  const std::vector<std::vector<Vertex>>& cycles() const { return cycles_; }
  int component_count() const { return static_cast<int>(cycles_.size()); }
  bool hamiltonian() const { return cycles_.size() == 1; }
  int component_of(Vertex v) const { return comp_[v]; }
  Vertex next(Vertex v) const { return next_[v]; }
  Vertex prev(Vertex v) const { return prev_[v]; }

  friend bool operator==(const TwoFactor& a, const TwoFactor& b) { return a.edges_ == b.edges_; }

 protected:
  EdgeList edges_;
  std::vector<std::vector<Vertex>> cycles_;
  std::vector<int> comp_;
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
};

/// Connected 2-factor.
class HamCycle : public TwoFactor {
 public:
  HamCycle() = default;
  static HamCycle from_edges(const Graph& g, EdgeList edges);
  static HamCycle from_order(const Graph& g, const std::vector<Vertex>& order);
  const std::vector<Vertex>& order() const { return cycles_.front(); }
};

enum class Side : std::uint8_t { First, Second };

/// Closed trail whose edges alternate between two 2-factors. vertices[i] is
/// the tail of edges[i] in traversal order; the trail returns to vertices[0].
struct AlternatingCircuit {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Side> sides;

  std::size_t size() const { return edges.size(); }
};

/// Canonical decomposition of x (First) and y (Second) into alternating
/// circuits. Traversal starts at the lowest vertex with unused difference
/// edges, leaves along the opposite side of the arrival edge, and breaks ties
/// by the lowest neighbour.
std::vector<AlternatingCircuit> decompose_alternating(int n, const EdgeList& x, const EdgeList& y);
std::vector<AlternatingCircuit> decompose_alternating(const TwoFactor& x, const TwoFactor& y);

}  // namespace hamswitch
