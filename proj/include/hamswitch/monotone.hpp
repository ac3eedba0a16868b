#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hamswitch/graph.hpp"

namespace hamswitch {

/// Bipartite graph with A = {a_1..a_n} = vertices 0..n-1 and
/// B = {b_1..b_n} = vertices n..2n-1, where a_i is adjacent to b_j exactly
/// for r_i <= j <= t_i (1-based).
class MonotoneGraph {
 public:
  MonotoneGraph() = default;
  /// Throws PreconditionError if the intervals are not monotone.
  MonotoneGraph(int n, std::vector<int> r, std::vector<int> t);

  int n() const { return n_; }
  const std::vector<int>& r() const { return r_; }
  const std::vector<int>& t() const { return t_; }
  const Graph& graph() const { return graph_; }

  Vertex a(int i) const { return i - 1; }
  Vertex b(int j) const { return n_ + j - 1; }
  /// Split point: A1 = a_1..a_h, B1 = b_1..b_h.
  int half() const { return (n_ + 1) / 2; }
  /// Position in the order a_{h+1} < .. < a_n < a_1 < .. < a_h (same for B).
  int rank(Vertex v) const;
  bool in_first_half(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<int> r_, t_;
  Graph graph_;
};

/// Interval form of g under its own vertex order, nullopt if not monotone.
/// Throws PreconditionError unless g is bipartite with A = 0..n-1.
std::optional<MonotoneGraph> validate_monotone(const Graph& g);

struct Quadrants {
  std::vector<Vertex> a1, a2, b1, b2;
};

/// Requires minimum degree >= n/2; throws InvariantViolation if a quadrant
/// subgraph is not complete bipartite.
Quadrants quadrants(const MonotoneGraph& mg);

enum PathLabel { kPathA1 = 0, kPathB1 = 1, kPathA2B2 = 2 };

/// Three labelled vertex-disjoint paths covering all vertices; some may be
/// empty. Each path starts at its lowest-ranked anchor.
struct PathSystem {
  std::array<std::vector<Vertex>, 3> paths;

  EdgeList edges() const;
  bool operator==(const PathSystem&) const = default;
};

struct Phi1Result {
  PathSystem ps;
  EdgeList cut;
  EdgeList glue;
};

Phi1Result phi1_record(const TwoFactor& f, const MonotoneGraph& mg);
PathSystem phi1(const TwoFactor& f, const MonotoneGraph& mg);

/// Throws ReconstructionError when ps is not the image of a 2-factor.
TwoFactor phi1_inverse(const PathSystem& ps, const MonotoneGraph& mg);

struct JoinResult {
  std::vector<Vertex> order;  // Hamiltonian cycle as a cyclic order
  EdgeList cycle;
  int edits = 0;  // |E(H) xor E(paths)|
  int merges = 0;
  /// The merge/close moves got stuck (possible when 2*delta equals the part
  /// size) and the cycle came from the bounded search instead.
  bool fallback = false;
};

/// Joins vertex-disjoint covering paths into a Hamiltonian cycle, at most
/// three edge edits per merge and three for closing. If no sequence of such
/// moves works, searches for a Hamiltonian cycle with at most 2k edges
/// outside the paths (so at most 3k edits) before giving up.
JoinResult join_paths(const std::vector<std::vector<Vertex>>& paths, const Graph& g, bool bipartite,
                      bool enforce_degree = true);

struct PhiResult {
  Phi1Result phi1;
  JoinResult join;
};

PhiResult phi_record(const TwoFactor& f, const MonotoneGraph& mg);
EdgeList phi(const TwoFactor& f, const MonotoneGraph& mg);

}  // namespace hamswitch
