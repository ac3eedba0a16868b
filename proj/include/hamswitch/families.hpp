#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hamswitch/graph.hpp"
#include "hamswitch/monotone.hpp"

namespace hamswitch {

struct ColoredGraph {
  Graph graph;
  std::vector<char> blue;  // indexed like graph.edges()

  bool is_blue(const Edge& e) const { return blue[graph.edge_index(e.u, e.v)] != 0; }
};

struct ParityExample {
  int m = 0;
  ColoredGraph cg;
  HamCycle h1, h2;
};

/// Vertex v_{i,j} (i in 1..3, j in 1..m) has id (i-1)*m + (j-1).
ParityExample build_parity_example(int m);

enum class Parity { Even, Odd };
std::string to_string(Parity p);

Parity blue_parity(const ColoredGraph& cg, const EdgeList& h);

/// Vertex v_i has id i-1.
struct GadgetX {
  int ell = 0;
  Graph graph;
  EdgeList forced;  // F
  EdgeList cycle;   // C, the remaining 2l edges
  /// F plus each of the two perfect matchings of C.
  std::array<EdgeList, 2> hamiltonian_paths() const;
};

GadgetX build_gadget_x(int ell);

struct LockedExample {
  int k = 0, ell = 0, r = 0, n = 0;
  int size_a = 0, size_b = 0;
  Graph graph;  // X on vertices 0..r-1 inside A = 0..size_a-1
};

/// Smallest n >= 3k+5 with n + r odd and |B| >= 1.
int locked_default_n(int k);
LockedExample build_locked_example(int k, int n);

/// Row i covers columns 1..min(i+1, n).
MonotoneGraph build_staircase(int n);

/// Planted Hamiltonian cycle plus random edges until the minimum degree is
/// reached. In bipartite mode n is the part size and the graph has 2n
/// vertices.
Graph random_dense_graph(int n, int delta_min, std::uint64_t seed, bool bipartite);

/// Random vertex order cut into adjacent runs, joined with join_paths.
HamCycle random_ham_cycle(const Graph& g, std::uint64_t seed);

/// random_ham_cycle followed by `moves` accepted random 2-switches on
/// 2-factors.
TwoFactor random_two_factor(const Graph& g, std::uint64_t seed, int moves);

/// Random monotone graph with per-side size n and every degree >= ceil(n/2).
MonotoneGraph random_dense_monotone(int n, std::uint64_t seed);

}  // namespace hamswitch
