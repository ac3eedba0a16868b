#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hamswitch/analysis.hpp"
#include "hamswitch/graph.hpp"
#include "hamswitch/rational.hpp"
#include "hamswitch/rng.hpp"

namespace hamswitch {

/// Subgraph with all degrees <= 2 and total deficit sum |2 - d_v| <= 2.
/// deficit is empty for a 2-factor, {kappa, lambda} (kappa < lambda) for two
/// degree-1 vertices, or {kappa, kappa} for one isolated vertex.
struct AlmostTwoFactor {
  EdgeList edges;
  std::vector<Vertex> deficit;

  static AlmostTwoFactor from_edges(const Graph& g, EdgeList edges);
  bool is_two_factor() const { return deficit.empty(); }
  friend bool operator==(const AlmostTwoFactor& a, const AlmostTwoFactor& b) { return a.edges == b.edges; }
};

/// Outcome of one JS transition. type is -1 for a hold. For type 1, k is
/// the far end of the deleted edge jk.
struct JsMove {
  int type = -1;
  Vertex i = -1, j = -1, k = -1;
};

/// One JS step: uniform ordered pair (i, j) over all n^2 pairs, i = j holds.
AlmostTwoFactor js_step(const AlmostTwoFactor& x, const Graph& g, Rng& rng, JsMove* move = nullptr);

/// Probabilities are multiples of 1/(2n^2); units counts those multiples.
struct JsTransition {
  EdgeList target;
  int units = 0;
  int type = 0;
};

/// All non-hold transitions out of x, merged by target, sorted by target.
std::vector<JsTransition> js_transitions(const AlmostTwoFactor& x, const Graph& g);

struct JsAdjacency {
  bool adjacent = false;
  Rational probability;  // P(x, y); 0 when not adjacent
};

JsAdjacency js_adjacent(const AlmostTwoFactor& x, const AlmostTwoFactor& y, const Graph& g);

struct JsStateGraph {
  std::vector<EdgeList> states;  // sorted, as enumerate(AlmostTwoFactor)
  std::vector<char> two_factor;
  std::vector<std::vector<std::pair<int, int>>> out;  // (target, units)
};

/// Needs |E(G)| <= 64.
JsStateGraph build_js_state_graph(const Graph& g, std::size_t cap = kDefaultEnumCap);

struct KjsResult {
  bool finite = true;
  int value = 0;  // max distance to a 2-factor
  std::vector<int> dist;
  std::optional<EdgeList> witness;  // unreachable state when !finite
};

/// Multi-source BFS from the 2-factors. Throws PreconditionError if G has no
/// 2-factor.
KjsResult k_js(const JsStateGraph& sg);
KjsResult k_js(const Graph& g, std::size_t cap = kDefaultEnumCap);

struct Repair {
  EdgeList factor;
  Vertex z = -1;  // -1 when x was already a 2-factor or for the fallback
  int difference = 0;
  bool fallback = false;
};

/// sigma: closes the deficit with one exchange at the smallest z in
/// N(x) with z^- in N(y) (difference <= 3). If no such z exists, every
/// other single exchange is tried; failing that, the nearest 2-factor of G
/// by exhaustive search is returned with fallback = true. Throws
/// PreconditionError if G has no 2-factor.
Repair repair(const AlmostTwoFactor& x, const Graph& g);

struct JsReport {
  int n = 0;
  std::size_t almost = 0;       // |F'_G|, 2-factors included
  std::size_t factors = 0;      // |F_G|
  bool symmetric = true;        // exact P(x,y) = P(y,x) on every arc
  bool stochastic = true;       // no row exceeds probability 1
  int max_out_degree = 0;
  int max_in_degree = 0;
  Rational max_inverse_probability;  // max over arcs of 1/P
  KjsResult kjs;
  int repair_max_difference = 0;
  std::size_t repair_fallbacks = 0;  // deficient states with no 3-edit repair
  std::optional<EdgeList> repair_witness;  // first such state
  std::size_t sigma_preimage_max = 0;  // max |sigma^-1(F)| over deficient states
  Rational ratio;                      // |F'_G| / |F_G|
};

JsReport js_exact(const Graph& g, std::size_t cap = kDefaultEnumCap);

}  // namespace hamswitch
