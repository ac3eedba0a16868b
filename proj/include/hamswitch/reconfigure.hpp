#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hamswitch/graph.hpp"
#include "hamswitch/switch_chain.hpp"

namespace hamswitch {

enum class StepKind { ReconnectGeneral, ReconnectSpecial, Macro4Switch, DirectCircuit, Glue };

std::string to_string(StepKind k);

struct TraceStep {
  Switch sw;
  EdgeList state;  // state after the switch
  StepKind kind = StepKind::Glue;
  std::string detail;
  std::vector<TraceStep> substeps;
};

struct TransformTrace {
  EdgeList initial;
  std::vector<TraceStep> steps;
  EdgeList final_state;
};

/// Walk a1..a6 with a1a2, a3a4, a5a6 in the first factor and a2a3, a4a5 in
/// the second.
struct AlternatingWalk6 {
  std::array<Vertex, 6> a{};
};

struct ReconfigureOptions {
  bool bipartite = false;
  /// When false the minimum degree checks are skipped and, if the standard
  /// construction gets stuck, every walk and every direct circuit of size
  /// <= 4 is tried before giving up. Meant for small smoke tests only.
  bool enforce_degree = true;
};

/// Alternating closed trail of 4 or 6 edges inside x xor y (first edge from
/// x), shortest first, lowest start vertex first.
std::optional<AlternatingCircuit> find_short_circuit(int n, const EdgeList& x, const EdgeList& y);

/// nullopt if x == y, a short circuit exists, or no walk with a1 != a6 is
/// found in the canonical decomposition.
std::optional<AlternatingWalk6> find_walk6(int n, const EdgeList& x, const EdgeList& y);
std::optional<AlternatingWalk6> find_walk6(const HamCycle& h1, const HamCycle& h2);

/// Reconnection of a 2-factor into a Hamiltonian cycle using
/// switches of size <= 3, never increasing the distance to h.
TransformTrace reconnect(const TwoFactor& t, const HamCycle& h, const Graph& g,
                         const ReconfigureOptions& opt = {});

struct MacroResult {
  StepKind kind = StepKind::DirectCircuit;  // or Macro4Switch
  Switch sw;
  EdgeList t;  // h1 xor sw
  std::optional<AlternatingWalk6> walk;
  Vertex b = -1;
  Vertex c = -1;
};

/// One switch of size <= 4 from h1 towards h2 giving a 2-factor with at most
/// three components and strictly smaller distance to h2.
MacroResult macro_step(const HamCycle& h1, const HamCycle& h2, const Graph& g,
                       const ReconfigureOptions& opt = {});

/// Hamiltonian cycles only; every top-level step is a composed switch of
/// size <= 10 with the macro step and reconnection as substeps.
TransformTrace transform_ham(const HamCycle& h1, const HamCycle& h2, const Graph& g,
                             const ReconfigureOptions& opt = {});

/// 2-factors, switches of size <= 4.
TransformTrace transform_2factor(const TwoFactor& f1, const TwoFactor& f2, const Graph& g,
                                 const ReconfigureOptions& opt = {});

/// Throws InvariantViolation unless every step is a valid switch of at most
/// max_size edges pairs and lands in the target class, and the trace ends at
/// final_state.
void verify_trace(const TransformTrace& t, const Graph& g, TargetClass target, int max_size);

}  // namespace hamswitch
