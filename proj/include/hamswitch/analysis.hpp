#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamswitch/graph.hpp"
#include "hamswitch/rational.hpp"
#include "hamswitch/switch_chain.hpp"

namespace hamswitch {

enum class EnumClass { Ham, TwoFactor, AlmostTwoFactor };

std::string to_string(EnumClass c);
EnumClass parse_enum_class(const std::string& s);

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;
inline constexpr std::size_t kDefaultMatrixCap = 2'000;

/// All members of the class, sorted lexicographically. Throws CapExceeded
/// once more than `cap` members are found.
std::vector<EdgeList> enumerate(const Graph& g, EnumClass c, std::size_t cap = kDefaultEnumCap);

/// Hamiltonian paths, each undirected path once.
std::vector<EdgeList> enumerate_ham_paths(const Graph& g, std::size_t cap = kDefaultEnumCap);

/// Bitmask over edge indices, used as a hash key for states.
using StateKey = std::vector<std::uint64_t>;
StateKey state_key(const Graph& g, const EdgeList& edges);

struct StateGraph {
  TargetClass target = TargetClass::HamCycles;
  int k = 2;
  std::vector<EdgeList> states;
  std::vector<std::vector<int>> adj;  // sorted, no self-loops

  std::size_t size() const { return states.size(); }
  /// -1 when absent.
  int index_of(const Graph& g, const EdgeList& e) const;
};

/// Enumerates the class and links states with 0 < |x xor y| <= 2k.
StateGraph build_state_graph(const Graph& g, TargetClass c, int k, std::size_t cap = kDefaultEnumCap);

/// States with 0 < |x xor y| <= 2k, both in the class (y need not be
/// enumerated).
std::vector<EdgeList> switch_neighbors(const Graph& g, const EdgeList& x, TargetClass c, int k);

struct Reachability {
  std::size_t visited = 0;
  bool found = false;
  bool complete = false;  // the whole component of `from` was explored
};

/// BFS from `from` without enumerating the class, stopping at `to` or once
/// `cap` states have been discovered.
Reachability bfs_reach(const Graph& g, const EdgeList& from, const EdgeList& to, TargetClass c, int k,
                       std::size_t cap = kDefaultEnumCap);

struct Irreducibility {
  bool connected = true;
  int components = 0;
  std::vector<int> component_of;
  std::vector<int> representatives;  // smallest state index per component
};

Irreducibility check_irreducible(const StateGraph& sg);

struct ChainAlgebra {
  bool symmetric = true;
  bool stochastic = true;          // rows sum to exactly 1
  bool doubly_stochastic = true;   // columns too, so uniform is stationary
  bool adjacency_matches = true;   // arc iff positive probability
  Rational min_positive;           // smallest off-diagonal entry
};

/// Exact rational checks of the k-switch transition matrix on sg.
ChainAlgebra check_chain_algebra(const StateGraph& sg, const Graph& g, const ChainConfig& cfg);

struct MixReport {
  std::size_t omega = 0;
  bool lazy = false;
  int k = 0;
  Rational theta;
  double lambda1 = 0;     // second largest eigenvalue
  double lambda_min = 0;  // smallest eigenvalue
  std::vector<double> eps;
  std::vector<long long> tau;       // -1 if not reached within t_max
  std::vector<double> sinclair;     // (ln|Omega| + ln(1/eps)) / (1 - lambda*)
  std::vector<int> starts;          // start state indices of the curves
  std::vector<int> t_grid;          // time points of the curves
  std::vector<std::vector<double>> tv;  // tv[s][t], per start and time
  long long trials = 0;             // 0 for exact reports
  std::uint64_t seed = 0;
};

/// Exact Delta_x(t) for every start, tau(eps), spectrum. Throws
/// CapExceeded above `cap` states.
MixReport mixing_exact(const StateGraph& sg, const Graph& g, const ChainConfig& cfg, const std::vector<double>& eps,
                       std::size_t cap = kDefaultMatrixCap, long long t_max = 100000);

/// Plug-in TV estimates against the uniform distribution on omega.
/// Trial i of start s uses seed Rng::derive(cfg.seed, s * trials + i).
MixReport mixing_empirical(const Graph& g, const ChainConfig& cfg, const std::vector<EdgeList>& omega,
                           const std::vector<int>& starts, long long trials, const std::vector<int>& t_grid);

/// |almost 2-factors| / |2-factors|.
Rational p_stability_ratio(const Graph& g, std::size_t cap = kDefaultEnumCap);

/// Worker count from HAMSWITCH_THREADS, else hardware concurrency.
unsigned worker_threads();

}  // namespace hamswitch
