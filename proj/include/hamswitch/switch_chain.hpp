#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamswitch/graph.hpp"
#include "hamswitch/rational.hpp"
#include "hamswitch/rng.hpp"

namespace hamswitch {

enum class TargetClass { HamCycles, TwoFactors };

std::string to_string(TargetClass t);
TargetClass parse_target_class(const std::string& s);

/// Even edge set L applied as E <- E xor L.
struct Switch {
  EdgeList edges;
  int size() const { return static_cast<int>(edges.size() / 2); }
};

struct ChainConfig {
  int k = 2;
  TargetClass target = TargetClass::HamCycles;
  bool lazy = false;
  std::uint64_t seed = 0;

  void validate() const;
};

/// One chain step. `edges` is empty for lazy holds and when no 2l-subset
/// exists.
struct Proposal {
  std::int64_t step = 0;
  EdgeList edges;
  bool accepted = false;
  bool lazy_hold = false;
};

struct Trajectory {
  ChainConfig config;
  EdgeList start;
  std::vector<Proposal> proposals;
  EdgeList final_state;
};

bool in_class(const Graph& g, const EdgeList& edges, TargetClass target);

/// state xor L when that lies in the target class, nullopt (rejected)
/// otherwise. Throws InvalidSwitch if L is odd, empty or not inside E(G).
std::optional<EdgeList> apply_switch(const EdgeList& state, const Switch& s, const Graph& g,
                                     TargetClass target);

/// The k-switch chain with incremental state. Proposal sampling is a partial
/// Fisher-Yates shuffle over edge indices, so each 2l-subset is exactly
/// uniform.
class SwitchChain {
 public:
  SwitchChain(const Graph& g, ChainConfig cfg, const EdgeList& start);

  /// Advances one step; returns true when the state changed.
  bool step(Rng& rng, Proposal* record = nullptr);

  EdgeList state() const;
  const ChainConfig& config() const { return cfg_; }

 private:
  bool try_apply(const int* idx, int count);

  const Graph* g_;
  ChainConfig cfg_;
  std::vector<std::uint8_t> in_state_;
  std::vector<std::array<Vertex, 2>> nb_;
  std::vector<int> perm_;
  std::int64_t steps_ = 0;
};

Trajectory run_chain(const Graph& g, const ChainConfig& cfg, const EdgeList& start, std::int64_t steps);

/// Re-applies every accepted proposal; throws InvariantViolation on mismatch.
EdgeList replay(const Graph& g, const Trajectory& t);

/// P(x, y) for x != y. Throws PreconditionError if x == y or either state
/// is outside the target class.
Rational transition_probability(const EdgeList& x, const EdgeList& y, const ChainConfig& cfg,
                                const Graph& g);

/// Probability of one specific transition with |x xor y| = 2l.
Rational switch_probability(int ell, int m, const ChainConfig& cfg);

struct Theta {
  Rational value;
  int ell = 0;           // switch size attaining the minimum
  bool clamped = false;  // |E(G)| < 2k, so only l <= |E(G)|/2 was considered
};

/// Smallest positive transition probability between distinct states:
/// min over feasible l of (1/k)/C(m, 2l), halved when lazy.
Theta theta(const ChainConfig& cfg, const Graph& g);

}  // namespace hamswitch
