#include "hamswitch/switch_chain.hpp"

#include <numeric>

#include "hamswitch/errors.hpp"

namespace hamswitch {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::string to_string(TargetClass t) { return t == TargetClass::HamCycles ? "ham" : "2factor"; }

TargetClass parse_target_class(const std::string& s) {
  if (s == "ham") return TargetClass::HamCycles;
  if (s == "2factor") return TargetClass::TwoFactors;
  throw PreconditionError("unknown class '" + s + "' (expected ham or 2factor)");
}

void ChainConfig::validate() const {
  if (k < 1) throw PreconditionError("k must be at least 1");
}

bool in_class(const Graph& g, const EdgeList& edges, TargetClass target) {
  const SubgraphClass c = classify(g, edges);
  return target == TargetClass::HamCycles ? c == SubgraphClass::HamCycle : c != SubgraphClass::Not2Factor;
}

std::optional<EdgeList> apply_switch(const EdgeList& state, const Switch& s, const Graph& g,
                                     TargetClass target) {
  const EdgeList L = canonical(s.edges);
  if (L.empty() || L.size() % 2 != 0 || L.size() != s.edges.size()) {
    throw InvalidSwitch("switch must be a nonempty even set of distinct edges");
  }
  for (const Edge& e : L) {
    if (!g.has_edge(e.u, e.v)) {
      throw InvalidSwitch("switch edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                          " is not in the graph");
    }
  }
  EdgeList next = symmetric_difference(state, L);
  if (!in_class(g, next, target)) return std::nullopt;
  return next;
}

SwitchChain::SwitchChain(const Graph& g, ChainConfig cfg, const EdgeList& start) : g_(&g), cfg_(cfg) {
  cfg_.validate();
  if (!in_class(g, start, cfg_.target)) throw PreconditionError("start state is not in the target class");
  in_state_.assign(g.m(), 0);
  nb_.assign(g.n(), {-1, -1});
  for (const Edge& e : start) {
    in_state_[g.edge_index(e.u, e.v)] = 1;
    nb_[e.u][nb_[e.u][0] < 0 ? 0 : 1] = e.v;
    nb_[e.v][nb_[e.v][0] < 0 ? 0 : 1] = e.u;
  }
  perm_.resize(g.m());
  std::iota(perm_.begin(), perm_.end(), 0);
}

EdgeList SwitchChain::state() const {
  EdgeList out;
  for (int i = 0; i < g_->m(); ++i)
    if (in_state_[i]) out.push_back(g_->edges()[i]);
  return out;
}

bool SwitchChain::try_apply(const int* idx, int count) {
  int removed = 0;
  for (int i = 0; i < count; ++i) removed += in_state_[idx[i]];
  if (2 * removed != count) return false;

  // Save neighbour slots of touched vertices for rollback.
  Vertex touched[64];
  std::array<Vertex, 2> saved[64];
  int nt = 0;
  auto touch = [&](Vertex v) {
    for (int i = 0; i < nt; ++i)
      if (touched[i] == v) return;
    touched[nt] = v;
    saved[nt] = nb_[v];
    ++nt;
  };
  for (int i = 0; i < count; ++i) {
    const Edge& e = g_->edges()[idx[i]];
    touch(e.u);
    touch(e.v);
  }
  auto rollback = [&] {
    for (int i = 0; i < nt; ++i) nb_[touched[i]] = saved[i];
  };
  auto detach = [&](Vertex a, Vertex b) {
    if (nb_[a][0] == b) nb_[a][0] = -1;
    else if (nb_[a][1] == b) nb_[a][1] = -1;
  };
  for (int i = 0; i < count; ++i) {
    if (!in_state_[idx[i]]) continue;
    const Edge& e = g_->edges()[idx[i]];
    detach(e.u, e.v);
    detach(e.v, e.u);
  }
  auto attach = [&](Vertex a, Vertex b) {
    if (nb_[a][0] < 0) nb_[a][0] = b;
    else if (nb_[a][1] < 0) nb_[a][1] = b;
    else return false;
    return true;
  };
  for (int i = 0; i < count; ++i) {
    if (in_state_[idx[i]]) continue;
    const Edge& e = g_->edges()[idx[i]];
    if (!attach(e.u, e.v) || !attach(e.v, e.u)) {
      rollback();
      return false;
    }
  }
  for (int i = 0; i < nt; ++i) {
    const auto& s = nb_[touched[i]];
    if (s[0] < 0 || s[1] < 0) {
      rollback();
      return false;
    }
  }
  if (cfg_.target == TargetClass::HamCycles) {
    const int n = g_->n();
    int len = 1;
    Vertex prev = 0, cur = nb_[0][0];
    while (cur != 0 && len <= n) {
      const Vertex nxt = nb_[cur][0] == prev ? nb_[cur][1] : nb_[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (len != n) {
      rollback();
      return false;
    }
  }
  for (int i = 0; i < count; ++i) in_state_[idx[i]] ^= 1;
  return true;
}

bool SwitchChain::step(Rng& rng, Proposal* record) {
  const std::int64_t t = steps_++;
  if (record) {
    record->step = t;
    record->edges.clear();
    record->accepted = false;
    record->lazy_hold = false;
  }
  if (cfg_.lazy && rng.coin()) {
    if (record) record->lazy_hold = true;
    return false;
  }
  const int ell = 1 + rng.below_int(cfg_.k);
  const int m = g_->m();
  const int count = 2 * ell;
  if (count > m) return false;
  for (int i = 0; i < count; ++i) {
    const int j = i + rng.below_int(m - i);
    std::swap(perm_[i], perm_[j]);
  }
  int idx[64];
  if (count > 64) throw PreconditionError("switch size above 32 is not supported by the sampler");
  std::copy(perm_.begin(), perm_.begin() + count, idx);
  const bool ok = try_apply(idx, count);
  if (record) {
    std::sort(idx, idx + count);
    for (int i = 0; i < count; ++i) record->edges.push_back(g_->edges()[idx[i]]);
    record->accepted = ok;
  }
  return ok;
}

Trajectory run_chain(const Graph& g, const ChainConfig& cfg, const EdgeList& start, std::int64_t steps) {
  SwitchChain chain(g, cfg, canonical(start));
  Rng rng(cfg.seed);
  Trajectory t;
  t.config = cfg;
  t.start = canonical(start);
  t.proposals.resize(static_cast<std::size_t>(steps));
  for (std::int64_t i = 0; i < steps; ++i) chain.step(rng, &t.proposals[static_cast<std::size_t>(i)]);
  t.final_state = chain.state();
  return t;
}

EdgeList replay(const Graph& g, const Trajectory& t) {
  EdgeList cur = t.start;
  for (const Proposal& p : t.proposals) {
    if (p.edges.empty()) continue;
    const auto next = apply_switch(cur, Switch{p.edges}, g, t.config.target);
    if (next.has_value() != p.accepted) {
      throw InvariantViolation("replay disagrees with recorded acceptance at step " + std::to_string(p.step));
    }
    if (next) cur = *next;
  }
  if (cur != t.final_state) throw InvariantViolation("replay does not reproduce the final state");
  return cur;
}

Rational switch_probability(int ell, int m, const ChainConfig& cfg) {
  const BigInt c = binomial(m, 2 * ell);
  if (c == 0 || ell < 1 || ell > cfg.k) return Rational(0);
  Rational p(BigInt(1), BigInt(cfg.k) * c);
  if (cfg.lazy) p /= 2;
  return p;
}

Rational transition_probability(const EdgeList& x, const EdgeList& y, const ChainConfig& cfg,
                                const Graph& g) {
  if (!in_class(g, x, cfg.target) || !in_class(g, y, cfg.target)) {
    throw PreconditionError("transition_probability: both states must be in the target class");
  }
  const EdgeList d = symmetric_difference(canonical(x), canonical(y));
  if (d.empty()) throw PreconditionError("transition_probability is defined for distinct states only");
  if (d.size() % 2 != 0) return Rational(0);
  const int ell = static_cast<int>(d.size() / 2);
  if (ell > cfg.k) return Rational(0);
  return switch_probability(ell, g.m(), cfg);
}

Theta theta(const ChainConfig& cfg, const Graph& g) {
  cfg.validate();
  const int m = g.m();
  if (m < 2) throw PreconditionError("theta: graph needs at least two edges");
  Theta out;
  out.clamped = m < 2 * cfg.k;
  for (int ell = 1; ell <= cfg.k && 2 * ell <= m; ++ell) {
    const Rational p = switch_probability(ell, m, cfg);
    if (out.ell == 0 || p < out.value) {
      out.value = p;
      out.ell = ell;
    }
  }
  return out;
}

}  // namespace hamswitch
