#include "hamswitch/analysis.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <thread>

#include "hamswitch/errors.hpp"

namespace hamswitch {

std::string to_string(EnumClass c) {
  switch (c) {
    case EnumClass::Ham: return "ham";
    case EnumClass::TwoFactor: return "2factor";
    case EnumClass::AlmostTwoFactor: return "almost";
  }
  return "?";
}

EnumClass parse_enum_class(const std::string& s) {
  if (s == "ham") return EnumClass::Ham;
  if (s == "2factor") return EnumClass::TwoFactor;
  if (s == "almost") return EnumClass::AlmostTwoFactor;
  throw PreconditionError("unknown class '" + s + "' (expected ham, 2factor or almost)");
}

namespace {

void enumerate_factors(const Graph& g, bool allow_deficit, std::size_t cap, std::vector<EdgeList>& out) {
  const int n = g.n();
  std::vector<int> deg(n, 0);
  EdgeList chosen;
  std::function<void(Vertex, int)> rec;
  // Choose `need` more edges from v to later vertices, starting at neighbour slot `from`.
  std::function<void(Vertex, int, std::size_t, int)> pick = [&](Vertex v, int need, std::size_t from, int used) {
    if (need == 0) {
      rec(v + 1, used);
      return;
    }
    const auto& nb = g.neighbors(v);
    for (std::size_t i = from; i < nb.size(); ++i) {
      const Vertex w = nb[i];
      if (w < v || deg[w] >= 2) continue;
      ++deg[v];
      ++deg[w];
      chosen.emplace_back(v, w);
      pick(v, need - 1, i + 1, used);
      chosen.pop_back();
      --deg[v];
      --deg[w];
    }
  };
  rec = [&](Vertex v, int used) {
    if (v == n) {
      if (out.size() >= cap) throw CapExceeded("enumeration exceeded cap of " + std::to_string(cap), out.size());
      out.push_back(chosen);
      return;
    }
    const int c = deg[v];
    for (int t = 2; t >= (allow_deficit ? 0 : 2); --t) {
      if (t < c || used + (2 - t) > 2) continue;
      pick(v, t - c, 0, used + (2 - t));
    }
  };
  if (n >= 3) rec(0, 0);
}

void enumerate_cycles(const Graph& g, std::size_t cap, std::vector<EdgeList>& out) {
  const int n = g.n();
  if (n < 3) return;
  std::vector<Vertex> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<void()> rec = [&]() {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(last, 0) && path[1] < path.back()) {
        if (out.size() >= cap) throw CapExceeded("enumeration exceeded cap of " + std::to_string(cap), out.size());
        EdgeList e;
        for (int i = 0; i < n; ++i) e.emplace_back(path[i], path[(i + 1) % n]);
        out.push_back(canonical(std::move(e)));
      }
      return;
    }
    for (Vertex w : g.neighbors(last)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      rec();
      path.pop_back();
      used[w] = 0;
    }
  };
  rec();
}

bool is_hamiltonian_2regular(int n, const EdgeList& e) {
  std::vector<std::array<Vertex, 2>> nb(n, {-1, -1});
  for (const Edge& x : e) {
    nb[x.u][nb[x.u][0] < 0 ? 0 : 1] = x.v;
    nb[x.v][nb[x.v][0] < 0 ? 0 : 1] = x.u;
  }
  int len = 1;
  Vertex prev = 0, cur = nb[0][0];
  while (cur != 0 && len <= n) {
    const Vertex nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = nxt;
    ++len;
  }
  return len == n;
}

}  // namespace

std::vector<EdgeList> enumerate(const Graph& g, EnumClass c, std::size_t cap) {
  std::vector<EdgeList> out;
  switch (c) {
    case EnumClass::Ham: enumerate_cycles(g, cap, out); break;
    case EnumClass::TwoFactor: enumerate_factors(g, false, cap, out); break;
    case EnumClass::AlmostTwoFactor: enumerate_factors(g, true, cap, out); break;
  }
  for (auto& e : out) e = canonical(std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeList> enumerate_ham_paths(const Graph& g, std::size_t cap) {
  const int n = g.n();
  std::vector<EdgeList> out;
  if (n < 2) return out;
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(path.size()) == n) {
      if (path.back() > path.front()) {
        if (out.size() >= cap) throw CapExceeded("enumeration exceeded cap of " + std::to_string(cap), out.size());
        EdgeList e;
        for (int i = 1; i < n; ++i) e.emplace_back(path[i - 1], path[i]);
        out.push_back(canonical(std::move(e)));
      }
      return;
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      rec();
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used[s] = 1;
    rec();
    used[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

StateKey state_key(const Graph& g, const EdgeList& edges) {
  StateKey k(static_cast<std::size_t>((g.m() + 63) / 64), 0);
  for (const Edge& e : edges) {
    const int i = g.edge_index(e.u, e.v);
    k[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
  }
  return k;
}

int StateGraph::index_of(const Graph& g, const EdgeList& e) const {
  (void)g;
  auto it = std::lower_bound(states.begin(), states.end(), e);
  if (it == states.end() || *it != e) return -1;
  return static_cast<int>(it - states.begin());
}

std::vector<EdgeList> switch_neighbors(const Graph& g, const EdgeList& x, TargetClass c, int k) {
  const int n = g.n();
  std::vector<char> in_x(g.m(), 0);
  for (const Edge& e : x) in_x[g.edge_index(e.u, e.v)] = 1;
  absl::flat_hash_set<StateKey> seen;
  std::vector<EdgeList> out;
  std::vector<int> def(n, 0);
  std::vector<std::size_t> pick;
  EdgeList added;
  std::vector<Vertex> touched;

  auto emit = [&]() {
    EdgeList removed;
    for (std::size_t i : pick) removed.push_back(x[i]);
    EdgeList y = set_union(set_minus(x, removed), canonical(added));
    if (c == TargetClass::HamCycles && !is_hamiltonian_2regular(n, y)) return;
    StateKey key = state_key(g, y);
    if (seen.insert(std::move(key)).second) out.push_back(std::move(y));
  };
  std::function<void()> fill = [&]() {
    Vertex v = -1;
    for (Vertex t : touched)
      if (def[t] > 0 && (v < 0 || t < v)) v = t;
    if (v < 0) {
      emit();
      return;
    }
    for (Vertex u : touched) {
      if (u == v || def[u] == 0) continue;
      const int ei = g.edge_index(v, u);
      if (ei < 0 || in_x[ei]) continue;
      const Edge e(v, u);
      if (std::find(added.begin(), added.end(), e) != added.end()) continue;
      --def[v];
      --def[u];
      added.push_back(e);
      fill();
      added.pop_back();
      ++def[v];
      ++def[u];
    }
  };
  std::function<void(std::size_t, int)> choose = [&](std::size_t from, int left) {
    if (left == 0) {
      touched.clear();
      for (std::size_t i : pick) {
        for (Vertex v : {x[i].u, x[i].v}) {
          if (def[v] == 0) touched.push_back(v);
          ++def[v];
        }
      }
      fill();
      for (std::size_t i : pick) {
        --def[x[i].u];
        --def[x[i].v];
      }
      return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= x.size(); ++i) {
      pick.push_back(i);
      choose(i + 1, left - 1);
      pick.pop_back();
    }
  };
  for (int l = 1; l <= k && l <= static_cast<int>(x.size()); ++l) choose(0, l);
  std::sort(out.begin(), out.end());
  return out;
}

StateGraph build_state_graph(const Graph& g, TargetClass c, int k, std::size_t cap) {
  StateGraph sg;
  sg.target = c;
  sg.k = k;
  sg.states = enumerate(g, c == TargetClass::HamCycles ? EnumClass::Ham : EnumClass::TwoFactor, cap);
  sg.adj.resize(sg.states.size());
  for (std::size_t i = 0; i < sg.states.size(); ++i) {
    for (const EdgeList& y : switch_neighbors(g, sg.states[i], c, k)) {
      const int j = sg.index_of(g, y);
      if (j < 0) throw InvariantViolation("state graph: neighbour missing from enumeration");
      sg.adj[i].push_back(j);
    }
    std::sort(sg.adj[i].begin(), sg.adj[i].end());
  }
  return sg;
}

Reachability bfs_reach(const Graph& g, const EdgeList& from, const EdgeList& to, TargetClass c, int k,
                       std::size_t cap) {
  Reachability r;
  absl::flat_hash_set<StateKey> seen;
  std::deque<EdgeList> queue{from};
  seen.insert(state_key(g, from));
  const StateKey goal = state_key(g, to);
  while (!queue.empty()) {
    EdgeList x = std::move(queue.front());
    queue.pop_front();
    ++r.visited;
    if (state_key(g, x) == goal) {
      r.found = true;
      return r;
    }
    for (EdgeList& y : switch_neighbors(g, x, c, k)) {
      if (!seen.insert(state_key(g, y)).second) continue;
      if (seen.size() > cap) return r;
      queue.push_back(std::move(y));
    }
  }
  r.complete = true;
  return r;
}

Irreducibility check_irreducible(const StateGraph& sg) {
  Irreducibility r;
  const std::size_t n = sg.size();
  r.component_of.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (r.component_of[s] >= 0) continue;
    const int id = r.components++;
    r.representatives.push_back(static_cast<int>(s));
    std::deque<int> q{static_cast<int>(s)};
    r.component_of[s] = id;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : sg.adj[static_cast<std::size_t>(x)])
        if (r.component_of[static_cast<std::size_t>(y)] < 0) {
          r.component_of[static_cast<std::size_t>(y)] = id;
          q.push_back(y);
        }
    }
  }
  r.connected = r.components <= 1;
  return r;
}

ChainAlgebra check_chain_algebra(const StateGraph& sg, const Graph& g, const ChainConfig& cfg) {
  ChainAlgebra out;
  const std::size_t n = sg.size();
  std::vector<Rational> col(n, Rational(0));
  bool have_min = false;
  for (std::size_t i = 0; i < n; ++i) {
    Rational row(0);
    for (int j : sg.adj[i]) {
      const EdgeList d = symmetric_difference(sg.states[i], sg.states[static_cast<std::size_t>(j)]);
      const Rational p = switch_probability(static_cast<int>(d.size() / 2), g.m(), cfg);
      if (p <= 0) out.adjacency_matches = false;
      if (transition_probability(sg.states[i], sg.states[static_cast<std::size_t>(j)], cfg, g) != p) {
        out.adjacency_matches = false;
      }
      const auto& back = sg.adj[static_cast<std::size_t>(j)];
      if (!std::binary_search(back.begin(), back.end(), static_cast<int>(i))) out.symmetric = false;
      row += p;
      col[static_cast<std::size_t>(j)] += p;
      if (!have_min || p < out.min_positive) {
        out.min_positive = p;
        have_min = true;
      }
    }
    const Rational self = Rational(1) - row;
    if (self < 0) out.stochastic = false;
    col[i] += self;
    if (row + self != 1) out.stochastic = false;
  }
  for (const Rational& c : col)
    if (c != 1) out.doubly_stochastic = false;
  return out;
}

namespace {

struct SparseRow {
  std::vector<std::pair<int, double>> entries;
};

std::vector<SparseRow> double_rows(const StateGraph& sg, const Graph& g, const ChainConfig& cfg) {
  std::vector<SparseRow> rows(sg.size());
  for (std::size_t i = 0; i < sg.size(); ++i) {
    Rational off(0);
    for (int j : sg.adj[i]) {
      const EdgeList d = symmetric_difference(sg.states[i], sg.states[static_cast<std::size_t>(j)]);
      const Rational p = switch_probability(static_cast<int>(d.size() / 2), g.m(), cfg);
      off += p;
      rows[i].entries.emplace_back(j, to_double(p));
    }
    rows[i].entries.emplace_back(static_cast<int>(i), to_double(Rational(1) - off));
  }
  return rows;
}

}  // namespace

MixReport mixing_exact(const StateGraph& sg, const Graph& g, const ChainConfig& cfg, const std::vector<double>& eps,
                       std::size_t cap, long long t_max) {
  const std::size_t N = sg.size();
  if (N > cap) {
    throw CapExceeded("state space of " + std::to_string(N) + " exceeds the exact-matrix cap of " +
                          std::to_string(cap) + "; use the empirical mode",
                      N);
  }
  if (N == 0) throw PreconditionError("mixing_exact: empty state space");
  MixReport rep;
  rep.omega = N;
  rep.lazy = cfg.lazy;
  rep.k = cfg.k;
  rep.theta = theta(cfg, g).value;
  rep.eps = eps;
  const auto rows = double_rows(sg, g, cfg);

  if (N >= 2) {
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (const auto& [j, p] : rows[i].entries) P(static_cast<Eigen::Index>(i), j) = p;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(P, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    rep.lambda1 = ev(static_cast<Eigen::Index>(N) - 2);
    rep.lambda_min = ev(0);
  } else {
    rep.lambda1 = 0;
    rep.lambda_min = 1;
  }
  const double lambda_star = cfg.lazy ? rep.lambda1 : std::max(rep.lambda1, std::fabs(rep.lambda_min));
  for (double e : eps) {
    rep.sinclair.push_back(N == 1 ? 0.0
                           : lambda_star < 1 ? (std::log(static_cast<double>(N)) + std::log(1.0 / e)) / (1.0 - lambda_star)
                                             : INFINITY);
  }

  const double target = eps.empty() ? 0.0 : *std::min_element(eps.begin(), eps.end());
  const double u = 1.0 / static_cast<double>(N);
  const auto n_idx = static_cast<Eigen::Index>(N);
  Eigen::MatrixXd dist = Eigen::MatrixXd::Identity(n_idx, n_idx);  // row x = distribution from x
  rep.starts.resize(N);
  for (std::size_t x = 0; x < N; ++x) rep.starts[x] = static_cast<int>(x);
  rep.tv.assign(N, {});
  rep.tau.assign(eps.size(), -1);
  auto tv_rows = [&](const Eigen::MatrixXd& d) {
    std::vector<double> out(N);
    for (std::size_t x = 0; x < N; ++x) out[x] = 0.5 * (d.row(static_cast<Eigen::Index>(x)).array() - u).abs().sum();
    return out;
  };
  auto worst_of = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); };
  std::map<long long, std::vector<double>> samples;

  // Stepwise while cheap, then repeated squaring; worst TV is nonincreasing in t.
  std::size_t nnz = 0;
  for (const auto& r : rows) nnz += r.entries.size();
  const long long step_budget = std::max<long long>(64, static_cast<long long>(4e9 / static_cast<double>(N * nnz + 1)));
  long long t = 0;
  double worst = 1;
  Eigen::VectorXd next(n_idx);
  for (;; ++t) {
    auto tv = tv_rows(dist);
    worst = worst_of(tv);
    samples[t] = std::move(tv);
    for (std::size_t i = 0; i < eps.size(); ++i)
      if (rep.tau[i] < 0 && worst <= eps[i] + 1e-12) rep.tau[i] = t;
    if (worst <= target + 1e-12 || t >= t_max || t >= step_budget) break;
    // P is symmetric, so the row vector update is P applied to the column.
    for (Eigen::Index x = 0; x < n_idx; ++x) {
      for (std::size_t y = 0; y < N; ++y) {
        double s = 0;
        for (const auto& [j, p] : rows[y].entries) s += p * dist(x, j);
        next(static_cast<Eigen::Index>(y)) = s;
      }
      dist.row(x) = next.transpose();
    }
  }
  if (worst > target + 1e-12 && t < t_max) {
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n_idx, n_idx);
    for (std::size_t i = 0; i < N; ++i)
      for (const auto& [j, p] : rows[i].entries) P(static_cast<Eigen::Index>(i), j) = p;
    std::vector<Eigen::MatrixXd> pow{P};  // pow[i] = P^(2^i)
    for (std::size_t i = 0; i < eps.size(); ++i) {
      if (rep.tau[i] >= 0) continue;
      // Largest t' >= t with worst TV above eps, found bit by bit.
      Eigen::MatrixXd cur = dist;
      long long at = t;
      std::size_t top = 0;
      for (;; ++top) {
        if (top == pow.size()) pow.push_back(pow.back() * pow.back());
        const long long step = 1LL << top;
        if (at + step > t_max) break;
        Eigen::MatrixXd cand = cur * pow[top];
        auto tv = tv_rows(cand);
        const double w = worst_of(tv);
        samples[at + step] = std::move(tv);
        if (w <= eps[i] + 1e-12) break;
        cur = std::move(cand);
        at += step;
      }
      for (std::size_t b = top; b-- > 0;) {
        const long long step = 1LL << b;
        if (at + step > t_max) continue;
        Eigen::MatrixXd cand = cur * pow[b];
        auto tv = tv_rows(cand);
        const double w = worst_of(tv);
        samples[at + step] = std::move(tv);
        if (w > eps[i] + 1e-12) {
          cur = std::move(cand);
          at += step;
        }
      }
      if (at < t_max) rep.tau[i] = at + 1;
    }
  }
  for (auto& [time, tv] : samples) {
    rep.t_grid.push_back(static_cast<int>(std::min<long long>(time, std::numeric_limits<int>::max())));
    for (std::size_t x = 0; x < N; ++x) rep.tv[x].push_back(tv[x]);
  }
  return rep;
}

unsigned worker_threads() {
  if (const char* env = std::getenv("HAMSWITCH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MixReport mixing_empirical(const Graph& g, const ChainConfig& cfg, const std::vector<EdgeList>& omega,
                           const std::vector<int>& starts, long long trials, const std::vector<int>& t_grid) {
  if (omega.empty()) throw PreconditionError("mixing_empirical: empty reference state space");
  if (trials < 1) throw PreconditionError("mixing_empirical: trials must be positive");
  std::vector<int> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty() || grid.front() < 0) throw PreconditionError("mixing_empirical: bad time grid");
  absl::flat_hash_map<StateKey, int> index;
  for (std::size_t i = 0; i < omega.size(); ++i) index.emplace(state_key(g, omega[i]), static_cast<int>(i));
  const std::size_t N = omega.size();

  MixReport rep;
  rep.omega = N;
  rep.lazy = cfg.lazy;
  rep.k = cfg.k;
  rep.theta = theta(cfg, g).value;
  rep.starts = starts;
  rep.t_grid = grid;
  rep.trials = trials;
  rep.seed = cfg.seed;
  const unsigned workers = static_cast<unsigned>(std::min<long long>(worker_threads(), trials));
  for (std::size_t si = 0; si < starts.size(); ++si) {
    const int s = starts[si];
    if (s < 0 || static_cast<std::size_t>(s) >= N) throw PreconditionError("mixing_empirical: bad start index");
    std::vector<std::vector<std::vector<long long>>> counts(
        workers, std::vector<std::vector<long long>>(grid.size(), std::vector<long long>(N, 0)));
    auto work = [&](unsigned w) {
      for (long long trial = w; trial < trials; trial += workers) {
        Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(trials) +
                                          static_cast<std::uint64_t>(trial)));
        SwitchChain chain(g, cfg, omega[static_cast<std::size_t>(s)]);
        int t = 0;
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
          for (; t < grid[gi]; ++t) chain.step(rng);
          auto it = index.find(state_key(g, chain.state()));
          if (it == index.end()) throw InvariantViolation("mixing_empirical: chain left the reference state space");
          ++counts[w][gi][static_cast<std::size_t>(it->second)];
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();
    std::vector<double> curve;
    const double u = 1.0 / static_cast<double>(N);
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
      double sum = 0;
      for (std::size_t y = 0; y < N; ++y) {
        long long c = 0;
        for (unsigned w = 0; w < workers; ++w) c += counts[w][gi][y];
        sum += std::fabs(static_cast<double>(c) / static_cast<double>(trials) - u);
      }
      curve.push_back(0.5 * sum);
    }
    rep.tv.push_back(std::move(curve));
  }
  return rep;
}

Rational p_stability_ratio(const Graph& g, std::size_t cap) {
  const auto f = enumerate(g, EnumClass::TwoFactor, cap);
  if (f.empty()) throw PreconditionError("p_stability_ratio: graph has no 2-factor");
  const auto fa = enumerate(g, EnumClass::AlmostTwoFactor, cap);
  return Rational(BigInt(fa.size()), BigInt(f.size()));
}

}  // namespace hamswitch
