#pragma once
// Brute-force reference computations. They read only the edge list of a
// graph and never call the algorithms they are used to check.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hamswitch/graph.hpp"

namespace oracle {

using Pair = std::pair<int, int>;
using EdgeSet = std::set<Pair>;
using Q = boost::multiprecision::cpp_rational;

inline Pair mk(int a, int b) { return a < b ? Pair{a, b} : Pair{b, a}; }

struct Adj {
  int n = 0;
  std::vector<std::vector<char>> a;
  std::vector<Pair> edges;
  explicit Adj(const hamswitch::Graph& g) : n(g.n()), a(g.n(), std::vector<char>(g.n(), 0)) {
    for (const auto& e : g.edges()) {
      a[e.u][e.v] = a[e.v][e.u] = 1;
      edges.push_back(mk(e.u, e.v));
    }
  }
};

inline EdgeSet to_set(const hamswitch::EdgeList& e) {
  EdgeSet s;
  for (const auto& x : e) s.insert(mk(x.u, x.v));
  return s;
}

inline int sym_diff(const EdgeSet& x, const EdgeSet& y) {
  std::vector<Pair> out;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return static_cast<int>(out.size());
}

inline std::vector<int> degrees(int n, const EdgeSet& s) {
  std::vector<int> d(n, 0);
  for (const auto& [u, v] : s) ++d[u], ++d[v];
  return d;
}

inline int component_count(int n, const EdgeSet& s) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> f = [&](int x) { return p[x] == x ? x : p[x] = f(p[x]); };
  int c = n;
  for (const auto& [u, v] : s)
    if (f(u) != f(v)) p[f(u)] = f(v), --c;
  return c;
}

inline bool is_two_factor(const Adj& g, const EdgeSet& s) {
  for (const auto& [u, v] : s)
    if (!g.a[u][v]) return false;
  for (int d : degrees(g.n, s))
    if (d != 2) return false;
  return true;
}

inline bool is_ham_cycle(const Adj& g, const EdgeSet& s) { return is_two_factor(g, s) && component_count(g.n, s) == 1; }

// Held-Karp count of Hamiltonian cycles (undirected), n <= ~22.
inline std::uint64_t count_ham_cycles(const Adj& g) {
  const int n = g.n;
  if (n < 3) return 0;
  const std::size_t full = std::size_t{1} << (n - 1);
  // dp over subsets of {1..n-1}; path starts at 0.
  std::vector<std::uint64_t> dp(full * static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v)
    if (g.a[0][v]) dp[(std::size_t{1} << (v - 1)) * n + v] = 1;
  for (std::size_t s = 1; s < full; ++s)
    for (int v = 1; v < n; ++v) {
      const std::uint64_t c = dp[s * n + v];
      if (!c) continue;
      for (int w = 1; w < n; ++w) {
        const std::size_t bit = std::size_t{1} << (w - 1);
        if ((s & bit) || !g.a[v][w]) continue;
        dp[(s | bit) * n + w] += c;
      }
    }
  std::uint64_t total = 0;
  for (int v = 1; v < n; ++v)
    if (g.a[v][0]) total += dp[(full - 1) * n + v];
  return total / 2;
}

// Every Hamiltonian cycle by permutation search; small n only.
inline std::vector<EdgeSet> ham_cycles(const Adj& g) {
  std::vector<EdgeSet> out;
  const int n = g.n;
  std::vector<int> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<void()> rec = [&] {
    if (static_cast<int>(path.size()) == n) {
      if (g.a[path.back()][0] && path[1] < path.back()) {
        EdgeSet s;
        for (int i = 0; i < n; ++i) s.insert(mk(path[i], path[(i + 1) % n]));
        out.push_back(s);
      }
      return;
    }
    for (int w = 0; w < n; ++w)
      if (!used[w] && g.a[path.back()][w]) {
        used[w] = 1;
        path.push_back(w);
        rec();
        path.pop_back();
        used[w] = 0;
      }
  };
  if (n >= 3) rec();
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<EdgeSet> ham_paths(const Adj& g) {
  std::set<EdgeSet> out;
  const int n = g.n;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(path.size()) == n) {
      EdgeSet s;
      for (int i = 0; i + 1 < n; ++i) s.insert(mk(path[i], path[i + 1]));
      out.insert(s);
      return;
    }
    for (int w = 0; w < n; ++w)
      if (!used[w] && g.a[path.back()][w]) {
        used[w] = 1;
        path.push_back(w);
        rec();
        path.pop_back();
        used[w] = 0;
      }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    rec();
    used[s] = 0;
  }
  return {out.begin(), out.end()};
}

// Spanning subgraphs by edge inclusion with per-vertex target degrees
// 2 - deficit, where the total deficit is exactly `deficit_total`
// (0 for 2-factors, 2 for deficient almost 2-factors).
inline std::vector<EdgeSet> degree_subgraphs(const Adj& g, int deficit_total) {
  const int n = g.n, m = static_cast<int>(g.edges.size());
  std::vector<EdgeSet> out;
  std::vector<int> deg(n, 0), remaining(n, 0);
  for (const auto& [u, v] : g.edges) ++remaining[u], ++remaining[v];
  std::vector<char> take(m, 0);
  std::function<void(int)> rec = [&](int i) {
    int slack = 0;
    for (int v = 0; v < n; ++v) {
      if (deg[v] + remaining[v] < 2) slack += 2 - deg[v] - remaining[v];
      if (slack > deficit_total) return;
    }
    if (i == m) {
      int def = 0;
      for (int v = 0; v < n; ++v) def += 2 - deg[v];
      if (def != deficit_total) return;
      EdgeSet s;
      for (int e = 0; e < m; ++e)
        if (take[e]) s.insert(g.edges[e]);
      out.push_back(s);
      return;
    }
    const auto [u, v] = g.edges[i];
    --remaining[u], --remaining[v];
    if (deg[u] < 2 && deg[v] < 2) {
      ++deg[u], ++deg[v], take[i] = 1;
      rec(i + 1);
      --deg[u], --deg[v], take[i] = 0;
    }
    rec(i + 1);
    ++remaining[u], ++remaining[v];
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<EdgeSet> two_factors(const Adj& g) { return degree_subgraphs(g, 0); }

// Connected components of the graph on `states` joining pairs whose
// symmetric difference has at most 2k edges.
inline int switch_components(const std::vector<EdgeSet>& states, int k, std::vector<int>* comp = nullptr) {
  const int N = static_cast<int>(states.size());
  std::vector<int> c(N, -1);
  int count = 0;
  for (int s = 0; s < N; ++s) {
    if (c[s] >= 0) continue;
    std::deque<int> q{s};
    c[s] = count;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y = 0; y < N; ++y)
        if (c[y] < 0 && sym_diff(states[x], states[y]) <= 2 * k) c[y] = count, q.push_back(y);
    }
    ++count;
  }
  if (comp) *comp = c;
  return count;
}

inline Q binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  Q c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// k-switch chain matrix: P(x,y) = 1/(k C(m, 2l)) when |x xor y| = 2l.
inline std::vector<std::vector<Q>> switch_matrix(const std::vector<EdgeSet>& states, int m, int k, bool lazy) {
  const std::size_t N = states.size();
  std::vector<std::vector<Q>> P(N, std::vector<Q>(N, 0));
  for (std::size_t x = 0; x < N; ++x) {
    Q row = 0;
    for (std::size_t y = 0; y < N; ++y) {
      if (x == y) continue;
      const int d = sym_diff(states[x], states[y]);
      if (d % 2 || d / 2 > k || d == 0) continue;
      Q p = Q(1) / (k * binom(m, d));
      if (lazy) p /= 2;
      P[x][y] = p;
      row += p;
    }
    P[x][x] = 1 - row;
  }
  return P;
}

inline Eigen::MatrixXd to_dense(const std::vector<std::vector<Q>>& P) {
  const Eigen::Index N = static_cast<Eigen::Index>(P.size());
  Eigen::MatrixXd M(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) M(i, j) = P[i][j].convert_to<double>();
  return M;
}

// Worst-start total variation distance after t steps, for t = 0..t_max.
inline std::vector<double> worst_tv_curve(const Eigen::MatrixXd& P, int t_max) {
  const Eigen::Index N = P.rows();
  Eigen::MatrixXd D = Eigen::MatrixXd::Identity(N, N);
  std::vector<double> out;
  for (int t = 0; t <= t_max; ++t) {
    double worst = 0;
    for (Eigen::Index x = 0; x < N; ++x) worst = std::max(worst, 0.5 * (D.row(x).array() - 1.0 / N).abs().sum());
    out.push_back(worst);
    D = D * P;
  }
  return out;
}

inline long long mixing_time(const std::vector<double>& curve, double eps) {
  for (long long t = static_cast<long long>(curve.size()) - 1; t >= 0; --t)
    if (curve[t] > eps) return t + 1 < static_cast<long long>(curve.size()) ? t + 1 : -1;
  return 0;
}

// JS chain. States are 2-factors and subgraphs with total deficit 2.
struct JsOracle {
  const Adj& g;
  std::vector<EdgeSet> states;
  std::map<EdgeSet, int> index;
  std::vector<std::map<int, Q>> P;  // off-diagonal transition probabilities
  std::vector<char> factor;

  explicit JsOracle(const Adj& graph) : g(graph) {
    states = two_factors(g);
    const std::size_t f = states.size();
    for (auto& s : degree_subgraphs(g, 2)) states.push_back(s);
    factor.assign(states.size(), 0);
    std::fill(factor.begin(), factor.begin() + static_cast<long>(f), 1);
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
    P.resize(states.size());
    const int n = g.n;
    const Q unit = Q(1) / (n * n);
    for (std::size_t s = 0; s < states.size(); ++s) {
      const EdgeSet& F = states[s];
      const auto deg = degrees(n, F);
      auto add = [&](const EdgeSet& t, const Q& p) {
        if (t != F) P[s][index.at(t)] += p;
      };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const bool in = F.count(mk(i, j)) > 0;
          if (factor[s]) {
            if (in) {
              EdgeSet t = F;
              t.erase(mk(i, j));
              add(t, unit);
            }
            continue;
          }
          if (deg[i] >= 2 || in || !g.a[i][j]) continue;
          EdgeSet t = F;
          t.insert(mk(i, j));
          if (deg[j] < 2) {
            add(t, unit);
            continue;
          }
          for (const auto& e : F)
            if (e.first == j || e.second == j) {
              EdgeSet u = t;
              u.erase(e);
              add(u, unit / 2);
            }
        }
    }
  }

  std::size_t factors() const { return static_cast<std::size_t>(std::count(factor.begin(), factor.end(), 1)); }

  bool symmetric() const {
    for (std::size_t s = 0; s < P.size(); ++s)
      for (const auto& [t, p] : P[s]) {
        auto it = P[static_cast<std::size_t>(t)].find(static_cast<int>(s));
        if (it == P[static_cast<std::size_t>(t)].end() || it->second != p) return false;
      }
    return true;
  }

  Q max_inverse_probability() const {
    Q best = 0;
    for (const auto& row : P)
      for (const auto& [t, p] : row) best = std::max(best, Q(1) / p);
    return best;
  }

  std::pair<int, int> max_degrees() const {
    std::vector<int> in(P.size(), 0);
    int out = 0;
    for (const auto& row : P) {
      out = std::max(out, static_cast<int>(row.size()));
      for (const auto& [t, p] : row) ++in[static_cast<std::size_t>(t)];
    }
    return {out, *std::max_element(in.begin(), in.end())};
  }

  // max over states of the directed distance to the nearest 2-factor; -1 if some state cannot reach one.
  int k_js() const {
    std::vector<std::vector<int>> rev(P.size());
    for (std::size_t s = 0; s < P.size(); ++s)
      for (const auto& [t, p] : P[s]) rev[static_cast<std::size_t>(t)].push_back(static_cast<int>(s));
    std::vector<int> d(P.size(), -1);
    std::deque<int> q;
    for (std::size_t s = 0; s < P.size(); ++s)
      if (factor[s]) d[s] = 0, q.push_back(static_cast<int>(s));
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : rev[static_cast<std::size_t>(x)])
        if (d[static_cast<std::size_t>(y)] < 0) d[static_cast<std::size_t>(y)] = d[static_cast<std::size_t>(x)] + 1, q.push_back(y);
    }
    int worst = 0;
    for (int v : d) {
      if (v < 0) return -1;
      worst = std::max(worst, v);
    }
    return worst;
  }

  // max over deficient states of the symmetric difference to the nearest 2-factor.
  int nearest_factor_max() const {
    std::map<Pair, int> bit;
    for (const auto& e : g.edges) bit.emplace(e, static_cast<int>(bit.size()));
    auto mask = [&](const EdgeSet& s) {
      std::uint64_t m = 0;
      for (const auto& e : s) m |= std::uint64_t{1} << bit.at(e);
      return m;
    };
    std::vector<std::uint64_t> f;
    for (std::size_t t = 0; t < states.size(); ++t)
      if (factor[t]) f.push_back(mask(states[t]));
    int worst = 0;
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (factor[s]) continue;
      const std::uint64_t x = mask(states[s]);
      int best = 1 << 30;
      for (std::uint64_t y : f) best = std::min(best, std::popcount(x ^ y));
      worst = std::max(worst, best);
    }
    return worst;
  }
};

}  // namespace oracle
