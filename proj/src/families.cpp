#include "hamswitch/families.hpp"

#include <numeric>

#include "hamswitch/errors.hpp"
#include "hamswitch/rng.hpp"

namespace hamswitch {

ParityExample build_parity_example(int m) {
  if (m < 3 || m % 2 == 0) throw PreconditionError("parity example needs odd m >= 3");
  auto v = [m](int i, int j) { return (i - 1) * m + (j - 1); };
  EdgeList edges;
  for (int i : {1, 3})
    for (int j = 1; j <= m; ++j)
      for (int l = j + 1; l <= m; ++l) edges.emplace_back(v(i, j), v(i, l));
  for (int i : {1, 2})
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) edges.emplace_back(v(i, j), v(i + 1, l));
  ParityExample ex;
  ex.m = m;
  ex.cg.graph = Graph(3 * m, canonical(std::move(edges)));
  for (const Edge& e : ex.cg.graph.edges()) ex.cg.blue.push_back(e.u < m || e.v < m);

  auto order_for = [&](int near, int far) {
    std::vector<Vertex> order;
    for (int j = 1; j <= m - 1; ++j) {
      order.push_back(v(2, j));
      order.push_back(v(far, j));
    }
    order.push_back(v(far, m));
    order.push_back(v(2, m));
    for (int j = m; j >= 1; --j) order.push_back(v(near, j));
    return order;
  };
  ex.h1 = HamCycle::from_order(ex.cg.graph, order_for(1, 3));
  ex.h2 = HamCycle::from_order(ex.cg.graph, order_for(3, 1));
  return ex;
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity blue_parity(const ColoredGraph& cg, const EdgeList& h) {
  int count = 0;
  for (const Edge& e : h) {
    if (!cg.graph.has_edge(e.u, e.v)) throw PreconditionError("blue_parity: edge not in graph");
    count += cg.is_blue(e);
  }
  return count % 2 == 0 ? Parity::Even : Parity::Odd;
}

GadgetX build_gadget_x(int ell) {
  if (ell < 3 || ell % 2 == 0) throw PreconditionError("gadget X is built for odd l >= 3 only");
  const int n = 3 * ell + 1;
  auto v = [](int i) { return i - 1; };
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(v(i), v(i + 1));
  for (int j = 2; j <= n - 5; j += 3) edges.emplace_back(v(j), v(j + 4));
  edges.emplace_back(v(3), v(n - 2));
  GadgetX x;
  x.ell = ell;
  x.graph = Graph(n, canonical(std::move(edges)));
  for (const Edge& e : x.graph.edges()) {
    if (x.graph.degree(e.u) <= 2 || x.graph.degree(e.v) <= 2) x.forced.push_back(e);
    else x.cycle.push_back(e);
  }
  if (static_cast<int>(x.cycle.size()) != 2 * ell || components(n, x.cycle).size() != static_cast<std::size_t>(n - 2 * ell + 1)) {
    throw InvariantViolation("gadget X: residual edges do not form one cycle of length 2l");
  }
  return x;
}

std::array<EdgeList, 2> GadgetX::hamiltonian_paths() const {
  // Walk C once and split its edges alternately.
  const int n = graph.n();
  std::vector<std::vector<Vertex>> nb(n);
  for (const Edge& e : cycle) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  const Vertex start = cycle.front().u;
  std::array<EdgeList, 2> out{forced, forced};
  Vertex prev = start, cur = std::min(nb[start][0], nb[start][1]);
  out[0].emplace_back(start, cur);
  for (int i = 1; cur != start; ++i) {
    const Vertex nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    out[i % 2].emplace_back(cur, nxt);
    prev = cur;
    cur = nxt;
  }
  for (auto& p : out) p = canonical(std::move(p));
  return out;
}

int locked_default_n(int k) {
  const int r = 3 * (k + 1) + 1;
  int n = std::max(3 * k + 5, r + 1);
  if ((n + r) % 2 == 0) ++n;
  return n;
}

LockedExample build_locked_example(int k, int n) {
  if (k < 4) throw PreconditionError("locked example needs k >= 4");
  if (k % 2 != 0) throw PreconditionError("locked example needs even k (gadget X exists for odd l = k+1 only)");
  LockedExample ex;
  ex.k = k;
  ex.ell = k + 1;
  ex.r = 3 * ex.ell + 1;
  ex.n = n;
  if (n < 3 * k + 5) throw PreconditionError("locked example needs n >= 3k+5");
  if ((n + ex.r) % 2 == 0) throw PreconditionError("locked example needs n + r odd");
  ex.size_a = (n + ex.r - 1) / 2;
  ex.size_b = (n - ex.r + 1) / 2;
  if (ex.size_b < 1) throw PreconditionError("locked example needs |B| >= 1");
  const GadgetX x = build_gadget_x(ex.ell);
  EdgeList edges = x.graph.edges();
  for (Vertex a = 0; a < ex.size_a; ++a)
    for (Vertex b = ex.size_a; b < n; ++b) edges.emplace_back(a, b);
  ex.graph = Graph(n, canonical(std::move(edges)));
  return ex;
}

MonotoneGraph build_staircase(int n) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("staircase needs even n >= 4");
  std::vector<int> r(n, 1), t(n);
  for (int i = 1; i <= n; ++i) t[i - 1] = std::min(i + 1, n);
  return MonotoneGraph(n, std::move(r), std::move(t));
}

Graph random_dense_graph(int n, int delta_min, std::uint64_t seed, bool bipartite) {
  Rng rng(seed);
  if (bipartite) {
    if (n < 2 || delta_min > n || delta_min < 0) throw PreconditionError("random_dense_graph: infeasible parameters");
    std::vector<Vertex> as(n), bs(n);
    std::iota(as.begin(), as.end(), 0);
    std::iota(bs.begin(), bs.end(), n);
    rng.shuffle(as);
    rng.shuffle(bs);
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(as[i], bs[i]);
      edges.emplace_back(bs[i], as[(i + 1) % n]);
    }
    std::vector<Edge> pool;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = n; b < 2 * n; ++b) pool.emplace_back(a, b);
    edges = canonical(std::move(edges));
    const EdgeList planted = edges;
    std::vector<int> deg(2 * n, 0);
    for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
    rng.shuffle(pool);
    for (const Edge& e : pool) {
      if (contains(planted, e) || (deg[e.u] >= delta_min && deg[e.v] >= delta_min)) continue;
      edges.push_back(e);
      ++deg[e.u];
      ++deg[e.v];
    }
    return Graph(2 * n, canonical(std::move(edges)), n);
  }
  if (n < 3 || delta_min > n - 1 || delta_min < 0) throw PreconditionError("random_dense_graph: infeasible parameters");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);
  edges = canonical(std::move(edges));
  const EdgeList planted = edges;
  std::vector<int> deg(n, 2);
  std::vector<Edge> pool;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pool.emplace_back(a, b);
  rng.shuffle(pool);
  for (const Edge& e : pool) {
    if (contains(planted, e) || (deg[e.u] >= delta_min && deg[e.v] >= delta_min)) continue;
    edges.push_back(e);
    ++deg[e.u];
    ++deg[e.v];
  }
  return Graph(n, canonical(std::move(edges)));
}

HamCycle random_ham_cycle(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> order;
  if (g.bipartite()) {
    const int h = g.part_size();
    std::vector<Vertex> as(h), bs(h);
    std::iota(as.begin(), as.end(), 0);
    std::iota(bs.begin(), bs.end(), h);
    rng.shuffle(as);
    rng.shuffle(bs);
    for (int i = 0; i < h; ++i) {
      order.push_back(as[i]);
      order.push_back(bs[i]);
    }
  } else {
    order.resize(g.n());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
  }
  std::vector<std::vector<Vertex>> paths{{order.front()}};
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (g.has_edge(paths.back().back(), order[i])) paths.back().push_back(order[i]);
    else paths.push_back({order[i]});
  }
  const JoinResult j = join_paths(paths, g, g.bipartite(), false);
  return HamCycle::from_edges(g, j.cycle);
}

TwoFactor random_two_factor(const Graph& g, std::uint64_t seed, int moves) {
  EdgeList state = random_ham_cycle(g, seed).edges();
  Rng rng(Rng::derive(seed, 1));
  const long long max_attempts = 1000LL * std::max(moves, 1);
  int done = 0;
  for (long long attempt = 0; done < moves && attempt < max_attempts; ++attempt) {
    const Edge e1 = state[rng.below(state.size())];
    const Edge e2 = state[rng.below(state.size())];
    if (e1.touches(e2.u) || e1.touches(e2.v)) continue;
    const bool cross = rng.coin();
    const Edge n1(e1.u, cross ? e2.v : e2.u);
    const Edge n2(e1.v, cross ? e2.u : e2.v);
    if (!g.has_edge(n1.u, n1.v) || !g.has_edge(n2.u, n2.v) || contains(state, n1) || contains(state, n2)) continue;
    state = set_union(set_minus(state, canonical({e1, e2})), canonical({n1, n2}));
    ++done;
  }
  return TwoFactor::from_edges(g, state);
}

MonotoneGraph random_dense_monotone(int n, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random_dense_monotone needs n >= 2");
  Rng rng(seed);
  const int h = (n + 1) / 2;
  // r_i <= max(1, i-h+1) and t_i >= min(n, i+h-1) force every row and
  // column to have at least h neighbours.
  std::vector<int> r(n), t(n);
  for (int i = 1; i <= n; ++i) {
    const int r_cap = std::max(1, i - h + 1);
    const int t_floor = std::min(n, i + h - 1);
    const int r_prev = i == 1 ? 1 : r[i - 2];
    const int t_prev = i == 1 ? 1 : t[i - 2];
    r[i - 1] = std::min(r_cap, r_prev + static_cast<int>(rng.below(2)));
    t[i - 1] = std::min(n, std::max(t_prev, t_floor) + static_cast<int>(rng.below(3) == 0));
  }
  return MonotoneGraph(n, std::move(r), std::move(t));
}

}  // namespace hamswitch
