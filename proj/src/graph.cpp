#include "hamswitch/graph.hpp"

#include <numeric>

#include "hamswitch/errors.hpp"

namespace hamswitch {

EdgeList canonical(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

EdgeList symmetric_difference(const EdgeList& x, const EdgeList& y) {
  EdgeList out;
  out.reserve(x.size() + y.size());
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

EdgeList set_union(const EdgeList& x, const EdgeList& y) {
  EdgeList out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

EdgeList set_intersection(const EdgeList& x, const EdgeList& y) {
  EdgeList out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

EdgeList set_minus(const EdgeList& x, const EdgeList& y) {
  EdgeList out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool contains(const EdgeList& edges, Edge e) {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Graph::Graph(int n, EdgeList edges, std::optional<int> part_a) : n_(n), part_a_(part_a) {
  if (n < 0) throw PreconditionError("negative vertex count");
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) throw PreconditionError("edge endpoint out of range");
    if (i > 0 && edges[i - 1] == e) {
      throw PreconditionError("parallel edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
  if (part_a_) {
    if (*part_a_ * 2 != n) throw PreconditionError("bipartition must have |A| = |B|");
    for (const Edge& e : edges) {
      if ((e.u < *part_a_) == (e.v < *part_a_)) {
        throw PreconditionError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                " does not cross the bipartition");
      }
    }
  }
  edges_ = std::move(edges);
  adj_.assign(n, {});
  index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    index_[static_cast<std::size_t>(e.u) * n + e.v] = static_cast<int>(i);
    index_[static_cast<std::size_t>(e.v) * n + e.u] = static_cast<int>(i);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::complete(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph Graph::complete_bipartite(int side) {
  EdgeList edges;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) edges.emplace_back(i, side + j);
  return Graph(2 * side, std::move(edges), side);
}

Graph Graph::cycle(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, canonical(std::move(edges)));
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  return index_[static_cast<std::size_t>(a) * n_ + b];
}

int min_degree(const Graph& g) {
  if (g.n() == 0) return 0;
  int d = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool satisfies_degree_bound(const Graph& g, bool bipartite_mode, int slack) {
  if (bipartite_mode && !g.bipartite()) return false;
  const int n_eff = bipartite_mode ? g.part_size() : g.n();
  return 2 * min_degree(g) >= n_eff + 2 * slack;
}

std::string to_string(SubgraphClass c) {
  switch (c) {
    case SubgraphClass::Not2Factor: return "not-2-factor";
    case SubgraphClass::TwoFactor: return "2-factor";
    case SubgraphClass::HamCycle: return "hamiltonian-cycle";
  }
  return "?";
}

std::vector<std::vector<Vertex>> components(int n, const EdgeList& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> slot(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

SubgraphClass classify(const Graph& g, const EdgeList& edges) {
  std::vector<int> deg(g.n(), 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw PreconditionError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                              " is not in the graph");
    }
    ++deg[e.u];
    ++deg[e.v];
  }
  if (g.n() < 3) return SubgraphClass::Not2Factor;
  for (int d : deg)
    if (d != 2) return SubgraphClass::Not2Factor;
  if (canonical(edges).size() != edges.size()) return SubgraphClass::Not2Factor;
  return components(g.n(), edges).size() == 1 ? SubgraphClass::HamCycle : SubgraphClass::TwoFactor;
}

TwoFactor TwoFactor::from_edges(const Graph& g, EdgeList edges) {
  edges = canonical(std::move(edges));
  if (classify(g, edges) == SubgraphClass::Not2Factor) {
    throw PreconditionError("edge set is not a 2-factor");
  }
  const int n = g.n();
  std::vector<std::array<Vertex, 2>> nb(n, {-1, -1});
  for (const Edge& e : edges) {
    nb[e.u][nb[e.u][0] < 0 ? 0 : 1] = e.v;
    nb[e.v][nb[e.v][0] < 0 ? 0 : 1] = e.u;
  }
  TwoFactor f;
  f.edges_ = std::move(edges);
  f.comp_.assign(n, -1);
  f.next_.assign(n, -1);
  f.prev_.assign(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (f.comp_[s] >= 0) continue;
    const int id = static_cast<int>(f.cycles_.size());
    std::vector<Vertex> cyc{s};
    Vertex prev = s;
    Vertex cur = std::min(nb[s][0], nb[s][1]);
    while (cur != s) {
      cyc.push_back(cur);
      Vertex nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
      prev = cur;
      cur = nxt;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      f.comp_[cyc[i]] = id;
      f.next_[cyc[i]] = cyc[(i + 1) % cyc.size()];
      f.prev_[cyc[i]] = cyc[(i + cyc.size() - 1) % cyc.size()];
    }
    f.cycles_.push_back(std::move(cyc));
  }
  return f;
}

HamCycle HamCycle::from_edges(const Graph& g, EdgeList edges) {
  TwoFactor f = TwoFactor::from_edges(g, std::move(edges));
  if (!f.hamiltonian()) throw PreconditionError("edge set is a disconnected 2-factor");
  HamCycle h;
  static_cast<TwoFactor&>(h) = std::move(f);
  return h;
}

HamCycle HamCycle::from_order(const Graph& g, const std::vector<Vertex>& order) {
  if (static_cast<int>(order.size()) != g.n()) throw PreconditionError("order must list every vertex");
  EdgeList edges;
  for (std::size_t i = 0; i < order.size(); ++i) edges.emplace_back(order[i], order[(i + 1) % order.size()]);
  return from_edges(g, std::move(edges));
}

std::vector<AlternatingCircuit> decompose_alternating(int n, const EdgeList& x, const EdgeList& y) {
  const EdgeList only_x = set_minus(x, y);
  const EdgeList only_y = set_minus(y, x);
  // Per vertex, per side: incident difference edges as (neighbour, edge id).
  struct Inc {
    Vertex nb;
    int id;
  };
  std::vector<std::array<std::vector<Inc>, 2>> inc(n);
  std::vector<Edge> all;
  std::vector<Side> side_of;
  auto add = [&](const EdgeList& es, Side s) {
    for (const Edge& e : es) {
      const int id = static_cast<int>(all.size());
      all.push_back(e);
      side_of.push_back(s);
      const auto k = static_cast<std::size_t>(s);
      inc[e.u][k].push_back({e.v, id});
      inc[e.v][k].push_back({e.u, id});
    }
  };
  add(only_x, Side::First);
  add(only_y, Side::Second);
  for (auto& per : inc)
    for (auto& lst : per) std::sort(lst.begin(), lst.end(), [](const Inc& a, const Inc& b) { return a.nb < b.nb; });

  std::vector<char> used(all.size(), 0);
  auto pick = [&](Vertex v, Side s) -> const Inc* {
    for (const Inc& c : inc[v][static_cast<std::size_t>(s)])
      if (!used[c.id]) return &c;
    return nullptr;
  };

  std::vector<AlternatingCircuit> out;
  std::size_t remaining = all.size();
  while (remaining > 0) {
    Vertex start = -1;
    for (Vertex v = 0; v < n && start < 0; ++v) {
      if (pick(v, Side::First) || pick(v, Side::Second)) start = v;
    }
    // First edge: lowest neighbour over both sides.
    const Inc* a = pick(start, Side::First);
    const Inc* b = pick(start, Side::Second);
    Side first_side = Side::First;
    const Inc* first = a;
    if (!a || (b && b->nb < a->nb)) {
      first = b;
      first_side = Side::Second;
    }
    AlternatingCircuit c;
    Vertex cur = start;
    const Inc* e = first;
    Side s = first_side;
    while (true) {
      used[e->id] = 1;
      --remaining;
      c.vertices.push_back(cur);
      c.edges.push_back(all[e->id]);
      c.sides.push_back(s);
      cur = e->nb;
      const Side want = s == Side::First ? Side::Second : Side::First;
      if (cur == start && s != first_side) break;
      e = pick(cur, want);
      if (!e) throw InvariantViolation("alternating traversal got stuck; inputs are not both 2-regular");
      s = want;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<AlternatingCircuit> decompose_alternating(const TwoFactor& x, const TwoFactor& y) {
  return decompose_alternating(x.n(), x.edges(), y.edges());
}

}  // namespace hamswitch
