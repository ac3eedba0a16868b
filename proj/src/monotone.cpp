#include "hamswitch/monotone.hpp"

#include <functional>

#include "hamswitch/errors.hpp"

namespace hamswitch {

MonotoneGraph::MonotoneGraph(int n, std::vector<int> r, std::vector<int> t) : n_(n), r_(std::move(r)), t_(std::move(t)) {
  if (n < 1) throw PreconditionError("monotone graph needs n >= 1");
  if (static_cast<int>(r_.size()) != n || static_cast<int>(t_.size()) != n) {
    throw PreconditionError("monotone graph needs n row intervals");
  }
  EdgeList edges;
  for (int i = 1; i <= n; ++i) {
    const int ri = r_[i - 1], ti = t_[i - 1];
    if (ri < 1 || ri > ti || ti > n) throw PreconditionError("row " + std::to_string(i) + " interval out of range");
    if (i > 1 && (ri < r_[i - 2] || ti < t_[i - 2])) {
      throw PreconditionError("row intervals are not non-decreasing at row " + std::to_string(i));
    }
    for (int j = ri; j <= ti; ++j) edges.emplace_back(a(i), b(j));
  }
  graph_ = Graph(2 * n, canonical(std::move(edges)), n);
}

int MonotoneGraph::rank(Vertex v) const {
  const int idx = v < n_ ? v + 1 : v - n_ + 1;
  const int h = half();
  return idx > h ? idx - h - 1 : (n_ - h) + idx - 1;
}

bool MonotoneGraph::in_first_half(Vertex v) const {
  const int idx = v < n_ ? v + 1 : v - n_ + 1;
  return idx <= half();
}

std::optional<MonotoneGraph> validate_monotone(const Graph& g) {
  if (!g.bipartite()) throw PreconditionError("validate_monotone: graph has no bipartition");
  const int n = g.part_size();
  std::vector<int> r(n), t(n);
  for (int i = 0; i < n; ++i) {
    const auto& nb = g.neighbors(i);
    if (nb.empty()) return std::nullopt;
    if (nb.back() - nb.front() + 1 != static_cast<int>(nb.size())) return std::nullopt;
    r[i] = nb.front() - n + 1;
    t[i] = nb.back() - n + 1;
    if (i > 0 && (r[i] < r[i - 1] || t[i] < t[i - 1])) return std::nullopt;
  }
  return MonotoneGraph(n, std::move(r), std::move(t));
}

Quadrants quadrants(const MonotoneGraph& mg) {
  const Graph& g = mg.graph();
  if (2 * min_degree(g) < mg.n()) {
    throw PreconditionError("quadrants: minimum degree " + std::to_string(min_degree(g)) + " is below n/2 = " +
                            std::to_string(mg.n()) + "/2");
  }
  Quadrants q;
  for (int i = 1; i <= mg.n(); ++i) {
    (i <= mg.half() ? q.a1 : q.a2).push_back(mg.a(i));
    (i <= mg.half() ? q.b1 : q.b2).push_back(mg.b(i));
  }
  auto complete = [&](const std::vector<Vertex>& as, const std::vector<Vertex>& bs) {
    for (Vertex x : as)
      for (Vertex y : bs)
        if (!g.has_edge(x, y)) return false;
    return true;
  };
  if (!complete(q.a1, q.b1) || !complete(q.a2, q.b2)) {
    throw InvariantViolation("quadrants: a quadrant subgraph is not complete bipartite");
  }
  return q;
}

EdgeList PathSystem::edges() const {
  EdgeList out;
  for (const auto& p : paths)
    for (std::size_t i = 1; i < p.size(); ++i) out.emplace_back(p[i - 1], p[i]);
  return canonical(std::move(out));
}

Phi1Result phi1_record(const TwoFactor& f, const MonotoneGraph& mg) {
  const Graph& g = mg.graph();
  if (f.n() != g.n() || classify(g, f.edges()) == SubgraphClass::Not2Factor) {
    throw PreconditionError("phi1: not a 2-factor of the monotone graph");
  }
  struct Piece {
    Vertex anchor;
    std::vector<Vertex> path;
  };
  std::array<std::vector<Piece>, 3> groups;
  Phi1Result out;
  const int n = mg.n();
  for (const auto& cyc : f.cycles()) {
    Vertex ar = -1, br = -1;
    for (Vertex v : cyc) {
      Vertex& best = v < n ? ar : br;
      if (best < 0 || mg.rank(v) > mg.rank(best)) best = v;
    }
    int label;
    if (mg.in_first_half(ar)) label = kPathA1;
    else if (mg.in_first_half(br)) label = kPathB1;
    else label = kPathA2B2;
    const Vertex anchor = label == kPathB1 ? br : ar;
    const std::size_t len = cyc.size();
    const std::size_t p = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), anchor) - cyc.begin());
    const Vertex before = cyc[(p + len - 1) % len], after = cyc[(p + 1) % len];
    // Cut towards the neighbour that comes first in the wrap order.
    const bool cut_after = mg.rank(after) < mg.rank(before);
    Piece piece{anchor, {}};
    for (std::size_t i = 0; i < len; ++i) {
      piece.path.push_back(cut_after ? cyc[(p + len - i) % len] : cyc[(p + i) % len]);
    }
    out.cut.emplace_back(anchor, cut_after ? after : before);
    groups[label].push_back(std::move(piece));
  }
  for (int label = 0; label < 3; ++label) {
    auto& grp = groups[label];
    std::sort(grp.begin(), grp.end(),
              [&](const Piece& x, const Piece& y) { return mg.rank(x.anchor) < mg.rank(y.anchor); });
    auto& path = out.ps.paths[label];
    for (const Piece& pc : grp) {
      if (!path.empty()) {
        const Edge glue(path.back(), pc.anchor);
        if (!g.has_edge(glue.u, glue.v)) {
          throw InvariantViolation("phi1: gluing edge " + std::to_string(glue.u) + " " + std::to_string(glue.v) +
                                   " is missing");
        }
        out.glue.push_back(glue);
      }
      path.insert(path.end(), pc.path.begin(), pc.path.end());
    }
  }
  out.cut = canonical(std::move(out.cut));
  out.glue = canonical(std::move(out.glue));
  return out;
}

PathSystem phi1(const TwoFactor& f, const MonotoneGraph& mg) { return phi1_record(f, mg).ps; }

TwoFactor phi1_inverse(const PathSystem& ps, const MonotoneGraph& mg) {
  const Graph& g = mg.graph();
  const int n = mg.n();
  std::vector<char> seen(g.n(), 0);
  EdgeList edges;
  for (int label = 0; label < 3; ++label) {
    const auto& path = ps.paths[label];
    if (path.empty()) continue;
    for (Vertex v : path) {
      if (v < 0 || v >= g.n() || seen[v]) throw ReconstructionError("paths are not vertex-disjoint over V");
      seen[v] = 1;
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!g.has_edge(path[i - 1], path[i])) throw ReconstructionError("path uses a non-edge");
    }
    const bool anchor_in_a = label != kPathB1;
    auto on_anchor_side = [&](Vertex v) { return (v < n) == anchor_in_a; };
    if (!on_anchor_side(path.front())) throw ReconstructionError("path does not start on its anchor side");
    std::size_t start = 0;
    Vertex anchor = path.front();
    auto close = [&](std::size_t from, std::size_t to) {
      if (to - from < 4) throw ReconstructionError("recovered piece is too short to close into a cycle");
      for (std::size_t i = from + 1; i < to; ++i) edges.emplace_back(path[i - 1], path[i]);
      if (!g.has_edge(path[from], path[to - 1])) throw ReconstructionError("recovered piece cannot be closed");
      edges.emplace_back(path[from], path[to - 1]);
    };
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (on_anchor_side(path[i]) && mg.rank(path[i]) > mg.rank(anchor)) {
        close(start, i);
        start = i;
        anchor = path[i];
      }
    }
    close(start, path.size());
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (!seen[v]) throw ReconstructionError("paths do not cover every vertex");
  edges = canonical(std::move(edges));
  if (classify(g, edges) == SubgraphClass::Not2Factor) throw ReconstructionError("recovered edges are not a 2-factor");
  TwoFactor f = TwoFactor::from_edges(g, edges);
  if (phi1(f, mg) != ps) throw ReconstructionError("path system is not in the image of phi1");
  return f;
}

namespace {

using Path = std::vector<Vertex>;

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

Path concat(std::initializer_list<Path> parts) {
  Path out;
  for (const Path& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Path slice(const Path& p, std::size_t from, std::size_t to) { return Path(p.begin() + from, p.begin() + to); }

// Calls visit(merged) for every merge of two paths, in preference order:
// adjacency merges first, then three-edge exchanges by ascending z. Stops as
// soon as visit returns true.
template <class Visit>
bool for_each_merge(const std::vector<Path>& paths, const Graph& g, bool bipartite, Visit&& visit) {
  const int n = g.n();
  std::vector<int> which(n), pos(n);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths[i].size(); ++j) {
      which[paths[i][j]] = static_cast<int>(i);
      pos[paths[i][j]] = static_cast<int>(j);
    }
  const std::size_t k = paths.size();
  for (std::size_t p1 = 0; p1 < k; ++p1) {
    for (int o1 = 0; o1 < 2; ++o1) {
      const Path P1 = o1 ? reversed(paths[p1]) : paths[p1];
      const Vertex x1 = P1.front();
      for (std::size_t i = 0; i < k; ++i) {
        if (i == p1) continue;
        for (int end = 0; end < 2; ++end) {
          const Path Pi = end ? reversed(paths[i]) : paths[i];
          if (!g.has_edge(x1, Pi.front())) continue;
          std::vector<Path> next = paths;
          next[p1] = concat({reversed(P1), Pi});
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
          if (visit(std::move(next))) return true;
        }
      }
      for (std::size_t p2 = 0; p2 < k; ++p2) {
        if (p2 == p1) continue;
        for (int o2 = 0; o2 < 2; ++o2) {
          const Path P2 = o2 ? reversed(paths[p2]) : paths[p2];
          const Vertex y2 = P2.back();
          if (bipartite && g.side(x1) == g.side(y2)) continue;
          // Predecessor under the chosen orientations.
          auto pred = [&](Vertex w) -> Vertex {
            const std::size_t q = static_cast<std::size_t>(which[w]);
            const int flipped = q == p1 ? o1 : q == p2 ? o2 : 0;
            const int j = pos[w] + (flipped ? 1 : -1);
            if (j < 0 || j >= static_cast<int>(paths[q].size())) return -1;
            return paths[q][static_cast<std::size_t>(j)];
          };
          std::vector<Vertex> zs;
          for (Vertex w : g.neighbors(x1)) {
            const Vertex cand = pred(w);
            if (cand >= 0 && g.has_edge(cand, y2)) zs.push_back(cand);
          }
          std::sort(zs.begin(), zs.end());
          for (Vertex z : zs) {
            std::vector<Path> next = paths;
            const std::size_t qi = static_cast<std::size_t>(which[z]);
            if (qi == p1) {
              const auto iz = static_cast<std::size_t>(std::find(P1.begin(), P1.end(), z) - P1.begin());
              next[p1] = concat({reversed(slice(P1, iz + 1, P1.size())), slice(P1, 0, iz + 1), reversed(P2)});
            } else if (qi == p2) {
              const auto iz = static_cast<std::size_t>(std::find(P2.begin(), P2.end(), z) - P2.begin());
              next[p1] = concat({reversed(P1), slice(P2, iz + 1, P2.size()), reversed(slice(P2, 0, iz + 1))});
            } else {
              const Path& Pi = paths[qi];
              const auto iz = static_cast<std::size_t>(pos[z]);
              next[p1] = concat({reversed(P1), slice(Pi, iz + 1, Pi.size())});
              next[qi] = concat({slice(Pi, 0, iz + 1), reversed(P2)});
            }
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(p2));
            if (visit(std::move(next))) return true;
          }
        }
      }
    }
  }
  return false;
}

// Closes a Hamiltonian path directly or through the smallest z = w^- with
// w in N(x) and z in N(y).
std::optional<Path> close_path(const Path& P, const Graph& g) {
  const Vertex x = P.front(), y = P.back();
  if (g.has_edge(x, y)) return P;
  std::size_t best = P.size();
  for (Vertex w : g.neighbors(x)) {
    const auto iw = static_cast<std::size_t>(std::find(P.begin(), P.end(), w) - P.begin());
    if (iw == 0) continue;
    const Vertex z = P[iw - 1];
    if (g.has_edge(z, y) && (best == P.size() || z < P[best])) best = iw - 1;
  }
  if (best == P.size()) return std::nullopt;
  return concat({slice(P, 0, best + 1), reversed(slice(P, best + 1, P.size()))});
}

constexpr long kJoinSearchBudget = 200000;

// Hamiltonian cycle through vertex 0 using at most max_extra edges that are
// not path edges; path edges are tried first.
std::optional<Path> bounded_cycle(const std::vector<Path>& paths, const Graph& g, int max_extra) {
  const int n = g.n();
  std::vector<std::vector<Vertex>> pnb(n);
  for (const Path& p : paths)
    for (std::size_t i = 1; i < p.size(); ++i) {
      pnb[p[i - 1]].push_back(p[i]);
      pnb[p[i]].push_back(p[i - 1]);
    }
  auto on_path = [&](Vertex a, Vertex b) { return std::find(pnb[a].begin(), pnb[a].end(), b) != pnb[a].end(); };
  Path cur{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  long budget = 50'000'000;
  std::function<bool(int)> rec = [&](int extra) -> bool {
    if (--budget < 0) return false;
    const Vertex v = cur.back();
    if (static_cast<int>(cur.size()) == n) return g.has_edge(v, 0) && extra + !on_path(v, 0) <= max_extra;
    // A vertex with an unused path edge must leave along it unless it has no budget left.
    for (int pass = 0; pass < 2; ++pass) {
      for (Vertex w : g.neighbors(v)) {
        if (used[w] || on_path(v, w) != (pass == 0)) continue;
        const int e = extra + (pass == 1);
        if (e > max_extra) continue;
        used[w] = 1;
        cur.push_back(w);
        if (rec(e)) return true;
        cur.pop_back();
        used[w] = 0;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return cur;
}

// Depth-first over merge choices; the first branch is the greedy choice.
bool join_search(const std::vector<Path>& paths, const Graph& g, bool bipartite, long& budget, Path& order,
                 int& merges) {
  if (--budget < 0) return false;
  if (paths.size() == 1) {
    auto closed = close_path(paths.front(), g);
    if (!closed) return false;
    order = std::move(*closed);
    return true;
  }
  return for_each_merge(paths, g, bipartite, [&](std::vector<Path> next) {
    if (!join_search(next, g, bipartite, budget, order, merges)) return false;
    ++merges;
    return true;
  });
}

}  // namespace

JoinResult join_paths(const std::vector<std::vector<Vertex>>& input, const Graph& g, bool bipartite,
                      bool enforce_degree) {
  const int n = g.n();
  if (n < 3) throw PreconditionError("join_paths: need at least 3 vertices");
  if (bipartite && !g.bipartite()) throw PreconditionError("join_paths: bipartite mode needs a bipartition");
  if (enforce_degree) {
    const int d = min_degree(g);
    const bool ok = bipartite ? 2 * d >= g.part_size() : 2 * d > n;
    if (!ok) throw PreconditionError("join_paths: minimum degree " + std::to_string(d) + " is too small");
  }
  std::vector<Path> paths;
  std::vector<char> seen(n, 0);
  EdgeList original;
  for (const auto& p : input) {
    if (p.empty()) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= n || seen[p[i]]) throw PreconditionError("join_paths: paths are not vertex-disjoint");
      seen[p[i]] = 1;
      if (i > 0) {
        if (!g.has_edge(p[i - 1], p[i])) throw PreconditionError("join_paths: path uses a non-edge");
        original.emplace_back(p[i - 1], p[i]);
      }
    }
    paths.push_back(p);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw PreconditionError("join_paths: paths do not cover vertex " + std::to_string(v));
  original = canonical(std::move(original));

  JoinResult out;
  long budget = kJoinSearchBudget;
  if (!join_search(paths, g, bipartite, budget, out.order, out.merges)) {
    out.merges = 0;
    out.fallback = true;
    auto found = bounded_cycle(paths, g, 2 * static_cast<int>(paths.size()));
    if (!found) throw InvariantViolation("join_paths: no Hamiltonian cycle within 3k edits");
    out.order = std::move(*found);
  }
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    out.cycle.emplace_back(out.order[i], out.order[(i + 1) % out.order.size()]);
  }
  out.cycle = canonical(std::move(out.cycle));
  if (classify(g, out.cycle) != SubgraphClass::HamCycle) throw InvariantViolation("join_paths: result is not Hamiltonian");
  out.edits = static_cast<int>(symmetric_difference(out.cycle, original).size());
  return out;
}

PhiResult phi_record(const TwoFactor& f, const MonotoneGraph& mg) {
  PhiResult out;
  out.phi1 = phi1_record(f, mg);
  std::vector<std::vector<Vertex>> paths(out.phi1.ps.paths.begin(), out.phi1.ps.paths.end());
  out.join = join_paths(paths, mg.graph(), true);
  return out;
}

EdgeList phi(const TwoFactor& f, const MonotoneGraph& mg) { return phi_record(f, mg).join.cycle; }

}  // namespace hamswitch
