#include "hamswitch/js_chain.hpp"

#include <absl/container/flat_hash_map.h>

#include <bit>
#include <deque>

#include "hamswitch/errors.hpp"

namespace hamswitch {

AlmostTwoFactor AlmostTwoFactor::from_edges(const Graph& g, EdgeList edges) {
  AlmostTwoFactor x;
  x.edges = canonical(std::move(edges));
  std::vector<int> deg(g.n(), 0);
  for (const Edge& e : x.edges) {
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("almost 2-factor: edge not in graph");
    ++deg[e.u];
    ++deg[e.v];
  }
  int total = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (deg[v] > 2) throw PreconditionError("almost 2-factor: vertex of degree > 2");
    total += 2 - deg[v];
    if (deg[v] == 1) x.deficit.push_back(v);
    if (deg[v] == 0) x.deficit = {v, v};
  }
  if (total > 2) throw PreconditionError("almost 2-factor: total deficit exceeds 2");
  return x;
}

namespace {

// Bitmask view of edge sets; edge i of g is bit i.
struct MaskGraph {
  int n;
  std::vector<int> eidx;  // n*n, -1 when absent
  std::vector<std::uint64_t> inc;
  const Graph* g;

  explicit MaskGraph(const Graph& graph) : n(graph.n()), eidx(graph.n() * graph.n(), -1), inc(graph.n(), 0), g(&graph) {
    if (graph.m() > 64) throw PreconditionError("JS chain analysis supports at most 64 edges");
    for (int i = 0; i < graph.m(); ++i) {
      const Edge& e = graph.edges()[i];
      eidx[e.u * n + e.v] = eidx[e.v * n + e.u] = i;
      inc[e.u] |= std::uint64_t{1} << i;
      inc[e.v] |= std::uint64_t{1} << i;
    }
  }
  int deg(std::uint64_t s, Vertex v) const { return std::popcount(s & inc[v]); }
  std::uint64_t mask(const EdgeList& e) const {
    std::uint64_t s = 0;
    for (const Edge& x : e) s |= std::uint64_t{1} << eidx[x.u * n + x.v];
    return s;
  }
  EdgeList edges(std::uint64_t s) const {
    EdgeList out;
    for (; s; s &= s - 1) out.push_back(g->edges()[std::countr_zero(s)]);
    return out;
  }
};

struct MaskMove {
  std::uint64_t target;
  int units;
  int type;
};

std::vector<MaskMove> mask_transitions(const MaskGraph& mg, std::uint64_t s) {
  const int n = mg.n;
  std::vector<int> deg(n);
  bool two_factor = true;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = mg.deg(s, v);
    two_factor = two_factor && deg[v] == 2;
  }
  std::vector<MaskMove> moves;
  if (two_factor) {
    // Type 0: (i,j) and (j,i) both delete ij.
    for (std::uint64_t r = s; r; r &= r - 1) moves.push_back({s & ~(r & -r), 4, 0});
  } else {
    for (Vertex i = 0; i < n; ++i) {
      if (deg[i] >= 2) continue;
      for (Vertex j = 0; j < n; ++j) {
        const int e = j == i ? -1 : mg.eidx[i * n + j];
        if (e < 0 || (s >> e) & 1) continue;
        const std::uint64_t added = s | (std::uint64_t{1} << e);
        if (deg[j] + 1 <= 2) {
          moves.push_back({added, 2, 2});
        } else {
          for (std::uint64_t r = s & mg.inc[j]; r; r &= r - 1) moves.push_back({added & ~(r & -r), 1, 1});
        }
      }
    }
  }
  std::sort(moves.begin(), moves.end(), [](const MaskMove& a, const MaskMove& b) { return a.target < b.target; });
  std::vector<MaskMove> merged;
  for (const MaskMove& m : moves) {
    if (!merged.empty() && merged.back().target == m.target) merged.back().units += m.units;
    else merged.push_back(m);
  }
  return merged;
}

}  // namespace

AlmostTwoFactor js_step(const AlmostTwoFactor& x, const Graph& g, Rng& rng, JsMove* move) {
  const int n = g.n();
  const Vertex i = rng.below_int(n);
  const Vertex j = rng.below_int(n);
  JsMove mv;
  mv.i = i;
  mv.j = j;
  std::vector<int> deg(n, 0);
  for (const Edge& e : x.edges) ++deg[e.u], ++deg[e.v];
  AlmostTwoFactor out = x;
  const bool in_f = i != j && contains(x.edges, Edge(i, j));
  if (x.is_two_factor()) {
    if (in_f) {
      out = AlmostTwoFactor::from_edges(g, set_minus(x.edges, {Edge(i, j)}));
      mv.type = 0;
    }
  } else if (i != j && deg[i] < 2 && !in_f && g.has_edge(i, j)) {
    EdgeList e = set_union(x.edges, {Edge(i, j)});
    if (deg[j] + 1 > 2) {
      std::vector<Vertex> far;
      for (const Edge& f : x.edges)
        if (f.touches(j)) far.push_back(f.other(j));
      mv.k = far[rng.below(far.size())];
      e = set_minus(e, {Edge(j, mv.k)});
      mv.type = 1;
    } else {
      mv.type = 2;
    }
    out = AlmostTwoFactor::from_edges(g, std::move(e));
  }
  if (move) *move = mv;
  return out;
}

std::vector<JsTransition> js_transitions(const AlmostTwoFactor& x, const Graph& g) {
  const MaskGraph mg(g);
  std::vector<JsTransition> out;
  for (const MaskMove& m : mask_transitions(mg, mg.mask(x.edges))) out.push_back({mg.edges(m.target), m.units, m.type});
  std::sort(out.begin(), out.end(), [](const JsTransition& a, const JsTransition& b) { return a.target < b.target; });
  return out;
}

namespace {
Rational unit_probability(int n) { return Rational(1, 2 * n * n); }
}  // namespace

JsAdjacency js_adjacent(const AlmostTwoFactor& x, const AlmostTwoFactor& y, const Graph& g) {
  JsAdjacency r;
  if (x.edges == y.edges) return r;
  for (const JsTransition& t : js_transitions(x, g)) {
    if (t.target == y.edges) {
      r.adjacent = true;
      r.probability = unit_probability(g.n()) * t.units;
    }
  }
  return r;
}

JsStateGraph build_js_state_graph(const Graph& g, std::size_t cap) {
  const MaskGraph mg(g);
  JsStateGraph sg;
  sg.states = enumerate(g, EnumClass::AlmostTwoFactor, cap);
  absl::flat_hash_map<std::uint64_t, int> index;
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < sg.states.size(); ++i) {
    masks.push_back(mg.mask(sg.states[i]));
    index.emplace(masks.back(), static_cast<int>(i));
    bool f = true;
    for (Vertex v = 0; v < g.n() && f; ++v) f = mg.deg(masks.back(), v) == 2;
    sg.two_factor.push_back(f);
  }
  sg.out.resize(sg.states.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (const MaskMove& m : mask_transitions(mg, masks[i])) {
      auto it = index.find(m.target);
      if (it == index.end()) throw InvariantViolation("JS transition left the almost 2-factor class");
      sg.out[i].emplace_back(it->second, m.units);
    }
  }
  return sg;
}

KjsResult k_js(const JsStateGraph& sg) {
  const std::size_t n = sg.states.size();
  std::vector<std::vector<int>> in(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, u] : sg.out[i]) in[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
  KjsResult r;
  r.dist.assign(n, -1);
  std::deque<int> q;
  for (std::size_t i = 0; i < n; ++i)
    if (sg.two_factor[i]) {
      r.dist[i] = 0;
      q.push_back(static_cast<int>(i));
    }
  if (q.empty()) throw PreconditionError("k_JS: graph has no 2-factor");
  // Distance from a state to the 2-factors: walk arcs backwards.
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int u : in[static_cast<std::size_t>(v)])
      if (r.dist[static_cast<std::size_t>(u)] < 0) {
        r.dist[static_cast<std::size_t>(u)] = r.dist[static_cast<std::size_t>(v)] + 1;
        q.push_back(u);
      }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (r.dist[i] < 0) {
      r.finite = false;
      if (!r.witness) r.witness = sg.states[i];
    } else {
      r.value = std::max(r.value, r.dist[i]);
    }
  }
  return r;
}

KjsResult k_js(const Graph& g, std::size_t cap) { return k_js(build_js_state_graph(g, cap)); }

Repair repair(const AlmostTwoFactor& f, const Graph& g) {
  Repair r;
  if (f.is_two_factor()) {
    r.factor = f.edges;
    return r;
  }
  const int n = g.n();
  const Vertex x = f.deficit[0], y = f.deficit[1];
  std::vector<std::vector<Vertex>> nb(n);
  for (const Edge& e : f.edges) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  std::vector<Vertex> pred(n, -1);
  std::vector<char> seen(n, 0);
  // Path from x to y.
  seen[x] = 1;
  for (Vertex prev = -1, cur = x; cur != y;) {
    Vertex nxt = -1;
    for (Vertex w : nb[cur])
      if (w != prev) nxt = w;
    pred[nxt] = cur;
    seen[nxt] = 1;
    prev = cur;
    cur = nxt;
  }
  // Cycles from their smallest vertex toward its smaller neighbour.
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Vertex prev = s, cur = std::min(nb[s][0], nb[s][1]);
    pred[cur] = s;
    seen[s] = 1;
    while (cur != s) {
      seen[cur] = 1;
      const Vertex nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
      pred[nxt] = cur;
      prev = cur;
      cur = nxt;
    }
  }
  for (Vertex z : g.neighbors(x)) {
    const Vertex zm = pred[z];
    if (zm < 0 || zm == y || !g.has_edge(y, zm)) continue;
    EdgeList out = set_union(set_minus(f.edges, {Edge(z, zm)}), canonical({Edge(x, z), Edge(y, zm)}));
    if (classify(g, out) == SubgraphClass::Not2Factor) continue;
    r.factor = std::move(out);
    r.z = z;
    r.difference = static_cast<int>(symmetric_difference(f.edges, r.factor).size());
    return r;
  }
  auto finish = [&](EdgeList out) {
    r.factor = std::move(out);
    r.difference = static_cast<int>(symmetric_difference(f.edges, r.factor).size());
    return r;
  };
  if (x != y && g.has_edge(x, y) && !contains(f.edges, Edge(x, y))) {
    EdgeList out = set_union(f.edges, {Edge(x, y)});
    if (classify(g, out) != SubgraphClass::Not2Factor) return finish(std::move(out));
  }
  for (const Edge& e : f.edges)
    for (const auto& [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (!g.has_edge(x, a) || !g.has_edge(y, b)) continue;
      const EdgeList add = canonical({Edge(x, a), Edge(y, b)});
      if (add[0] == add[1]) continue;
      EdgeList out = set_union(set_minus(f.edges, {e}), add);
      if (out.size() != f.edges.size() + 1 || classify(g, out) == SubgraphClass::Not2Factor) continue;
      return finish(std::move(out));
    }
  const auto all = enumerate(g, EnumClass::TwoFactor);
  if (all.empty()) throw PreconditionError("repair: graph has no 2-factor");
  const EdgeList* best = nullptr;
  std::size_t best_d = 0;
  for (const EdgeList& h : all) {
    const std::size_t d = symmetric_difference(f.edges, h).size();
    if (!best || d < best_d) best = &h, best_d = d;
  }
  r.fallback = true;
  return finish(*best);
}

JsReport js_exact(const Graph& g, std::size_t cap) {
  JsReport rep;
  rep.n = g.n();
  const JsStateGraph sg = build_js_state_graph(g, cap);
  const std::size_t N = sg.states.size();
  rep.almost = N;
  const int total = 2 * g.n() * g.n();
  std::vector<int> indeg(N, 0);
  absl::flat_hash_map<std::uint64_t, int> arc;  // (i << 32 | j) -> units
  for (std::size_t i = 0; i < N; ++i) {
    int sum = 0;
    for (const auto& [j, u] : sg.out[i]) {
      sum += u;
      ++indeg[static_cast<std::size_t>(j)];
      arc.emplace((static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j), u);
    }
    if (sum > total) rep.stochastic = false;
    rep.max_out_degree = std::max(rep.max_out_degree, static_cast<int>(sg.out[i].size()));
    rep.factors += sg.two_factor[i] ? 1 : 0;
  }
  int min_units = total;
  for (const auto& [key, u] : arc) {
    const std::uint64_t rev = (key << 32) | (key >> 32);
    auto it = arc.find(rev);
    if (it == arc.end() || it->second != u) rep.symmetric = false;
    min_units = std::min(min_units, u);
  }
  for (int d : indeg) rep.max_in_degree = std::max(rep.max_in_degree, d);
  rep.max_inverse_probability = arc.empty() ? Rational(0) : Rational(total, min_units);
  if (rep.factors == 0) throw PreconditionError("js_exact: graph has no 2-factor");
  rep.kjs = k_js(sg);
  absl::flat_hash_map<StateKey, std::size_t> preimage;
  for (std::size_t i = 0; i < N; ++i) {
    if (sg.two_factor[i]) continue;
    const Repair r = repair(AlmostTwoFactor::from_edges(g, sg.states[i]), g);
    rep.repair_max_difference = std::max(rep.repair_max_difference, r.difference);
    if (r.fallback && rep.repair_fallbacks++ == 0) rep.repair_witness = sg.states[i];
    rep.sigma_preimage_max = std::max(rep.sigma_preimage_max, ++preimage[state_key(g, r.factor)]);
  }
  rep.ratio = Rational(BigInt(N), BigInt(rep.factors));
  return rep;
}

}  // namespace hamswitch
