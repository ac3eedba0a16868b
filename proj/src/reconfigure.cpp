#include "hamswitch/reconfigure.hpp"

#include <sstream>

#include "hamswitch/errors.hpp"

namespace hamswitch {

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::ReconnectGeneral: return "reconnect-general";
    case StepKind::ReconnectSpecial: return "reconnect-special";
    case StepKind::Macro4Switch: return "macro-4switch";
    case StepKind::DirectCircuit: return "direct-circuit";
    case StepKind::Glue: return "glue";
  }
  return "?";
}

namespace {

struct Orient {
  std::vector<Vertex> succ, pred;

  explicit Orient(const TwoFactor& f) : succ(f.n()), pred(f.n()) {
    for (Vertex v = 0; v < f.n(); ++v) {
      succ[v] = f.next(v);
      pred[v] = f.prev(v);
    }
  }
  void flip(const std::vector<Vertex>& cyc) {
    for (Vertex v : cyc) std::swap(succ[v], pred[v]);
  }
};

std::string describe(std::initializer_list<std::pair<const char*, Vertex>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ' ';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

void require_degree(const Graph& g, const ReconfigureOptions& opt, int slack, const char* what) {
  if (opt.bipartite && !g.bipartite()) {
    throw PreconditionError(std::string(what) + ": bipartite mode needs a graph with a bipartition");
  }
  if (!opt.enforce_degree) return;
  if (!satisfies_degree_bound(g, opt.bipartite, slack)) {
    const int n_eff = opt.bipartite ? g.part_size() : g.n();
    throw PreconditionError(std::string(what) + ": minimum degree " + std::to_string(min_degree(g)) +
                            " is below " + std::to_string(n_eff) + "/2 + " + std::to_string(slack));
  }
}

void require_class(const Graph& g, const EdgeList& e, TargetClass c, const char* what) {
  if (!in_class(g, e, c)) {
    throw PreconditionError(std::string(what) + (c == TargetClass::HamCycles ? " is not a Hamiltonian cycle of the graph"
                                                                            : " is not a 2-factor of the graph"));
  }
}

/// x - R + A, or nullopt when R is not inside x, A meets x, or the edge
/// counts collide.
std::optional<EdgeList> exchange(const Graph& g, const EdgeList& x, const EdgeList& removed, const EdgeList& added,
                                 EdgeList* sw) {
  const EdgeList r = canonical(removed);
  const EdgeList a = canonical(added);
  if (r.size() != removed.size() || a.size() != added.size()) return std::nullopt;
  for (const Edge& e : r)
    if (!contains(x, e)) return std::nullopt;
  for (const Edge& e : a)
    if (contains(x, e) || !g.has_edge(e.u, e.v)) return std::nullopt;
  *sw = set_union(r, a);
  return set_union(set_minus(x, r), a);
}

TraceStep reconnect_once(const Graph& g, const TwoFactor& f, const EdgeList& h) {
  // H-edge vw joining two components; v lies in the lower-indexed one.
  Vertex v = -1, w = -1;
  std::tuple<int, Vertex, Vertex> best{INT32_MAX, 0, 0};
  for (const Edge& e : h) {
    int cu = f.component_of(e.u), cv = f.component_of(e.v);
    if (cu == cv) continue;
    Vertex lo = cu < cv ? e.u : e.v;
    Vertex hi = e.other(lo);
    std::tuple<int, Vertex, Vertex> key{std::min(cu, cv), lo, hi};
    if (key < best) {
      best = key;
      v = lo;
      w = hi;
    }
  }
  if (v < 0) throw InvariantViolation("reconnect: no edge of H joins two components");

  auto off_h_neighbour = [&](Vertex p) {
    Vertex r = -1;
    for (Vertex q : {f.next(p), f.prev(p)})
      if (!contains(h, Edge(p, q)) && (r < 0 || q < r)) r = q;
    if (r < 0) throw InvariantViolation("reconnect: both factor edges at a crossing vertex lie in H");
    return r;
  };
  const Vertex a = off_h_neighbour(v);
  const Vertex b = off_h_neighbour(w);

  Orient o(f);
  if (o.succ[a] != v) o.flip(f.cycles()[f.component_of(v)]);
  if (o.succ[w] != b) o.flip(f.cycles()[f.component_of(w)]);

  std::vector<char> in_x(g.n(), 0);
  for (Vertex u : g.neighbors(a)) in_x[o.succ[u]] = 1;
  Vertex y = -1;
  for (Vertex u : g.neighbors(b))
    if (in_x[u]) {
      y = u;
      break;
    }
  if (y < 0) throw InvariantViolation("reconnect: X and N(b) are disjoint");
  const Vertex x = o.pred[y];

  EdgeList removed, added;
  StepKind kind = StepKind::ReconnectSpecial;
  std::string which;
  if (y == o.succ[v]) {
    removed = {{v, y}, {b, w}};
    added = {{y, b}, {w, v}};
    which = "y=v+";
  } else if (y == w) {
    removed = {{v, a}, {x, w}};
    added = {{a, x}, {w, v}};
    which = "y=w";
  } else if (y == a || y == o.succ[b]) {
    removed = {{v, a}, {b, w}};
    added = {{a, b}, {w, v}};
    which = y == a ? "y=a" : "y=b+";
  } else {
    removed = {{v, a}, {x, y}, {b, w}};
    added = {{a, x}, {y, b}, {w, v}};
    kind = StepKind::ReconnectGeneral;
    which = "general";
  }
  TraceStep step;
  auto next = exchange(g, f.edges(), removed, added, &step.sw.edges);
  if (!next) throw InvariantViolation("reconnect: switch for case " + which + " is not an exchange");
  const TwoFactor nf = TwoFactor::from_edges(g, *next);
  if (nf.component_count() >= f.component_count()) {
    throw InvariantViolation("reconnect: component count did not drop");
  }
  if (symmetric_difference(*next, h).size() > symmetric_difference(f.edges(), h).size()) {
    throw InvariantViolation("reconnect: distance to H increased");
  }
  step.state = std::move(*next);
  step.kind = kind;
  step.detail = which + " " + describe({{"v", v}, {"w", w}, {"a", a}, {"b", b}, {"x", x}, {"y", y}});
  return step;
}

TransformTrace reconnect_impl(const Graph& g, const TwoFactor& t, const EdgeList& h) {
  TransformTrace out;
  out.initial = t.edges();
  TwoFactor cur = t;
  while (!cur.hamiltonian()) {
    TraceStep s = reconnect_once(g, cur, h);
    cur = TwoFactor::from_edges(g, s.state);
    out.steps.push_back(std::move(s));
  }
  out.final_state = cur.edges();
  return out;
}

std::vector<AlternatingWalk6> walks_in(const AlternatingCircuit& c) {
  std::vector<AlternatingWalk6> out;
  const std::size_t len = c.size();
  if (len < 6) return out;
  for (std::size_t i = 0; i < len; ++i) {
    if (c.sides[i] != Side::First) continue;
    AlternatingWalk6 w;
    for (std::size_t j = 0; j < 6; ++j) w.a[j] = c.vertices[(i + j) % len];
    if (w.a[0] != w.a[5]) out.push_back(w);
  }
  return out;
}

/// The 4-switch along a1..a6 plus a factor edge bc. In Hamiltonian mode
/// b in N(a1), c = b+ in N(a6) and the circuit is a1..a6 c b a1; in 2-factor
/// mode c in N(a1), b = c- in N(a6) and the circuit is a1..a6 b c a1.
std::optional<MacroResult> four_switch(const Graph& g, const EdgeList& x, const EdgeList& y,
                                       const AlternatingWalk6& walk, bool ham) {
  const auto& a = walk.a;
  const TwoFactor f = TwoFactor::from_edges(g, x);
  Orient o(f);
  if (o.succ[a[0]] != a[1]) o.flip(f.cycles()[f.component_of(a[0])]);
  std::vector<char> excluded(g.n(), 0);
  for (Vertex v : a) {
    excluded[o.succ[v]] = 1;
    excluded[o.pred[v]] = 1;
  }
  const std::size_t before = symmetric_difference(x, y).size();
  for (Vertex cand : g.neighbors(a[0])) {
    if (excluded[cand]) continue;
    Vertex b, c;
    EdgeList added;
    if (ham) {
      b = cand;
      c = o.succ[b];
      if (!g.has_edge(a[5], c)) continue;
    } else {
      c = cand;
      b = o.pred[c];
      if (!g.has_edge(a[5], b)) continue;
    }
    const EdgeList removed{{a[0], a[1]}, {a[2], a[3]}, {a[4], a[5]}, {b, c}};
    if (ham) added = {{a[1], a[2]}, {a[3], a[4]}, {a[5], c}, {b, a[0]}};
    else added = {{a[1], a[2]}, {a[3], a[4]}, {a[5], b}, {c, a[0]}};
    MacroResult r;
    auto t = exchange(g, x, removed, added, &r.sw.edges);
    if (!t) continue;
    const SubgraphClass cls = classify(g, *t);
    if (cls == SubgraphClass::Not2Factor) continue;
    if (ham && components(g.n(), *t).size() > 3) continue;
    if (symmetric_difference(*t, y).size() >= before) continue;
    r.kind = StepKind::Macro4Switch;
    r.t = std::move(*t);
    r.walk = walk;
    r.b = b;
    r.c = c;
    return r;
  }
  return std::nullopt;
}

MacroResult direct(const EdgeList& x, const EdgeList& circuit_edges) {
  MacroResult r;
  r.kind = StepKind::DirectCircuit;
  r.sw.edges = canonical(circuit_edges);
  r.t = symmetric_difference(x, r.sw.edges);
  return r;
}

MacroResult macro_impl(const Graph& g, const EdgeList& x, const EdgeList& y, bool ham, bool relaxed) {
  const int n = g.n();
  if (auto sc = find_short_circuit(n, x, y)) return direct(x, sc->edges);
  if (auto w = find_walk6(n, x, y)) {
    if (auto r = four_switch(g, x, y, *w, ham)) return *r;
  }
  if (relaxed) {
    const auto circuits = decompose_alternating(n, x, y);
    for (const auto& c : circuits)
      for (const auto& w : walks_in(c))
        if (auto r = four_switch(g, x, y, w, ham)) return *r;
    for (const auto& c : circuits)
      if (c.size() <= 8) return direct(x, c.edges);
  }
  throw InvariantViolation("no admissible 4-switch found for the selected alternating walk");
}

std::string walk_detail(const MacroResult& r) {
  if (!r.walk) return "circuit of " + std::to_string(r.sw.edges.size()) + " edges";
  const auto& a = r.walk->a;
  return describe({{"a1", a[0]}, {"a2", a[1]}, {"a3", a[2]}, {"a4", a[3]}, {"a5", a[4]}, {"a6", a[5]},
                   {"b", r.b}, {"c", r.c}});
}

}  // namespace

std::optional<AlternatingCircuit> find_short_circuit(int n, const EdgeList& x, const EdgeList& y) {
  std::array<std::vector<std::vector<Vertex>>, 2> adj;
  adj[0].assign(n, {});
  adj[1].assign(n, {});
  for (const Edge& e : set_minus(x, y)) {
    adj[0][e.u].push_back(e.v);
    adj[0][e.v].push_back(e.u);
  }
  for (const Edge& e : set_minus(y, x)) {
    adj[1][e.u].push_back(e.v);
    adj[1][e.v].push_back(e.u);
  }
  for (auto& s : adj)
    for (auto& l : s) std::sort(l.begin(), l.end());

  AlternatingCircuit cur;
  std::function<bool(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex at, std::size_t len) {
    const std::size_t depth = cur.edges.size();
    if (depth == len) return at == start;
    const int side = static_cast<int>(depth % 2);
    for (Vertex nb : adj[side][at]) {
      const Edge e(at, nb);
      if (std::find(cur.edges.begin(), cur.edges.end(), e) != cur.edges.end()) continue;
      cur.vertices.push_back(at);
      cur.edges.push_back(e);
      cur.sides.push_back(side == 0 ? Side::First : Side::Second);
      if (dfs(start, nb, len)) return true;
      cur.vertices.pop_back();
      cur.edges.pop_back();
      cur.sides.pop_back();
    }
    return false;
  };
  for (std::size_t len : {4u, 6u})
    for (Vertex s = 0; s < n; ++s)
      if (dfs(s, s, len)) return cur;
  return std::nullopt;
}

std::optional<AlternatingWalk6> find_walk6(int n, const EdgeList& x, const EdgeList& y) {
  if (x == y || find_short_circuit(n, x, y)) return std::nullopt;
  for (const auto& c : decompose_alternating(n, x, y)) {
    const auto ws = walks_in(c);
    if (!ws.empty()) return ws.front();
  }
  return std::nullopt;
}

std::optional<AlternatingWalk6> find_walk6(const HamCycle& h1, const HamCycle& h2) {
  return find_walk6(h1.n(), h1.edges(), h2.edges());
}

TransformTrace reconnect(const TwoFactor& t, const HamCycle& h, const Graph& g, const ReconfigureOptions& opt) {
  require_degree(g, opt, 1, "reconnect");
  require_class(g, t.edges(), TargetClass::TwoFactors, "reconnect: T");
  require_class(g, h.edges(), TargetClass::HamCycles, "reconnect: H");
  return reconnect_impl(g, t, h.edges());
}

MacroResult macro_step(const HamCycle& h1, const HamCycle& h2, const Graph& g, const ReconfigureOptions& opt) {
  require_degree(g, opt, 7, "macro_step");
  require_class(g, h1.edges(), TargetClass::HamCycles, "macro_step: h1");
  require_class(g, h2.edges(), TargetClass::HamCycles, "macro_step: h2");
  if (h1 == h2) throw PreconditionError("macro_step: h1 and h2 coincide");
  return macro_impl(g, h1.edges(), h2.edges(), true, !opt.enforce_degree);
}

TransformTrace transform_ham(const HamCycle& h1, const HamCycle& h2, const Graph& g, const ReconfigureOptions& opt) {
  require_degree(g, opt, 7, "transform_ham");
  require_class(g, h1.edges(), TargetClass::HamCycles, "transform_ham: h1");
  require_class(g, h2.edges(), TargetClass::HamCycles, "transform_ham: h2");
  TransformTrace out;
  out.initial = h1.edges();
  EdgeList cur = h1.edges();
  const EdgeList& target = h2.edges();
  while (cur != target) {
    const std::size_t before = symmetric_difference(cur, target).size();
    const MacroResult m = macro_impl(g, cur, target, true, !opt.enforce_degree);
    TraceStep glue;
    glue.substeps.push_back({m.sw, m.t, m.kind, walk_detail(m), {}});
    const TwoFactor t = TwoFactor::from_edges(g, m.t);
    if (t.component_count() > 3) throw InvariantViolation("macro step produced more than three components");
    TransformTrace rc = reconnect_impl(g, t, target);
    for (auto& s : rc.steps) glue.substeps.push_back(std::move(s));
    glue.sw.edges = symmetric_difference(cur, rc.final_state);
    glue.state = rc.final_state;
    glue.kind = StepKind::Glue;
    glue.detail = std::to_string(glue.substeps.size()) + " substeps";
    const std::size_t after = symmetric_difference(glue.state, target).size();
    if (after >= before) throw InvariantViolation("transform_ham: distance to target did not decrease");
    if (glue.sw.edges.size() > 20) throw InvariantViolation("transform_ham: composed switch exceeds 20 edges");
    cur = glue.state;
    out.steps.push_back(std::move(glue));
  }
  out.final_state = cur;
  return out;
}

TransformTrace transform_2factor(const TwoFactor& f1, const TwoFactor& f2, const Graph& g,
                                 const ReconfigureOptions& opt) {
  require_degree(g, opt, 7, "transform_2factor");
  require_class(g, f1.edges(), TargetClass::TwoFactors, "transform_2factor: f1");
  require_class(g, f2.edges(), TargetClass::TwoFactors, "transform_2factor: f2");
  TransformTrace out;
  out.initial = f1.edges();
  EdgeList cur = f1.edges();
  const EdgeList& target = f2.edges();
  while (cur != target) {
    const std::size_t before = symmetric_difference(cur, target).size();
    MacroResult m = macro_impl(g, cur, target, false, !opt.enforce_degree);
    if (symmetric_difference(m.t, target).size() >= before) {
      throw InvariantViolation("transform_2factor: distance to target did not decrease");
    }
    if (m.sw.edges.size() > 8) throw InvariantViolation("transform_2factor: switch exceeds size 4");
    cur = m.t;
    out.steps.push_back({m.sw, m.t, m.kind, walk_detail(m), {}});
  }
  out.final_state = cur;
  return out;
}

void verify_trace(const TransformTrace& t, const Graph& g, TargetClass target, int max_size) {
  EdgeList cur = t.initial;
  auto check = [&](const EdgeList& from, const TraceStep& s, TargetClass cls, int limit) {
    if (s.sw.edges.empty() || s.sw.edges.size() % 2 != 0 || static_cast<int>(s.sw.edges.size()) > 2 * limit) {
      throw InvariantViolation("trace step has switch of " + std::to_string(s.sw.edges.size()) + " edges");
    }
    const auto next = apply_switch(from, s.sw, g, cls);
    if (!next || *next != s.state) throw InvariantViolation("trace step does not reproduce its state");
  };
  for (const TraceStep& s : t.steps) {
    check(cur, s, target, max_size);
    EdgeList inner = cur;
    for (const TraceStep& sub : s.substeps) {
      check(inner, sub, TargetClass::TwoFactors, 4);
      inner = sub.state;
    }
    if (!s.substeps.empty() && inner != s.state) throw InvariantViolation("substeps do not compose to the step");
    cur = s.state;
  }
  if (cur != t.final_state) throw InvariantViolation("trace does not end at its final state");
}

}  // namespace hamswitch
