#include "hamswitch/io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hamswitch/errors.hpp"
#include "hamswitch/rng.hpp"

namespace hamswitch {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (int no = 1; std::getline(in, text); ++no) {
    std::istringstream ss(text);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    out.push_back({no, std::move(tok)});
  }
  return out;
}

long parse_int(const std::string& s, int line) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
  if (pos != s.size()) throw ParseError("expected an integer, got '" + s + "'", line);
  return v;
}

struct Parsed {
  int n = 0;
  std::optional<int> part_a;
  EdgeList edges;
};

Parsed parse(std::istream& in, bool allow_bipartite) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError("missing header 'n m'", 1);
  const Line& h = lines[0];
  if (h.tokens.size() != 2 && !(allow_bipartite && h.tokens.size() == 4 && h.tokens[2] == "bipartite")) {
    throw ParseError("header must be 'n m' or 'n m bipartite a'", h.number);
  }
  Parsed p;
  const long n = parse_int(h.tokens[0], h.number);
  const long m = parse_int(h.tokens[1], h.number);
  if (n < 0 || m < 0) throw ParseError("negative count in header", h.number);
  p.n = static_cast<int>(n);
  if (h.tokens.size() == 4) {
    const long a = parse_int(h.tokens[3], h.number);
    if (2 * a != n) throw ParseError("bipartite part size must be n/2", h.number);
    p.part_a = static_cast<int>(a);
  }
  if (static_cast<long>(lines.size()) - 1 != m) {
    const int where = lines.size() > static_cast<std::size_t>(m) + 1 ? lines[static_cast<std::size_t>(m) + 1].number
                                                                     : lines.back().number;
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1),
                     where);
  }
  EdgeList seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError("edge line must be 'u v'", l.number);
    const long u = parse_int(l.tokens[0], l.number), v = parse_int(l.tokens[1], l.number);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex out of range", l.number);
    if (u == v) throw ParseError("self-loop", l.number);
    const Edge e(static_cast<int>(u), static_cast<int>(v));
    if (p.part_a && (e.u < *p.part_a) == (e.v < *p.part_a)) {
      throw ParseError("edge does not cross the bipartition", l.number);
    }
    p.edges.push_back(e);
  }
  const EdgeList sorted = canonical(p.edges);
  if (sorted.size() != p.edges.size()) {
    std::vector<Edge> so_far;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (std::find(so_far.begin(), so_far.end(), p.edges[i]) != so_far.end())
        throw ParseError("duplicate edge", lines[i + 1].number);
      so_far.push_back(p.edges[i]);
    }
  }
  p.edges = sorted;
  return p;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  Parsed p = parse(in, true);
  return Graph(p.n, std::move(p.edges), p.part_a);
}

Graph read_graph_file(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m();
  if (g.bipartite()) out << " bipartite " << g.part_size();
  out << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

EdgeList read_edges(std::istream& in, const Graph& g) {
  Parsed p = parse(in, false);
  if (p.n != g.n()) throw ParseError("edge list is for " + std::to_string(p.n) + " vertices, graph has " +
                                         std::to_string(g.n()),
                                     1);
  for (const Edge& e : p.edges)
    if (!g.has_edge(e.u, e.v))
      throw PreconditionError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not in the graph");
  return p.edges;
}

EdgeList read_edges_file(const std::string& path, const Graph& g) {
  auto in = open_in(path);
  return read_edges(in, g);
}

void write_edges(std::ostream& out, int n, const EdgeList& e) {
  out << n << ' ' << e.size() << '\n';
  for (const Edge& x : e) out << x.u << ' ' << x.v << '\n';
}

void write_edges_file(const std::string& path, int n, const EdgeList& e) {
  auto out = open_out(path);
  write_edges(out, n, e);
}

Json to_json(const EdgeList& e) {
  Json a = Json::array();
  for (const Edge& x : e) a.push_back({x.u, x.v});
  return a;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const ChainConfig& c) {
  return {{"k", c.k}, {"class", to_string(c.target)}, {"lazy", c.lazy}, {"seed", c.seed}};
}

Json to_json(const Trajectory& t) {
  Json props = Json::array();
  for (const Proposal& p : t.proposals) {
    props.push_back({{"step", p.step}, {"L", to_json(p.edges)}, {"accepted", p.accepted}, {"lazy_hold", p.lazy_hold}});
  }
  return {{"config", to_json(t.config)}, {"start", to_json(t.start)}, {"proposals", props},
          {"final", to_json(t.final_state)}};
}

namespace {
Json step_json(const TraceStep& s) {
  Json j = {{"kind", to_string(s.kind)},
            {"switch_size", s.sw.size()},
            {"L", to_json(s.sw.edges)},
            {"state", to_json(s.state)},
            {"detail", s.detail}};
  if (!s.substeps.empty()) {
    Json sub = Json::array();
    for (const TraceStep& x : s.substeps) sub.push_back(step_json(x));
    j["substeps"] = sub;
  }
  return j;
}
}  // namespace

Json to_json(const TransformTrace& t) {
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) steps.push_back(step_json(s));
  return {{"initial", to_json(t.initial)}, {"steps", steps}, {"final", to_json(t.final_state)}};
}

Json to_json(const MixReport& r) {
  Json j = {{"omega", r.omega},      {"lazy", r.lazy},           {"k", r.k},
            {"theta", to_json(r.theta)}, {"eps", r.eps},          {"tau", r.tau},
            {"lambda1", r.lambda1},  {"lambda_min", r.lambda_min}, {"sinclair_bound", Json::array()},
            {"trials", r.trials},    {"starts", r.starts},       {"t_grid", r.t_grid}};
  for (double s : r.sinclair) j["sinclair_bound"].push_back(std::isfinite(s) ? Json(s) : Json("inf"));
  if (r.trials > 0) j["seed"] = r.seed;
  return j;
}

Json to_json(const JsReport& r) {
  Json kjs = {{"finite", r.kjs.finite}, {"value", r.kjs.value}};
  if (r.kjs.witness) kjs["unreachable_witness"] = to_json(*r.kjs.witness);
  return {{"n", r.n},
          {"almost_two_factors", r.almost},
          {"two_factors", r.factors},
          {"pair_convention", "ordered pairs (i,j) over all n^2, i=j holds"},
          {"symmetric", r.symmetric},
          {"stochastic", r.stochastic},
          {"max_out_degree", r.max_out_degree},
          {"max_in_degree", r.max_in_degree},
          {"max_inverse_probability", to_json(r.max_inverse_probability)},
          {"k_js", kjs},
          {"repair_max_difference", r.repair_max_difference},
          {"repair_fallbacks", r.repair_fallbacks},
          {"repair_witness", r.repair_witness ? to_json(*r.repair_witness) : Json(nullptr)},
          {"sigma_preimage_max", r.sigma_preimage_max},
          {"ratio", to_json(r.ratio)}};
}

Json to_json(const PathSystem& ps) {
  return {{"P_A1", ps.paths[kPathA1]}, {"P_B1", ps.paths[kPathB1]}, {"P_A2B2", ps.paths[kPathA2B2]}};
}

Json to_json(const PhiResult& r) {
  return {{"path_system", to_json(r.phi1.ps)},
          {"cut_edges", to_json(r.phi1.cut)},
          {"glue_edges", to_json(r.phi1.glue)},
          {"merges", r.join.merges},
          {"join_edits", r.join.edits},
          {"cycle_order", r.join.order}};
}

Json envelope(const std::string& command, const Json& config, const Json& result) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ts;
  ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return {{"tool", "hamswitch"}, {"version", kVersion}, {"rng", Rng::kAlgorithm}, {"command", command},
          {"config", config},    {"result", result},    {"timestamp", ts.str()}};
}

Json strip_timestamps(Json j) {
  if (j.is_object()) {
    j.erase("timestamp");
    for (auto& [k, v] : j.items()) v = strip_timestamps(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timestamps(v);
  }
  return j;
}

}  // namespace hamswitch
