#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hamswitch/errors.hpp"
#include "hamswitch/families.hpp"
#include "hamswitch/io.hpp"
#include "hamswitch/reproduce.hpp"
#include "hamswitch/rng.hpp"

using namespace hamswitch;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kCap = 3, kClaimFailed = 4 };

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != tok.size() || !(v > 0 && v < 1)) throw PreconditionError("bad epsilon '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw PreconditionError("no epsilon given");
  return out;
}

void write_tv_csv(const std::string& path, const MixReport& r) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << "start,t,tv\n";
  out.precision(17);
  for (std::size_t s = 0; s < r.tv.size(); ++s)
    for (std::size_t i = 0; i < r.t_grid.size() && i < r.tv[s].size(); ++i)
      out << r.starts[s] << ',' << r.t_grid[i] << ',' << r.tv[s][i] << '\n';
}

Json graph_summary(const Graph& g) {
  return {{"n", g.n()}, {"m", g.m()}, {"bipartite", g.bipartite()}, {"min_degree", min_degree(g)}};
}


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamswitch: switch chains on Hamiltonian cycles and 2-factors of dense graphs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Json config = Json::object();
  std::function<Json()> action;
  std::string command, out_path;

  // sample
  auto* sample = app.add_subcommand("sample", "run the k-switch chain and record every proposal");
  struct {
    std::string graph, start, cls = "ham", out;
    int k = 2;
    long long steps = 1000;
    std::uint64_t seed = 1;
    bool lazy = false;
  } so;
  sample->add_option("--graph", so.graph, "graph file")->required();
  sample->add_option("--k", so.k, "switch size bound");
  sample->add_option("--class", so.cls, "ham | 2factor");
  sample->add_option("--steps", so.steps, "number of steps")->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", so.seed, "RNG seed");
  sample->add_option("--start", so.start, "start state edge file (default: seeded random member)");
  sample->add_flag("--lazy", so.lazy, "lazy chain");
  sample->add_option("--out", so.out, "trace JSON (default stdout)");
  sample->callback([&] {
    command = "sample";
    out_path = so.out;
    config = {{"graph", so.graph}, {"start", so.start}, {"k", so.k}, {"class", so.cls},
              {"steps", so.steps}, {"seed", so.seed}, {"lazy", so.lazy}};
    action = [&]() -> Json {
      const Graph g = read_graph_file(so.graph);
      ChainConfig cfg;
      cfg.k = so.k;
      cfg.target = parse_target_class(so.cls);
      cfg.lazy = so.lazy;
      cfg.seed = so.seed;
      EdgeList start;
      if (!so.start.empty())
        start = read_edges_file(so.start, g);
      else if (cfg.target == TargetClass::HamCycles)
        start = random_ham_cycle(g, Rng::derive(so.seed, 0x57A7)).edges();
      else
        start = random_two_factor(g, Rng::derive(so.seed, 0x57A7), 10).edges();
      return to_json(run_chain(g, cfg, start, so.steps));
    };
  });

  // transform
  auto* transform = app.add_subcommand("transform", "constructive switch sequence between two states");
  struct {
    std::string graph, from, to, cls = "ham", out;
    bool bipartite = false, relaxed = false;
  } to;
  transform->add_option("--graph", to.graph, "graph file")->required();
  transform->add_option("--from", to.from, "source edge file")->required();
  transform->add_option("--to", to.to, "target edge file")->required();
  transform->add_option("--class", to.cls, "ham | 2factor");
  transform->add_flag("--bipartite", to.bipartite, "balanced bipartite mode");
  transform->add_flag("--relaxed", to.relaxed, "skip the minimum degree precondition");
  transform->add_option("--out", to.out, "trace JSON (default stdout)");
  transform->callback([&] {
    command = "transform";
    out_path = to.out;
    config = {{"graph", to.graph}, {"from", to.from}, {"to", to.to},
              {"class", to.cls},   {"bipartite", to.bipartite}, {"relaxed", to.relaxed}};
    action = [&]() -> Json {
      const Graph g = read_graph_file(to.graph);
      const EdgeList a = read_edges_file(to.from, g), b = read_edges_file(to.to, g);
      ReconfigureOptions opt;
      opt.bipartite = to.bipartite;
      opt.enforce_degree = !to.relaxed;
      const TargetClass tc = parse_target_class(to.cls);
      TransformTrace tr;
      int bound = 4;
      if (tc == TargetClass::HamCycles) {
        tr = transform_ham(HamCycle::from_edges(g, a), HamCycle::from_edges(g, b), g, opt);
        bound = 10;
      } else {
        tr = transform_2factor(TwoFactor::from_edges(g, a), TwoFactor::from_edges(g, b), g, opt);
      }
      verify_trace(tr, g, tc, bound);
      Json j = to_json(tr);
      int max_size = 0;
      for (const TraceStep& s : tr.steps) max_size = std::max(max_size, s.sw.size());
      j["summary"] = {{"length", tr.steps.size()},
                      {"initial_distance", symmetric_difference(a, b).size()},
                      {"max_switch_size", max_size},
                      {"switch_size_bound", bound},
                      {"verified", true}};
      return j;
    };
  });

  // family
  auto* family = app.add_subcommand("family", "build a named graph family");
  family->require_subcommand(1);
  struct {
    std::string out, json;
    int m = 3, l = 3, k = 4, n = 0, delta = 0;
    std::uint64_t seed = 1;
    bool bipartite = false;
  } fo;
  std::string family_kind;
  Graph family_graph;
  auto add_family_io = [&](CLI::App* c) {
    c->add_option("--out", fo.out, "graph file (default stdout)");
    c->add_option("--json", fo.json, "sidecar JSON (default <out>.json, or stderr)");
  };
  auto* f_parity = family->add_subcommand("parity", "blue-parity example");
  f_parity->add_option("--m", fo.m, "odd m >= 3")->required();
  auto* f_gadget = family->add_subcommand("gadget", "gadget X(l)");
  f_gadget->add_option("--l", fo.l, "odd l >= 3")->required();
  auto* f_locked = family->add_subcommand("locked", "k-locked bipartite example");
  f_locked->add_option("--k", fo.k, "even k >= 4")->required();
  f_locked->add_option("--n", fo.n, "vertices per side (default minimal)");
  auto* f_stair = family->add_subcommand("staircase", "staircase monotone graph");
  f_stair->add_option("--n", fo.n, "even n >= 4")->required();
  auto* f_random = family->add_subcommand("random", "seeded random graph with a minimum degree");
  f_random->add_option("--n", fo.n, "vertices (per side if bipartite)")->required();
  f_random->add_option("--delta", fo.delta, "minimum degree")->required();
  f_random->add_option("--seed", fo.seed, "RNG seed");
  f_random->add_flag("--bipartite", fo.bipartite, "balanced bipartite");
  for (auto* c : {f_parity, f_gadget, f_locked, f_stair, f_random}) add_family_io(c);
  family->callback([&] {
    command = "family";
    for (auto* c : family->get_subcommands()) family_kind = c->get_name();
    config = {{"family", family_kind}};
    if (family_kind == "parity") config["m"] = fo.m;
    if (family_kind == "gadget") config["l"] = fo.l;
    if (family_kind == "locked") config["k"] = fo.k, config["n"] = fo.n;
    if (family_kind == "staircase") config["n"] = fo.n;
    if (family_kind == "random")
      config["n"] = fo.n, config["delta"] = fo.delta, config["seed"] = fo.seed, config["bipartite"] = fo.bipartite;
    out_path = fo.json.empty() ? (fo.out.empty() ? std::string("<stderr>") : fo.out + ".json") : fo.json;
    action = [&]() -> Json {
      Json p = Json::object();
      Graph g;
      if (family_kind == "parity") {
        const ParityExample ex = build_parity_example(fo.m);
        g = ex.cg.graph;
        Json blue = Json::array();
        for (int i = 0; i < g.m(); ++i)
          if (ex.cg.blue[static_cast<std::size_t>(i)]) blue.push_back({g.edges()[static_cast<std::size_t>(i)].u, g.edges()[static_cast<std::size_t>(i)].v});
        p = {{"blue_edges", blue},
             {"h1", to_json(ex.h1.edges())},
             {"h2", to_json(ex.h2.edges())},
             {"h1_parity", to_string(blue_parity(ex.cg, ex.h1.edges()))},
             {"h2_parity", to_string(blue_parity(ex.cg, ex.h2.edges()))}};
      } else if (family_kind == "gadget") {
        const GadgetX x = build_gadget_x(fo.l);
        g = x.graph;
        const auto paths = enumerate_ham_paths(g);
        Json ps = Json::array();
        for (const EdgeList& e : paths) ps.push_back(to_json(e));
        p = {{"forced_edges", to_json(x.forced)},
             {"hamiltonian_paths", paths.size()},
             {"paths", ps},
             {"difference", paths.size() == 2 ? symmetric_difference(paths[0], paths[1]).size() : 0}};
      } else if (family_kind == "locked") {
        const LockedExample ex = build_locked_example(fo.k, fo.n > 0 ? fo.n : locked_default_n(fo.k));
        g = ex.graph;
        p = {{"k", ex.k}, {"gadget_l", ex.ell}, {"gadget_vertices", ex.r}, {"size_a", ex.size_a}, {"size_b", ex.size_b}};
        if (g.n() <= 40) {
          const auto hs = enumerate(g, EnumClass::Ham);
          p["hamiltonian_cycles"] = hs.size();
          if (hs.size() <= 64) {
            p["components_k"] = check_irreducible(build_state_graph(g, TargetClass::HamCycles, ex.k)).components;
            p["components_k_plus_1"] = check_irreducible(build_state_graph(g, TargetClass::HamCycles, ex.k + 1)).components;
          }
        }
      } else if (family_kind == "staircase") {
        const MonotoneGraph st = build_staircase(fo.n);
        g = st.graph();
        p = {{"r", st.r()}, {"t", st.t()}};
        if (fo.n <= 12) {
          p["hamiltonian_cycles"] = enumerate(g, EnumClass::Ham).size();
          p["expected_2^(n-2)"] = std::size_t{1} << (fo.n - 2);
        }
      } else {
        g = random_dense_graph(fo.n, fo.delta, fo.seed, fo.bipartite);
      }
      Json props = graph_summary(g);
      props.update(p);
      family_graph = g;
      return props;
    };
  });

  // monotone-embed
  auto* embed = app.add_subcommand("monotone-embed", "map a 2-factor of a dense monotone graph to a Hamiltonian cycle");
  struct {
    std::string graph, two_factor, out, trace;
  } mo;
  embed->add_option("--graph", mo.graph, "monotone bipartite graph file")->required();
  embed->add_option("--two-factor", mo.two_factor, "2-factor edge file")->required();
  embed->add_option("--out", mo.out, "Hamiltonian cycle edge file (default stdout)");
  embed->add_option("--trace", mo.trace, "embedding trace JSON");
  EdgeList embed_cycle;
  int embed_n = 0;
  embed->callback([&] {
    command = "monotone-embed";
    out_path = mo.trace.empty() ? "<none>" : mo.trace;
    config = {{"graph", mo.graph}, {"two_factor", mo.two_factor}};
    action = [&]() -> Json {
      const Graph g = read_graph_file(mo.graph);
      const auto mg = validate_monotone(g);
      if (!mg) throw PreconditionError("graph is not a monotone bipartite graph with interval rows");
      const TwoFactor f = TwoFactor::from_edges(g, read_edges_file(mo.two_factor, g));
      const PhiResult r = phi_record(f, *mg);
      embed_cycle = r.join.cycle;
      embed_n = g.n();
      Json j = to_json(r);
      j["cut_count"] = r.phi1.cut.size();
      j["glue_count"] = r.phi1.glue.size();
      j["phi1_distance"] = symmetric_difference(f.edges(), r.phi1.ps.edges()).size();
      j["join_fallback"] = r.join.fallback;
      return j;
    };
  });

  // js
  auto* js = app.add_subcommand("js", "JS chain on almost 2-factors");
  struct {
    std::string graph, out;
    long long steps = 1000;
    std::uint64_t seed = 1;
    bool exact = false;
    std::size_t cap = kDefaultEnumCap;
  } jo;
  js->add_option("--graph", jo.graph, "graph file")->required();
  js->add_option("--steps", jo.steps, "walk length")->check(CLI::NonNegativeNumber);
  js->add_option("--seed", jo.seed, "RNG seed");
  js->add_flag("--exact", jo.exact, "build the exact state graph and report k_JS and bounds");
  js->add_option("--cap", jo.cap, "enumeration cap");
  js->add_option("--out", jo.out, "report JSON (default stdout)");
  js->callback([&] {
    command = "js";
    out_path = jo.out;
    config = {{"graph", jo.graph}, {"exact", jo.exact}, {"cap", jo.cap}};
    if (!jo.exact) config["steps"] = jo.steps, config["seed"] = jo.seed;
    action = [&]() -> Json {
      const Graph g = read_graph_file(jo.graph);
      if (jo.exact) return to_json(js_exact(g, jo.cap));
      Rng rng(jo.seed);
      AlmostTwoFactor x = AlmostTwoFactor::from_edges(g, random_two_factor(g, Rng::derive(jo.seed, 0x15), 10).edges());
      std::array<long long, 3> type_counts{};
      long long holds = 0, in_factors = 0;
      for (long long s = 0; s < jo.steps; ++s) {
        JsMove mv;
        x = js_step(x, g, rng, &mv);
        if (mv.type < 0)
          ++holds;
        else
          ++type_counts[static_cast<std::size_t>(mv.type)];
        in_factors += x.is_two_factor();
      }
      return {{"steps", jo.steps},
              {"moves", {{"type0", type_counts[0]}, {"type1", type_counts[1]}, {"type2", type_counts[2]}, {"hold", holds}}},
              {"fraction_in_two_factors", jo.steps ? static_cast<double>(in_factors) / static_cast<double>(jo.steps) : 0.0},
              {"final", to_json(x.edges)},
              {"final_deficit", x.deficit}};
    };
  });

  // enumerate
  auto* en = app.add_subcommand("enumerate", "exhaustive enumeration");
  struct {
    std::string graph, cls = "ham", out;
    std::size_t cap = kDefaultEnumCap;
    bool list = false;
  } eo;
  en->add_option("--graph", eo.graph, "graph file")->required();
  en->add_option("--class", eo.cls, "ham | 2factor | almost");
  en->add_option("--cap", eo.cap, "enumeration cap");
  en->add_flag("--list", eo.list, "include every member");
  en->add_option("--out", eo.out, "JSON (default stdout)");
  en->callback([&] {
    command = "enumerate";
    out_path = eo.out;
    config = {{"graph", eo.graph}, {"class", eo.cls}, {"cap", eo.cap}, {"list", eo.list}};
    action = [&]() -> Json {
      const Graph g = read_graph_file(eo.graph);
      const auto all = enumerate(g, parse_enum_class(eo.cls), eo.cap);
      Json j = {{"count", all.size()}};
      if (eo.list) {
        j["members"] = Json::array();
        for (const EdgeList& e : all) j["members"].push_back(to_json(e));
      }
      return j;
    };
  });

  // stategraph
  auto* sgc = app.add_subcommand("stategraph", "k-switch state graph: components and chain algebra");
  struct {
    std::string graph, cls = "ham", out;
    int k = 2;
    bool exact_matrix = false, lazy = false;
    std::size_t cap = kDefaultEnumCap;
  } sgo;
  sgc->add_option("--graph", sgo.graph, "graph file")->required();
  sgc->add_option("--class", sgo.cls, "ham | 2factor");
  sgc->add_option("--k", sgo.k, "switch size bound");
  sgc->add_flag("--exact-matrix", sgo.exact_matrix, "check symmetry and stochasticity in exact rationals");
  sgc->add_flag("--lazy", sgo.lazy, "lazy chain for --exact-matrix");
  sgc->add_option("--cap", sgo.cap, "enumeration cap");
  sgc->add_option("--out", sgo.out, "JSON (default stdout)");
  sgc->callback([&] {
    command = "stategraph";
    out_path = sgo.out;
    config = {{"graph", sgo.graph}, {"class", sgo.cls}, {"k", sgo.k},
              {"exact_matrix", sgo.exact_matrix}, {"lazy", sgo.lazy}, {"cap", sgo.cap}};
    action = [&]() -> Json {
      const Graph g = read_graph_file(sgo.graph);
      ChainConfig cfg;
      cfg.k = sgo.k;
      cfg.target = parse_target_class(sgo.cls);
      cfg.lazy = sgo.lazy;
      cfg.validate();
      const StateGraph sg = build_state_graph(g, cfg.target, cfg.k, sgo.cap);
      const Irreducibility ir = check_irreducible(sg);
      std::size_t arcs = 0;
      for (const auto& a : sg.adj) arcs += a.size();
      Json reps = Json::array();
      for (int r : ir.representatives) reps.push_back(to_json(sg.states[static_cast<std::size_t>(r)]));
      const Theta th = theta(cfg, g);
      Json j = {{"states", sg.size()},
                {"edges", arcs / 2},
                {"connected", ir.connected},
                {"components", ir.components},
                {"component_representatives", reps},
                {"theta", to_json(th.value)},
                {"theta_switch_size", th.ell},
                {"theta_clamped", th.clamped}};
      if (sgo.exact_matrix) {
        const ChainAlgebra ca = check_chain_algebra(sg, g, cfg);
        j["matrix"] = {{"symmetric", ca.symmetric},
                       {"stochastic", ca.stochastic},
                       {"doubly_stochastic", ca.doubly_stochastic},
                       {"adjacency_matches", ca.adjacency_matches},
                       {"min_positive", to_json(ca.min_positive)}};
      }
      return j;
    };
  });

  // mix
  auto* mix = app.add_subcommand("mix", "mixing time: exact spectrum and TV, optional empirical TV");
  struct {
    std::string graph, cls = "ham", eps = "0.25", csv, out;
    int k = 2;
    bool lazy = false, empirical = false;
    long long trials = 10000, t_max = 100000;
    std::uint64_t seed = 1;
    std::size_t cap = kDefaultMatrixCap;
  } mx;
  mix->add_option("--graph", mx.graph, "graph file")->required();
  mix->add_option("--class", mx.cls, "ham | 2factor");
  mix->add_option("--k", mx.k, "switch size bound");
  mix->add_option("--eps", mx.eps, "comma separated epsilons");
  mix->add_flag("--lazy", mx.lazy, "lazy chain");
  mix->add_flag("--empirical", mx.empirical, "also estimate TV by simulation from state 0");
  mix->add_option("--trials", mx.trials, "empirical trials")->check(CLI::PositiveNumber);
  mix->add_option("--seed", mx.seed, "RNG seed for --empirical");
  mix->add_option("--cap", mx.cap, "state cap for the dense matrix");
  mix->add_option("--t-max", mx.t_max, "iteration limit");
  mix->add_option("--csv", mx.csv, "TV curves as CSV (start,t,tv)");
  mix->add_option("--out", mx.out, "JSON (default stdout)");
  mix->callback([&] {
    command = "mix";
    out_path = mx.out;
    config = {{"graph", mx.graph}, {"class", mx.cls}, {"k", mx.k}, {"eps", mx.eps}, {"lazy", mx.lazy},
              {"empirical", mx.empirical}, {"cap", mx.cap}, {"t_max", mx.t_max}};
    if (mx.empirical) config["trials"] = mx.trials, config["seed"] = mx.seed;
    action = [&]() -> Json {
      const Graph g = read_graph_file(mx.graph);
      ChainConfig cfg;
      cfg.k = mx.k;
      cfg.target = parse_target_class(mx.cls);
      cfg.lazy = mx.lazy;
      cfg.seed = mx.seed;
      cfg.validate();
      const auto eps = parse_doubles(mx.eps);
      const StateGraph sg = build_state_graph(g, cfg.target, cfg.k, std::max<std::size_t>(mx.cap, kDefaultEnumCap));
      const MixReport ex = mixing_exact(sg, g, cfg, eps, mx.cap, mx.t_max);
      Json j = {{"exact", to_json(ex)}};
      if (!mx.csv.empty()) write_tv_csv(mx.csv, ex);
      if (mx.empirical) {
        long long horizon = 0;
        for (long long t : ex.tau) horizon = std::max(horizon, t);
        std::vector<int> grid;
        for (long long t = 0; t <= std::max(horizon, 1LL); ++t) grid.push_back(static_cast<int>(t));
        const MixReport em = mixing_empirical(g, cfg, sg.states, {0}, mx.trials, grid);
        j["empirical"] = to_json(em);
        Json at_tau = Json::array();
        for (long long t : ex.tau) at_tau.push_back(t >= 0 ? Json(em.tv[0][static_cast<std::size_t>(t)]) : Json(nullptr));
        j["empirical"]["tv_at_tau"] = at_tau;
        if (!mx.csv.empty()) write_tv_csv(mx.csv + ".empirical.csv", em);
      }
      return j;
    };
  });

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "run a canned acceptance pipeline by claim id");
  struct {
    std::string id, out;
    std::uint64_t seed = ReproduceOptions{}.seed;
    bool quick = false, list = false;
  } ro;
  bool claim_failed = false;
  rep->add_option("id", ro.id, "claim id, or 'all'");
  rep->add_option("--seed", ro.seed, "base seed");
  rep->add_flag("--quick", ro.quick, "smaller instance counts");
  rep->add_flag("--list", ro.list, "list claim ids");
  rep->add_option("--out", ro.out, "JSON (default stdout)");
  rep->callback([&] {
    command = "reproduce";
    out_path = ro.out;
    config = {{"id", ro.id}, {"seed", ro.seed}, {"quick", ro.quick}};
    action = [&]() -> Json {
      if (ro.list || ro.id.empty()) {
        Json l = Json::array();
        for (const auto& e : reproduce_registry()) l.push_back({{"id", e.id}, {"summary", e.summary}});
        if (ro.id.empty() && !ro.list) throw CLI::RequiredError("id");
        return l;
      }
      ReproduceOptions opt;
      opt.seed = ro.seed;
      opt.quick = ro.quick;
      std::vector<std::string> ids;
      if (ro.id == "all")
        for (const auto& e : reproduce_registry()) ids.push_back(e.id);
      else
        ids.push_back(ro.id);
      Json reports = Json::array();
      for (const auto& id : ids) {
        const ReproduceReport r = reproduce(id, opt);
        std::cerr << (r.pass ? "PASS " : "FAIL ") << id << '\n';
        claim_failed = claim_failed || !r.pass;
        reports.push_back(r.details);
      }
      return ids.size() == 1 ? reports[0] : reports;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const Json result = action();
    if (command == "family") {
      if (fo.out.empty()) {
        write_graph(std::cout, family_graph);
      } else {
        write_graph_file(fo.out, family_graph);
      }
      const Json env = envelope(command, config, result);
      if (out_path == "<stderr>")
        std::cerr << env.dump(2) << '\n';
      else
        emit(env, out_path);
    } else if (command == "monotone-embed") {
      if (mo.out.empty())
        write_edges(std::cout, embed_n, embed_cycle);
      else
        write_edges_file(mo.out, embed_n, embed_cycle);
      if (!mo.trace.empty()) emit(envelope(command, config, result), mo.trace);
    } else {
      emit(envelope(command, config, result), out_path);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << " (" << e.count_so_far() << " found so far)\n";
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvalidSwitch& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ReconstructionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return claim_failed ? kClaimFailed : kOk;
}
