#include <doctest.h>

#include "hamswitch/errors.hpp"
#include "hamswitch/families.hpp"
#include "hamswitch/reconfigure.hpp"
#include "hamswitch/rng.hpp"
#include "oracles.hpp"

using namespace hamswitch;

namespace {

Graph dense(int n, std::uint64_t seed) { return random_dense_graph(n, (n + 1) / 2 + 7, seed, false); }

void check_trace(const TransformTrace& tr, const Graph& g, bool ham, int max_edges) {
  const oracle::Adj a(g);
  oracle::EdgeSet cur = oracle::to_set(tr.initial);
  for (const auto& s : tr.steps) {
    const oracle::EdgeSet next = oracle::to_set(s.state);
    CHECK(oracle::sym_diff(cur, next) <= max_edges);
    CHECK(oracle::sym_diff(cur, next) == static_cast<int>(s.sw.edges.size()));
    CHECK((ham ? oracle::is_ham_cycle(a, next) : oracle::is_two_factor(a, next)));
    cur = next;
  }
  CHECK(cur == oracle::to_set(tr.final_state));
}

}  // namespace

TEST_CASE("short alternating circuits are found") {
  const Graph g = Graph::complete(6);
  const HamCycle a = HamCycle::from_order(g, {0, 1, 2, 3, 4, 5});
  const HamCycle b = HamCycle::from_order(g, {0, 2, 1, 3, 4, 5});  // differs by one 2-switch
  const auto c = find_short_circuit(6, a.edges(), b.edges());
  REQUIRE(c.has_value());
  CHECK(c->size() == 4);
  CHECK_FALSE(find_walk6(a, b).has_value());
}

TEST_CASE("transform_ham on random dense graphs") {
  for (int i = 0; i < 6; ++i) {
    const Graph g = dense(28 + 2 * i, 500 + i);
    const HamCycle h1 = random_ham_cycle(g, 1000 + i), h2 = random_ham_cycle(g, 2000 + i);
    const TransformTrace tr = transform_ham(h1, h2, g);
    check_trace(tr, g, true, 20);
    CHECK(tr.final_state == h2.edges());
    CHECK(static_cast<int>(tr.steps.size()) <= static_cast<int>(symmetric_difference(h1.edges(), h2.edges()).size()));
    CHECK_NOTHROW(verify_trace(tr, g, TargetClass::HamCycles, 10));
  }
}

TEST_CASE("macro_step lowers the distance or closes a short circuit") {
  const Graph g = dense(32, 7);
  const HamCycle h1 = random_ham_cycle(g, 8), h2 = random_ham_cycle(g, 9);
  const MacroResult m = macro_step(h1, h2, g);
  CHECK(m.sw.size() <= 4);
  CHECK(symmetric_difference(m.t, h2.edges()).size() < symmetric_difference(h1.edges(), h2.edges()).size());
  CHECK(classify(g, m.t) != SubgraphClass::Not2Factor);
}

TEST_CASE("reconnect uses at most t-1 switches of size 3") {
  const Graph g = dense(30, 17);
  for (int s = 0; s < 20; ++s) {
    const TwoFactor t = random_two_factor(g, 300 + s, 30);
    const HamCycle h = random_ham_cycle(g, 400 + s);
    const TransformTrace tr = reconnect(t, h, g);
    check_trace(tr, g, false, 6);
    CHECK(static_cast<int>(tr.steps.size()) <= t.component_count() - 1);
    CHECK(classify(g, tr.final_state) == SubgraphClass::HamCycle);
    CHECK(symmetric_difference(tr.final_state, h.edges()).size() <= symmetric_difference(t.edges(), h.edges()).size());
  }
}

TEST_CASE("transform_2factor uses switches of size at most 4") {
  const Graph g = dense(34, 23);
  for (int s = 0; s < 10; ++s) {
    const TwoFactor f1 = random_two_factor(g, 600 + s, 40), f2 = random_two_factor(g, 700 + s, 40);
    const TransformTrace tr = transform_2factor(f1, f2, g);
    check_trace(tr, g, false, 8);
    CHECK(tr.final_state == f2.edges());
  }
}

TEST_CASE("bipartite mode") {
  const Graph g = random_dense_graph(16, 16 / 2 + 7, 5, true);
  const HamCycle h1 = random_ham_cycle(g, 1), h2 = random_ham_cycle(g, 2);
  ReconfigureOptions opt;
  opt.bipartite = true;
  const TransformTrace tr = transform_ham(h1, h2, g, opt);
  check_trace(tr, g, true, 20);
}

TEST_CASE("preconditions are enforced") {
  const Graph g = Graph::complete(10);  // min degree 9 < 10/2 + 7
  const HamCycle h1 = HamCycle::from_order(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  const HamCycle h2 = HamCycle::from_order(g, {0, 2, 1, 3, 5, 4, 6, 8, 7, 9});
  CHECK_THROWS_AS(transform_ham(h1, h2, g), PreconditionError);
  ReconfigureOptions relaxed;
  relaxed.enforce_degree = false;
  const TransformTrace tr = transform_ham(h1, h2, g, relaxed);
  CHECK(tr.final_state == h2.edges());
  CHECK_THROWS_AS(verify_trace(TransformTrace{h1.edges(), {TraceStep{Switch{{Edge(0, 1), Edge(0, 2)}}, h1.edges()}},
                                              h1.edges()},
                               g, TargetClass::HamCycles, 10),
                  Error);
}
