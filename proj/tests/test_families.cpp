#include <doctest.h>

#include "hamswitch/analysis.hpp"
#include "hamswitch/errors.hpp"
#include "hamswitch/families.hpp"
#include "oracles.hpp"

using namespace hamswitch;

TEST_CASE("parity example layout") {
  const ParityExample ex = build_parity_example(3);
  const Graph& g = ex.cg.graph;
  CHECK(g.n() == 9);
  CHECK(3 * min_degree(g) == 2 * g.n() - 3);
  CHECK(blue_parity(ex.cg, ex.h1.edges()) == Parity::Even);
  CHECK(blue_parity(ex.cg, ex.h2.edges()) == Parity::Odd);
  CHECK(oracle::count_ham_cycles(oracle::Adj(g)) == 432);
  CHECK_THROWS_AS(build_parity_example(4), PreconditionError);
}

TEST_CASE("gadget X has exactly two Hamiltonian paths") {
  for (int l : {3, 5}) {
    const GadgetX x = build_gadget_x(l);
    CHECK(x.graph.n() == 3 * l + 1);
    const auto paths = oracle::ham_paths(oracle::Adj(x.graph));
    REQUIRE(paths.size() == 2);
    const auto lib = x.hamiltonian_paths();
    CHECK(oracle::to_set(lib[0]) != oracle::to_set(lib[1]));
    for (const auto& p : lib) CHECK(std::find(paths.begin(), paths.end(), oracle::to_set(p)) != paths.end());
  }
  CHECK_THROWS_AS(build_gadget_x(4), PreconditionError);
}

TEST_CASE("locked example") {
  const int n = locked_default_n(4);
  CHECK(n == 17);
  const LockedExample ex = build_locked_example(4, n);
  CHECK(ex.graph.n() == n);
  CHECK(oracle::count_ham_cycles(oracle::Adj(ex.graph)) == 2);
  CHECK_THROWS_AS(build_locked_example(5, 30), PreconditionError);
  CHECK_THROWS_AS(build_locked_example(4, 10), PreconditionError);
}

TEST_CASE("staircase counts") {
  for (int n : {4, 6, 8}) CHECK(oracle::count_ham_cycles(oracle::Adj(build_staircase(n).graph())) == (1u << (n - 2)));
  CHECK_THROWS_AS(build_staircase(5), PreconditionError);
}

TEST_CASE("random generators respect their contracts") {
  for (int i = 0; i < 10; ++i) {
    const int n = 20 + i;
    const Graph g = random_dense_graph(n, n / 2 + 3, 40 + i, false);
    CHECK(min_degree(g) >= n / 2 + 3);
    const Graph b = random_dense_graph(n, n / 2 + 2, 40 + i, true);
    CHECK(b.bipartite());
    CHECK(min_degree(b) >= n / 2 + 2);
    const HamCycle h = random_ham_cycle(g, i);
    CHECK(oracle::is_ham_cycle(oracle::Adj(g), oracle::to_set(h.edges())));
    const TwoFactor f = random_two_factor(g, i, 25);
    CHECK(oracle::is_two_factor(oracle::Adj(g), oracle::to_set(f.edges())));
  }
  CHECK(random_dense_graph(24, 15, 3, false).edges() == random_dense_graph(24, 15, 3, false).edges());
  for (int n = 2; n <= 9; ++n) {
    const MonotoneGraph mg = random_dense_monotone(n, 7 * n);
    for (Vertex v = 0; v < 2 * n; ++v) CHECK(2 * mg.graph().degree(v) >= n);
  }
}
