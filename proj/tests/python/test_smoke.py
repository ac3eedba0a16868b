import pytest

hs = pytest.importorskip("hamswitch", reason="python module not installed (pip install .)")


def test_graph_and_enumerate():
    g = hs.Graph.complete(5)
    assert (g.n, g.m) == (5, 10)
    assert len(hs.enumerate(g, "ham")) == 12
    assert hs.Graph.parse(g.dumps()).edges == g.edges


def test_chain_is_seeded_and_stays_in_class():
    g = hs.Graph.complete(6)
    start = hs.enumerate(g)[0]
    a, ta = hs.run_chain(g, start, 200, k=2, seed=5)
    b, tb = hs.run_chain(g, start, 200, k=2, seed=5)
    assert a == b and ta == tb
    assert g.classify(a) == "hamiltonian-cycle"


def test_transform_and_families():
    g = hs.random_dense_graph(30, 22, 1)
    h1, h2 = hs.random_ham_cycle(g, 2), hs.random_ham_cycle(g, 3)
    trace = hs.transform(g, h1, h2)
    assert trace["steps"]
    g3, p1, p2 = hs.parity_example(3)
    assert g3.n == 9 and p1 != p2
    assert len(hs.enumerate(hs.staircase(6))) == 16


def test_errors_map_to_exceptions():
    with pytest.raises(hs.PreconditionError):
        hs.gadget(4)
    with pytest.raises(hs.CapExceeded):
        hs.enumerate(hs.Graph.complete(9), "ham", 10)
    with pytest.raises(hs.ParseError):
        hs.Graph.parse("3 1\n0 x\n")


def test_js_and_reproduce():
    rep = hs.js_exact(hs.Graph.complete(5))
    assert rep["symmetric"]
    ok, details = hs.reproduce("staircase-count")
    assert ok and details["id"] == "staircase-count"
    assert len(hs.reproduce_ids()) == 10
