"""Switch Markov chains on Hamiltonian cycles and 2-factors of dense graphs."""

import json

from . import _hamswitch as _core
from ._hamswitch import (
    CapExceeded,
    Error,
    Graph,
    InvalidSwitch,
    InvariantViolation,
    ParseError,
    PreconditionError,
    ReconstructionError,
    __version__,
    enumerate,
    gadget,
    locked_example,
    parity_example,
    random_dense_graph,
    random_ham_cycle,
    random_two_factor,
    reproduce_ids,
    staircase,
    transition_probability,
)

__all__ = [
    "CapExceeded", "Error", "Graph", "InvalidSwitch", "InvariantViolation", "ParseError",
    "PreconditionError", "ReconstructionError", "__version__", "enumerate", "gadget",
    "js_exact", "locked_example", "mixing_exact", "monotone_embed", "parity_example",
    "random_dense_graph", "random_ham_cycle", "random_two_factor", "reproduce",
    "reproduce_ids", "run_chain", "staircase", "transform", "transition_probability",
]


def run_chain(graph, start, steps, k=2, cls="ham", lazy=False, seed=0):
    """Returns (final edges, trajectory dict)."""
    end, traj = _core.run_chain(graph, start, steps, k, cls, lazy, seed)
    return end, json.loads(traj)


def transform(graph, start, target, cls="ham", bipartite=False, relaxed=False):
    """Verified switch sequence from start to target, as a dict."""
    return json.loads(_core.transform(graph, start, target, cls, bipartite, relaxed))


def monotone_embed(graph, two_factor):
    """Returns (Hamiltonian cycle edges, record dict)."""
    cycle, rec = _core.monotone_embed(graph, two_factor)
    return cycle, json.loads(rec)


def js_exact(graph, cap=1_000_000):
    return json.loads(_core.js_exact(graph, cap))


def mixing_exact(graph, k=2, cls="ham", lazy=True, eps=(0.25,), cap=2000):
    return json.loads(_core.mixing_exact(graph, k, cls, lazy, list(eps), cap))


def reproduce(id, seed=None, quick=True):
    """Returns (passed, details dict)."""
    args = {"quick": quick}
    if seed is not None:
        args["seed"] = seed
    ok, details = _core.reproduce(id, **args)
    return ok, json.loads(details)
