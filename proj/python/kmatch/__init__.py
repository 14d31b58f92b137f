"""Exact k-matching computations for r-uniform hypergraphs.

Hypergraphs are plain dicts ``{"n": int, "r": int, "edges": [[...], ...]}``
with 1-based vertex labels, the same shape the command-line tool reads and
writes. Counts come back as Python ints.
"""

import json

from . import _core
from ._core import FormatError, ResourceError

__all__ = [
    "FormatError",
    "ResourceError",
    "binomial",
    "g_count",
    "b_family_size",
    "frankl_family_size",
    "g_recurrence_check",
    "construct",
    "nu",
    "decide",
    "greedy",
    "is_k_matching",
    "shift",
    "is_stable",
    "stabilize",
    "verify_coupling",
    "disjointify",
    "extremal_number",
    "conjecture_value",
    "check_conjecture",
    "theorem3_threshold",
    "verify_theorem3_inequalities",
]


def _dump(hypergraph):
    return hypergraph if isinstance(hypergraph, str) else json.dumps(hypergraph)


def binomial(n, k):
    return int(_core.binomial(n, k))


def g_count(n, r, k, a):
    return int(_core.g_count(n, r, k, a))


def b_family_size(n, r, k, i):
    return int(_core.b_family_size(n, r, k, i))


def frankl_family_size(n, r, k, a, i):
    return int(_core.frankl_family_size(n, r, k, a, i))


def g_recurrence_check(n, r, k, a):
    return _core.g_recurrence_check(n, r, k, a)


def construct(kind, n, r, k=1, a=2, i=0, blocks=()):
    """kind is one of frankl, h0, complete, b, general (general needs blocks)."""
    return json.loads(_core.construct(kind, n, r, k, a, i, [list(b) for b in blocks]))


def nu(hypergraph, k, threads=0, budget=100_000_000):
    return json.loads(_core.nu(_dump(hypergraph), k, threads, budget))


def decide(hypergraph, k, size, threads=0, budget=100_000_000):
    """A k-matching with `size` edges, or None."""
    return json.loads(_core.decide(_dump(hypergraph), k, size, threads, budget))


def greedy(hypergraph, k):
    return json.loads(_core.greedy(_dump(hypergraph), k))


def is_k_matching(hypergraph, edges, k):
    return _core.is_k_matching(_dump(hypergraph), [list(e) for e in edges], k)


def shift(hypergraph, i, j, direction="up"):
    return json.loads(_core.shift(_dump(hypergraph), i, j, direction))


def is_stable(hypergraph, direction="up"):
    return _core.is_stable(_dump(hypergraph), direction)


def stabilize(hypergraph, direction="up"):
    return json.loads(_core.stabilize(_dump(hypergraph), direction))


def verify_coupling(n, r, k, i, blocks, randomized=False, seed=0):
    return json.loads(_core.verify_coupling(n, r, k, i, [list(b) for b in blocks], randomized, seed))


def disjointify(n, r, k, i, blocks, randomized=False, seed=0):
    return json.loads(_core.disjointify(n, r, k, i, [list(b) for b in blocks], randomized, seed))


def extremal_number(n, r, k, a, stable=False, universe_limit=64, threads=0, budget=100_000_000):
    return json.loads(_core.extremal_number(n, r, k, a, stable, universe_limit, threads, budget))


def conjecture_value(n, r, k, a, threads=0, budget=100_000_000):
    return json.loads(_core.conjecture_value(n, r, k, a, threads, budget))


def check_conjecture(n, r, k, a, stable=False, universe_limit=64, threads=0, budget=100_000_000):
    return json.loads(_core.check_conjecture(n, r, k, a, stable, universe_limit, threads, budget))


def theorem3_threshold(r, k, a):
    return int(_core.theorem3_threshold(r, k, a))


def verify_theorem3_inequalities(r, k, a, n, sweep_length=64):
    return json.loads(_core.verify_theorem3_inequalities(r, k, a, n, sweep_length))
