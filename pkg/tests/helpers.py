"""Shared test utilities: ad-hoc graphs and reference implementations."""
from __future__ import annotations

import random

from multlat import ZdGraph
from multlat.search import chain_lattice


def make_graph(n: int, edges: list[tuple[int, int]]) -> ZdGraph:
    """A bare ZdGraph on vertices 0..n-1 for solver tests."""
    lat = chain_lattice(max(n, 1))
    adj = [0] * n
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return ZdGraph(lat, tuple(range(n)), tuple(adj), ("test", None))


def random_graph(rng: random.Random, n: int, p: float) -> ZdGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return make_graph(n, edges)


def cycle_graph(n: int) -> ZdGraph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> ZdGraph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def assert_is_n5(lat, witness: tuple[int, int, int, int, int]) -> None:
    """The witness must be a genuine pentagon sublattice."""
    b, u, v, y, t = witness
    assert len({b, u, v, y, t}) == 5
    assert lat.leq(b, u) and lat.leq(u, v) and lat.leq(v, t)
    assert u != v
    assert not lat.leq(y, u) and not lat.leq(u, y)
    assert not lat.leq(y, v) and not lat.leq(v, y)
    assert lat.meet_of(y, u) == b and lat.meet_of(y, v) == b
    assert lat.join_of(y, u) == t and lat.join_of(y, v) == t
