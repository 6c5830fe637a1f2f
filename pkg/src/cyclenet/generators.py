"""Deterministic and seeded graph constructors.

Seeded constructors draw from ``numpy.random.default_rng(seed)`` (PCG64), so a
given seed reproduces the same graph bit for bit on a given numpy release.
"""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Graph, connected_components

__all__ = [
    "complete",
    "cycle",
    "ring_lattice",
    "cocktail_party",
    "petersen",
    "star",
    "path",
    "erdos_renyi_gnm",
    "ws_rewire",
    "random_regular",
    "GENERATORS",
]


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_index_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return Graph.from_index_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_index_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """Center ``0`` joined to ``leaves`` leaf nodes."""
    if leaves < 0:
        raise ValueError("leaves must be >= 0")
    return Graph.from_index_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def ring_lattice(n: int, half_width: int) -> Graph:
    """Node ``i`` joined to ``i +- 1 .. i +- half_width`` (mod n).

    Edges are emitted lattice distance first, then by node, which is the order
    :func:`ws_rewire` visits them in.
    """
    if half_width < 1 or 2 * half_width >= n:
        raise ValueError("need 1 <= half_width < n/2")
    edges = [(i, (i + j) % n) for j in range(1, half_width + 1) for i in range(n)]
    return Graph.from_index_edges(n, edges)


def cocktail_party(m: int) -> Graph:
    """K_{2 x m}: 2m nodes, every pair joined except ``(i, i + m)``.

    ``cocktail_party(k + 1)`` is the smallest clique complex with a single
    k-dimensional cavity (the boundary of a (k+1)-cross-polytope).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 * m
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if j - i != m]
    return Graph.from_index_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_index_edges(10, outer + spokes + inner)


def erdos_renyi_gnm(n: int, m: int, seed: int | None = None) -> Graph:
    """Uniform random graph with exactly ``m`` edges."""
    pairs = list(itertools.combinations(range(n), 2))
    if n < 1 or not 0 <= m <= len(pairs):
        raise ValueError(f"infeasible G(n, m) parameters: n={n}, m={m}")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(pairs), size=m, replace=False)
    return Graph.from_index_edges(n, (pairs[k] for k in sorted(chosen)))


def ws_rewire(base: Graph, p: float, seed: int | None = None) -> Graph:
    """Small-world rewiring of ``base``.

    Each edge ``(u, v)``, ``u < v``, is visited in stored order; with
    probability ``p`` the endpoint ``v`` is replaced by a uniformly random node, redrawing
    until the new edge is neither a self-loop nor already present.  A node
    that is already joined to every other node keeps its edge.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    n = base.n
    order = list(base.edges)
    adj = [set(base.neighbors(i)) for i in range(n)]
    current = list(order)
    for pos, (u, v) in enumerate(order):
        if rng.random() >= p:
            continue
        if len(adj[u]) >= n - 1:
            continue
        while True:
            w = int(rng.integers(n))
            if w != u and w not in adj[u]:
                break
        adj[u].discard(v)
        adj[v].discard(u)
        adj[u].add(w)
        adj[w].add(u)
        current[pos] = (min(u, w), max(u, w))
    return Graph(base.nodes, ((base.label(i), base.label(j)) for i, j in current))


def random_regular(
    n: int,
    degree: int,
    seed: int | None = None,
    *,
    triangle_free: bool = False,
    connected: bool = True,
    max_tries: int = 10_000,
) -> Graph:
    """Random ``degree``-regular graph by randomized greedy stub matching.

    Edges are added one at a time between nodes with free stubs, skipping
    pairs that would duplicate an edge (or close a triangle when
    ``triangle_free``); dead ends restart from scratch.
    """
    if n * degree % 2 or degree >= n or degree < 0:
        raise ValueError(f"no simple {degree}-regular graph on {n} nodes")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        free = [degree] * n
        adj = [set() for _ in range(n)]
        edges = []
        ok = True
        while sum(free):
            open_nodes = [i for i in range(n) if free[i]]
            u = open_nodes[int(rng.integers(len(open_nodes)))]
            options = [
                w for w in open_nodes
                if w != u and w not in adj[u] and not (triangle_free and adj[u] & adj[w])
            ]
            if not options:
                ok = False
                break
            w = options[int(rng.integers(len(options)))]
            adj[u].add(w)
            adj[w].add(u)
            free[u] -= 1
            free[w] -= 1
            edges.append((min(u, w), max(u, w)))
        if not ok:
            continue
        g = Graph.from_index_edges(n, edges)
        if connected and len(connected_components(g)) != 1:
            continue
        return g
    raise RuntimeError(f"no graph found in {max_tries} attempts")


GENERATORS = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "ring": ring_lattice,
    "cocktail": cocktail_party,
    "petersen": petersen,
    "gnm": erdos_renyi_gnm,
    "regular": random_regular,
}
