"""Node importance indexes, rankings, Kendall tau and attack curves."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .cycles import CycleSet, cycle_number_matrix, cycle_ratio, smallest_cycle_set
from .graph import Graph, connected_components

__all__ = [
    "INDEX_NAMES",
    "Ranking",
    "h_index",
    "coreness",
    "node_indexes",
    "rank_nodes",
    "kendall_tau",
    "attack_curve",
]

INDEX_NAMES = ("degree", "h_index", "coreness", "cycle_number", "cycle_ratio")


@dataclass(frozen=True)
class Ranking:
    index_name: str
    scores: dict[str, float]
    order: tuple[str, ...]
    seed: int | None

    def position(self, label: str) -> int:
        return self.order.index(label)


def _h_index_idx(g: Graph, i: int) -> int:
    degs = sorted((g.degree(j) for j in g.neighbors(i)), reverse=True)
    h = 0
    for rank, d in enumerate(degs, start=1):
        if d >= rank:
            h = rank
        else:
            break
    return h


def h_index(g: Graph, v) -> int:
    """Largest ``h`` such that ``v`` has at least ``h`` neighbors of degree ``>= h``."""
    return _h_index_idx(g, g.index(v))


def coreness(g: Graph) -> dict[str, int]:
    """k-core number of every node by minimum-degree peeling (bucket queue)."""
    n = g.n
    deg = [g.degree(i) for i in range(n)]
    max_deg = max(deg, default=0)
    buckets: list[set[int]] = [set() for _ in range(max_deg + 1)]
    for i, d in enumerate(deg):
        buckets[d].add(i)
    core = [0] * n
    removed = [False] * n
    k = 0
    for _ in range(n):
        d = 0
        while not buckets[d]:
            d += 1
        k = max(k, d)
        i = buckets[d].pop()
        removed[i] = True
        core[i] = k
        for j in g.neighbors(i):
            if not removed[j] and deg[j] > d:
                buckets[deg[j]].discard(j)
                deg[j] -= 1
                buckets[deg[j]].add(j)
    return {g.label(i): core[i] for i in range(n)}


def _scores(g: Graph, index: str, cs: CycleSet | None) -> dict[str, float]:
    if index == "degree":
        return {v: float(g.degree(i)) for i, v in enumerate(g.nodes)}
    if index == "h_index":
        return {v: float(_h_index_idx(g, i)) for i, v in enumerate(g.nodes)}
    if index == "coreness":
        return {v: float(k) for v, k in coreness(g).items()}
    if index in ("cycle_number", "cycle_ratio"):
        cs = smallest_cycle_set(g) if cs is None else cs
        if index == "cycle_number":
            cn = cycle_number_matrix(cs).diagonal()
            return {v: float(cn[i]) for i, v in enumerate(g.nodes)}
        return {v: float(r) for v, r in cycle_ratio(cs).items()}
    raise ValueError(f"unknown index {index!r}; expected one of {INDEX_NAMES}")


def node_indexes(g: Graph, cs: CycleSet | None = None) -> dict[str, dict[str, float]]:
    """All five index values, keyed by index name then node label."""
    cs = smallest_cycle_set(g) if cs is None else cs
    return {name: _scores(g, name, cs) for name in INDEX_NAMES}


def rank_nodes(g: Graph, index: str, seed: int | None = 0, cs: CycleSet | None = None) -> Ranking:
    """Nodes by descending score; ties ordered by a seeded random permutation."""
    scores = _scores(g, index, cs)
    tiebreak = np.random.default_rng(seed).permutation(g.n)
    order = sorted(range(g.n), key=lambda i: (-scores[g.label(i)], tiebreak[i]))
    return Ranking(index, scores, tuple(g.label(i) for i in order), seed)


def _as_scores(x) -> tuple[list | None, np.ndarray]:
    if isinstance(x, Ranking):
        x = x.scores
    if isinstance(x, Mapping):
        keys = list(x)
        return keys, np.array([float(x[k]) for k in keys])
    return None, np.asarray(list(x), dtype=float)


def kendall_tau(a: Ranking | Mapping | Sequence[float], b: Ranking | Mapping | Sequence[float]) -> float:
    """Tie-corrected Kendall tau-b between two score assignments.

    Mappings and rankings are aligned by node label; plain sequences by
    position.  Returns ``nan`` when either side is entirely tied.
    """
    keys_a, xa = _as_scores(a)
    keys_b, xb = _as_scores(b)
    if (keys_a is None) != (keys_b is None):
        raise ValueError("cannot compare a labeled score map with a bare sequence")
    if keys_a is not None:
        if set(keys_a) != set(keys_b):
            raise ValueError("score maps cover different node sets")
        pos = {k: i for i, k in enumerate(keys_b)}
        xb = xb[[pos[k] for k in keys_a]]
    if len(xa) != len(xb):
        raise ValueError(f"length mismatch: {len(xa)} != {len(xb)}")
    n = len(xa)
    iu = np.triu_indices(n, k=1)
    sa = np.sign(np.subtract.outer(xa, xa)[iu])
    sb = np.sign(np.subtract.outer(xb, xb)[iu])
    s = int(np.sum(sa * sb))
    denom = math.sqrt(float(np.count_nonzero(sa)) * float(np.count_nonzero(sb)))
    if denom == 0:
        return float("nan")
    return s / denom


def attack_curve(g: Graph, ranking: Ranking, removal_fractions: Sequence[float]) -> list[tuple[float, float]]:
    """Giant-component fraction after removing the top ``ceil(f n)`` ranked nodes.

    The fraction is taken over the original node count, so curves for
    different indexes share one scale.
    """
    fractions = [float(f) for f in removal_fractions]
    if any(not 0.0 <= f <= 1.0 for f in fractions):
        raise ValueError("removal fractions must lie in [0, 1]")
    if any(b < a for a, b in zip(fractions, fractions[1:])):
        raise ValueError("removal fractions must be nondecreasing")
    n = g.n
    out = []
    for f in fractions:
        # tolerance absorbs float error in f*n for fractions like 1/6
        k = min(n, math.ceil(f * n - 1e-9))
        removed = [g.index(v) for v in ranking.order[:k]]
        survivors = g.subgraph_without(removed)
        giant = max((len(b) for b in connected_components(survivors)), default=0)
        out.append((f, giant / n if n else 0.0))
    return out
