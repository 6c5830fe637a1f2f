"""Smallest basic cycles, cycle-number matrices and hypernetwork conversion."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .gf2 import BitMatrix
from .graph import UNBOUNDED, Graph, bfs_distances, node_girth

__all__ = [
    "CycleSet",
    "HyperNetwork",
    "canonical_cycle",
    "smallest_cycle_set",
    "incidence_matrix",
    "cycle_number_matrix",
    "cycle_ratio",
    "spreading_matrix",
    "to_hypernetwork",
]


def canonical_cycle(cycle) -> tuple:
    """Rotate the smallest element first, then orient toward the smaller neighbor."""
    seq = list(cycle)
    k = seq.index(min(seq))
    seq = seq[k:] + seq[:k]
    if len(seq) > 2 and seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


@dataclass(frozen=True, eq=False)
class CycleSet:
    """Deduplicated simple cycles of ``graph`` as node-index tuples in canonical form."""

    graph: Graph
    cycles: tuple[tuple[int, ...], ...]
    per_node: dict[str, list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        per_node: dict[str, list[int]] = {v: [] for v in self.graph.nodes}
        for ci, cyc in enumerate(self.cycles):
            for i in cyc:
                per_node[self.graph.label(i)].append(ci)
        object.__setattr__(self, "per_node", per_node)

    def labeled(self) -> list[tuple[str, ...]]:
        return [tuple(self.graph.label(i) for i in cyc) for cyc in self.cycles]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.labeled())


def _cycles_through(g: Graph, v: int, length: int, limit: int | None) -> set[tuple[int, ...]]:
    dist = bfs_distances(g, v)
    found: set[tuple[int, ...]] = set()
    path = [v]
    on_path = {v}

    def walk(u: int) -> None:
        depth = len(path)
        for w in g.neighbors(u):
            if w == v:
                if depth == length:
                    found.add(canonical_cycle(path))
                    if limit is not None and len(found) > limit:
                        raise RuntimeError(f"more than {limit} smallest cycles through node {g.label(v)!r}")
                continue
            # w would sit at position `depth`; it must still be able to get home
            if w in on_path or depth >= length or dist[w] > length - depth:
                continue
            path.append(w)
            on_path.add(w)
            walk(w)
            path.pop()
            on_path.discard(w)

    walk(v)
    return found


def smallest_cycle_set(g: Graph, max_cycles_per_node: int | None = 100_000) -> CycleSet:
    """Union over nodes of all shortest cycles through that node.

    For each node ``v`` with finite girth ``g(v)`` a depth-limited search
    collects every simple cycle of length ``g(v)`` through ``v``; BFS
    distances prune branches that cannot return in time.
    """
    found: set[tuple[int, ...]] = set()
    for v in range(g.n):
        girth = node_girth(g, v)
        if girth is UNBOUNDED:
            continue
        found |= _cycles_through(g, v, girth, max_cycles_per_node)
    return CycleSet(g, tuple(sorted(found, key=lambda c: (len(c), c))))


def incidence_matrix(cs: CycleSet) -> BitMatrix:
    """Cycles x nodes indicator matrix ``H``."""
    rows = []
    for cyc in cs.cycles:
        bits = 0
        for i in cyc:
            bits |= 1 << i
        rows.append(bits)
    return BitMatrix(len(rows), cs.graph.n, tuple(rows))


def cycle_number_matrix(cs: CycleSet, n: int | None = None) -> np.ndarray:
    """``C_ij`` = number of basic cycles containing both ``i`` and ``j``.

    The diagonal holds each node's cycle number.  Counted pair by pair from
    the cycle list; :func:`to_hypernetwork` checks it against ``H^T H``.
    """
    n = cs.graph.n if n is None else n
    if n != cs.graph.n:
        raise ValueError(f"node count {n} does not match the cycle set's graph ({cs.graph.n})")
    c = np.zeros((n, n), dtype=np.int64)
    for cyc in cs.cycles:
        idx = np.asarray(cyc)
        c[np.ix_(idx, idx)] += 1
    return c


def cycle_ratio(cs: CycleSet, g: Graph | None = None) -> dict[str, Fraction]:
    """``r_i = sum_j C_ij / C_jj`` over nodes ``j`` sharing a cycle with ``i`` (``j = i`` included)."""
    g = cs.graph if g is None else g
    c = cycle_number_matrix(cs, g.n)
    out = {}
    for i in range(g.n):
        total = Fraction(0)
        for j in np.flatnonzero(c[i]):
            total += Fraction(int(c[i, j]), int(c[j, j]))
        out[g.label(i)] = total
    return out


def spreading_matrix(g: Graph, cs: CycleSet | None = None) -> BitMatrix:
    """Contacts: adjacent pairs plus every pair sharing a basic cycle."""
    cs = smallest_cycle_set(g) if cs is None else cs
    rows = [0] * g.n
    for i, j in g.edges:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    for cyc in cs.cycles:
        bits = 0
        for i in cyc:
            bits |= 1 << i
        for i in cyc:
            rows[i] |= bits & ~(1 << i)
    return BitMatrix(g.n, g.n, tuple(rows))


@dataclass(frozen=True, eq=False)
class HyperNetwork:
    nodes: tuple[str, ...]
    hyperedges: tuple[tuple[str, ...], ...]
    incidence: BitMatrix

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes), "hyperedges": [list(e) for e in self.hyperedges]}

    def incidence_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["hyperedge", *self.nodes])
        for k, row in enumerate(self.incidence.to_dense()):
            writer.writerow([k, *row.tolist()])
        return buf.getvalue()


def to_hypernetwork(g: Graph, cs: CycleSet | None = None) -> HyperNetwork:
    """Promote every smallest basic cycle to a hyperedge."""
    cs = smallest_cycle_set(g) if cs is None else cs
    h = incidence_matrix(cs)
    dense = h.to_dense().astype(np.int64)
    if not np.array_equal(dense.T @ dense, cycle_number_matrix(cs, g.n)):
        raise AssertionError("H^T H disagrees with the cycle number matrix")
    return HyperNetwork(g.nodes, tuple(cs.labeled()), h)
