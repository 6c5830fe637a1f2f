"""Undirected simple graphs with string labels, plus per-node structure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

__all__ = [
    "Graph",
    "GraphFormatError",
    "UNBOUNDED",
    "NodeProfile",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "connected_components",
    "spanning_forest",
    "bfs_distances",
    "node_girth",
    "node_profile",
    "is_totally_homogeneous",
    "laplacian",
]


class GraphFormatError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class _Unbounded:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"

    def __reduce__(self):
        return (_Unbounded, ())


#: Marks a girth or path-sum that does not exist (acyclic node, disconnected graph).
UNBOUNDED = _Unbounded()


class Graph:
    """Immutable undirected simple graph.

    Nodes keep their first-appearance order; that order is the canonical
    index order used by every matrix built from the graph.  Edges are stored
    as index pairs ``(i, j)`` with ``i < j`` in insertion order.
    """

    __slots__ = ("_nodes", "_index", "_edges", "_adj", "_edge_set")

    def __init__(self, nodes: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        node_list: list[str] = []
        index: dict[str, int] = {}

        def register(label) -> int:
            label = str(label)
            if label not in index:
                index[label] = len(node_list)
                node_list.append(label)
            return index[label]

        for v in nodes:
            register(v)
        edge_list: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            i, j = register(u), register(v)
            if i == j:
                raise ValueError(f"self-loop on node {u!r}")
            key = (i, j) if i < j else (j, i)
            if key not in seen:
                seen.add(key)
                edge_list.append(key)

        adj: list[list[int]] = [[] for _ in node_list]
        for i, j in edge_list:
            adj[i].append(j)
            adj[j].append(i)
        self._nodes = tuple(node_list)
        self._index = index
        self._edges = tuple(edge_list)
        self._edge_set = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def from_index_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        labels = [str(i) for i in range(n)] if labels is None else [str(x) for x in labels]
        return cls(labels, ((labels[i], labels[j]) for i, j in edges))

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._nodes)

    @property
    def m(self) -> int:
        return len(self._edges)

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown node {label!r}") from None

    def label(self, i: int) -> str:
        return self._nodes[i]

    def labeled_edges(self) -> list[tuple[str, str]]:
        return [(self._nodes[i], self._nodes[j]) for i, j in self._edges]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._adj[i]

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self._adj], dtype=int)

    def has_edge(self, i: int, j: int) -> bool:
        return ((i, j) if i < j else (j, i)) in self._edge_set

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self._edges:
            a[i, j] = a[j, i] = 1
        return a

    def subgraph_without(self, removed: Iterable[int]) -> "Graph":
        gone = set(removed)
        keep = [i for i in range(self.n) if i not in gone]
        return Graph(
            (self._nodes[i] for i in keep),
            ((self._nodes[i], self._nodes[j]) for i, j in self._edges if i not in gone and j not in gone),
        )

    def relabel(self, order: Iterable[int]) -> "Graph":
        """Same graph with nodes re-registered in the given index order."""
        order = list(order)
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of node indices")
        return Graph((self._nodes[i] for i in order), self.labeled_edges())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nodes == other._nodes and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self._nodes, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(lines: str | Iterable[str]) -> Graph:
    """Read ``u v`` lines; blank lines and ``#`` comments are skipped."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 labels, got {len(tokens)}", lineno)
        u, v = tokens
        if u == v:
            raise GraphFormatError(f"self-loop on {u!r}", lineno)
        edges.append((u, v))
    return Graph(edges=edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph, fh: TextIO | None = None) -> str:
    text = "".join(f"{u} {v}\n" for u, v in g.labeled_edges())
    if fh is not None:
        fh.write(text)
    return text


def connected_components(g: Graph) -> list[list[str]]:
    seen = [False] * g.n
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append([g.label(i) for i in sorted(block)])
    return blocks


def _spanning_forest_idx(g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]], list[int]]:
    parent = [-1] * g.n
    seen = [False] * g.n
    tree = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    tree.append((min(u, w), max(u, w)))
                    queue.append(w)
    in_tree = set(tree)
    chords = sorted(e for e in g.edges if e not in in_tree)
    return tree, chords, parent


def spanning_forest(g: Graph) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
    """BFS spanning forest rooted at the lowest-indexed node of each component.

    Returns ``(tree_edges, chords)`` as label pairs in canonical node order.
    """
    tree, chords, _ = _spanning_forest_idx(g)
    lab = g.label
    return [(lab(i), lab(j)) for i, j in tree], [(lab(i), lab(j)) for i, j in chords]


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 for unreachable nodes."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def node_girth(g: Graph, v: int):
    """Length of the shortest simple cycle through node index ``v``, or UNBOUNDED.

    BFS from ``v`` labels every reached node with the neighbor of ``v`` its
    shortest path leaves through.  An edge joining two different branches
    closes a cycle through ``v`` of length ``d(x) + d(y) + 1``; the shortest
    cycle through ``v`` always contains such an edge.
    """
    dist = [-1] * g.n
    branch = [-1] * g.n
    dist[v] = 0
    queue = deque()
    for w in g.neighbors(v):
        dist[w] = 1
        branch[w] = w
        queue.append(w)
    best = None
    while queue:
        u = queue.popleft()
        # edges still unchecked close cycles of length >= 2*dist[u]
        if best is not None and 2 * dist[u] >= best:
            break
        for w in g.neighbors(u):
            if w == v:
                continue
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                branch[w] = branch[u]
                queue.append(w)
            elif branch[w] != branch[u]:
                length = dist[u] + dist[w] + 1
                if best is None or length < best:
                    best = length
    return UNBOUNDED if best is None else best


@dataclass(frozen=True)
class NodeProfile:
    degree: int
    girth: int | _Unbounded
    path_sum: int | _Unbounded

    def as_tuple(self) -> tuple:
        return (self.degree, self.girth, self.path_sum)


def _profile(g: Graph, i: int) -> NodeProfile:
    dist = bfs_distances(g, i)
    path_sum = UNBOUNDED if min(dist, default=0) < 0 else sum(dist)
    return NodeProfile(g.degree(i), node_girth(g, i), path_sum)


def node_profile(g: Graph, v) -> NodeProfile:
    """Degree, girth and path-sum of node ``v`` (a label)."""
    return _profile(g, g.index(v))


def is_totally_homogeneous(g: Graph) -> tuple[bool, NodeProfile | None]:
    """True iff every node shares one (degree, girth, path-sum) profile."""
    if g.n == 0:
        return False, None
    first = _profile(g, 0)
    for i in range(1, g.n):
        if _profile(g, i) != first:
            return False, None
    return True, first


def laplacian(g: Graph) -> np.ndarray:
    """``D - A`` as a float matrix in canonical node order."""
    a = g.adjacency_matrix().astype(float)
    return np.diag(a.sum(axis=1)) - a
