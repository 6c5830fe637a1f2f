"""Betti numbers, cycle bases and cavity representatives over GF(2)."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .complex import CapExceededError, CliqueComplex, boundary_matrix, f_vector
from .gf2 import BitMatrix, BitVector, EchelonBasis, null_space_basis, rank
from .graph import Graph, _spanning_forest_idx, connected_components

__all__ = [
    "ChainVector",
    "HomologyReport",
    "betti_numbers",
    "cycle_space_dimension",
    "fundamental_cycle_basis",
    "cycle_to_chain",
    "cavity_representatives",
    "is_homologous",
]


@dataclass(frozen=True, eq=False)
class ChainVector:
    """A k-chain: a GF(2) combination of the k-cliques of ``complex``."""

    dim: int
    complex: CliqueComplex
    support: BitVector

    def __post_init__(self):
        if self.support.length != self.complex.m(self.dim):
            raise ValueError("support length does not match the number of k-cliques")

    def simplices(self) -> list[tuple[int, ...]]:
        level = self.complex.cliques[self.dim]
        return [level[i] for i in self.support.support()]

    def labeled(self) -> list[tuple[str, ...]]:
        return [self.complex.labels(s) for s in self.simplices()]

    def nodes(self) -> set[str]:
        return {v for s in self.labeled() for v in s}

    def __add__(self, other: "ChainVector") -> "ChainVector":
        _check_compatible(self, other)
        return ChainVector(self.dim, self.complex, self.support ^ other.support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainVector):
            return NotImplemented
        return self.complex is other.complex and self.dim == other.dim and self.support == other.support

    def __hash__(self) -> int:
        return hash((id(self.complex), self.dim, self.support))

    def __repr__(self) -> str:
        return f"ChainVector(dim={self.dim}, {self.labeled()})"


@dataclass(frozen=True)
class HomologyReport:
    betti: list[int]
    ranks: list[int]
    f_vector: list[int]
    euler_characteristic: int
    euler_poincare_ok: bool
    truncated: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def _check_compatible(a: ChainVector, b: ChainVector) -> None:
    if a.complex is not b.complex:
        raise ValueError("chains belong to different complexes")
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")


def _boundary(c: CliqueComplex, k: int) -> BitMatrix:
    """B_k, with the edge cases B_0 (to the zero space) and B_{max_dim+1}."""
    if k == 0:
        return BitMatrix.zeros(0, c.m(0))
    if k == c.max_dim + 1:
        if c.truncated:
            raise CapExceededError(f"boundary of dimension {k} is beyond the enumerated cliques")
        return BitMatrix.zeros(c.m(c.max_dim), 0)
    return boundary_matrix(c, k)


def betti_numbers(c: CliqueComplex) -> HomologyReport:
    """``beta_k = m_k - r_k - r_{k+1}`` with ``r_k = rank(B_k)``.

    A truncated complex in non-strict mode reports only the dimensions whose
    ranks are known (``k < max_dim``) and marks the report ``truncated``.
    """
    c.check_cap()
    m = f_vector(c)
    top = c.max_dim
    ranks = [rank(boundary_matrix(c, k)) for k in range(1, top + 1)]
    r = [0] + ranks + [0]
    known = top if c.truncated else top + 1
    betti = [m[k] - r[k] - r[k + 1] for k in range(known)]
    chi = sum((-1) ** k * x for k, x in enumerate(m))
    if c.truncated:
        ok = False
    else:
        ok = chi == sum((-1) ** k * b for k, b in enumerate(betti))
    if betti and c.graph.n:
        assert betti[0] == len(connected_components(c.graph)), "beta_0 disagrees with component count"
    return HomologyReport(betti, ranks, m, chi, ok, c.truncated)


def cycle_space_dimension(g: Graph) -> int:
    """``|E| - |V| + #components``: the number of independent cycles."""
    return g.m - g.n + len(connected_components(g))


def fundamental_cycle_basis(g: Graph) -> list[tuple[str, ...]]:
    """One cycle per chord of the BFS spanning forest.

    Each cycle is the chord ``(u, w)`` plus the tree path between ``u`` and
    ``w``, listed as a node sequence starting at ``u`` and ending at ``w``.
    """
    _, chords, parent = _spanning_forest_idx(g)
    depth = [0] * g.n
    for v in range(g.n):
        x = v
        while parent[x] >= 0:
            x = parent[x]
            depth[v] += 1
    cycles = []
    for u, w in chords:
        left, right = [u], [w]
        a, b = u, w
        while depth[a] > depth[b]:
            a = parent[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            right.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            left.append(a)
            right.append(b)
        right.pop()
        nodes = left + right[::-1]
        cycles.append(tuple(g.label(i) for i in nodes))
    return cycles


def cycle_to_chain(c: CliqueComplex, cycle) -> ChainVector:
    """Edge chain of a closed node sequence (labels)."""
    idx = [c.graph.index(v) for v in cycle]
    edges = c.index[1]
    support = []
    for a, b in zip(idx, idx[1:] + idx[:1]):
        key = (a, b) if a < b else (b, a)
        if key not in edges:
            raise ValueError(f"({c.graph.label(a)}, {c.graph.label(b)}) is not an edge")
        support.append(edges[key])
    return ChainVector(1, c, BitVector.from_support(c.m(1), support))


def _boundary_space(c: CliqueComplex, k: int) -> EchelonBasis:
    b_next = _boundary(c, k + 1)
    return EchelonBasis(b_next.n_rows, b_next.columns())


def cavity_representatives(c: CliqueComplex, k: int) -> list[ChainVector]:
    """Canonical representatives of a basis of the k-th homology.

    Null-space vectors of B_k are reduced modulo the image of B_{k+1}; zero
    reductions are dropped and a reduced vector is kept only if it enlarges
    the span of those already kept.  Exactly ``beta_k`` chains come back.
    """
    if not 0 <= k <= c.max_dim:
        raise ValueError(f"k must lie in [0, {c.max_dim}]")
    boundaries = _boundary_space(c, k)
    kept = EchelonBasis(c.m(k))
    reps = []
    for z in null_space_basis(_boundary(c, k)):
        reduced = boundaries.reduce(z)
        if reduced.is_zero():
            continue
        if kept.add(reduced):
            reps.append(ChainVector(k, c, reduced))
    return reps


def is_homologous(a: ChainVector, b: ChainVector) -> bool:
    """True iff ``a + b`` bounds a (k+1)-chain."""
    _check_compatible(a, b)
    c, k = a.complex, a.dim
    bk = _boundary(c, k)
    for chain in (a, b):
        if not bk.apply(chain.support).is_zero():
            raise ValueError("is_homologous needs cycles (chains with zero boundary)")
    return _boundary_space(c, k).contains(a.support ^ b.support)
