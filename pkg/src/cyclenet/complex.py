"""Clique complexes and their GF(2) boundary matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

from .gf2 import BitMatrix
from .graph import Graph

__all__ = [
    "CapExceededError",
    "CliqueComplex",
    "build_complex",
    "f_vector",
    "euler_characteristic",
    "boundary_matrix",
    "DEFAULT_MAX_DIM",
]

DEFAULT_MAX_DIM = 3

Simplex = tuple[int, ...]


class CapExceededError(RuntimeError):
    """Cliques exist above the dimension cap, so alternating sums would be wrong."""


@dataclass(frozen=True, eq=False)
class CliqueComplex:
    """Cliques of ``graph`` up to dimension ``max_dim``.

    ``cliques[k]`` holds the k-cliques (``k + 1`` node indices, increasing)
    in lexicographic order and ``index[k]`` maps each one to its position.
    ``truncated`` is True when some clique of dimension ``max_dim + 1``
    exists, i.e. the cap cut the enumeration short.
    """

    graph: Graph
    max_dim: int
    cliques: tuple[tuple[Simplex, ...], ...]
    truncated: bool
    strict: bool = True
    index: tuple[dict, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "index", tuple({s: i for i, s in enumerate(level)} for level in self.cliques)
        )

    def m(self, k: int) -> int:
        if 0 <= k < len(self.cliques):
            return len(self.cliques[k])
        return 0

    def labels(self, simplex: Simplex) -> tuple[str, ...]:
        return tuple(self.graph.label(i) for i in simplex)

    def check_cap(self) -> None:
        if self.strict and self.truncated:
            raise CapExceededError(
                f"cliques of dimension {self.max_dim + 1} exist; raise max_dim above {self.max_dim}"
            )

    def to_dict(self) -> dict:
        out = {"f_vector": f_vector(self)}
        if not self.truncated:
            out["euler_characteristic"] = euler_characteristic(self)
        return out


def _enumerate(g: Graph, limit: int | None) -> tuple[list[list[Simplex]], bool]:
    higher = [0] * g.n
    for i, j in g.edges:
        higher[i] |= 1 << j
    levels: list[list[Simplex]] = []
    truncated = False

    def extend(clique: Simplex, cand: int) -> None:
        nonlocal truncated
        k = len(clique) - 1
        while len(levels) <= k:
            levels.append([])
        levels[k].append(clique)
        if not cand:
            return
        if limit is not None and k >= limit:
            truncated = True
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            extend(clique + (v,), cand & higher[v])

    for v in range(g.n):
        extend((v,), higher[v])
    return levels, truncated


def build_complex(g: Graph, max_dim: int | None = DEFAULT_MAX_DIM, *, strict: bool = True) -> CliqueComplex:
    """Enumerate all cliques of ``g`` of dimension ``<= max_dim``.

    Cliques are grown only by common neighbors with a larger index, so each is
    produced once.  ``max_dim=None`` enumerates up to the clique number.
    """
    if max_dim is not None and max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    levels, truncated = _enumerate(g, max_dim)
    top = max_dim if max_dim is not None else max(len(levels) - 1, 0)
    while len(levels) <= top:
        levels.append([])
    cliques = tuple(tuple(sorted(level)) for level in levels[: top + 1])
    return CliqueComplex(g, top, cliques, truncated, strict)


def f_vector(c: CliqueComplex) -> list[int]:
    return [len(level) for level in c.cliques]


def euler_characteristic(c: CliqueComplex) -> int:
    """Alternating sum of clique counts; refuses truncated complexes in strict mode."""
    c.check_cap()
    return sum((-1) ** k * len(level) for k, level in enumerate(c.cliques))


def boundary_matrix(c: CliqueComplex, k: int) -> BitMatrix:
    """``m_{k-1} x m_k`` face incidence of k-cliques; k+1 ones per column."""
    if not 1 <= k <= c.max_dim:
        raise ValueError(f"k must lie in [1, {c.max_dim}], got {k}")
    faces = c.index[k - 1]
    rows = [0] * len(c.cliques[k - 1])
    for j, simplex in enumerate(c.cliques[k]):
        bit = 1 << j
        for drop in range(k + 1):
            rows[faces[simplex[:drop] + simplex[drop + 1:]]] |= bit
    return BitMatrix(len(rows), len(c.cliques[k]), tuple(rows))
