"""Laplacian spectra and synchronizability metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, laplacian

__all__ = ["SpectralSummary", "symmetric_eigenvalues", "sync_metrics", "DEFAULT_TOL"]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: list[float]
    spectral_gap: float
    eigen_ratio: float
    components: int

    def to_dict(self, decimals: int | None = None) -> dict:
        r = (lambda x: x) if decimals is None else (lambda x: round(x, decimals))
        return {
            "spectral_gap": r(self.spectral_gap),
            "eigen_ratio": r(self.eigen_ratio),
            "eigenvalues": [r(x) for x in self.eigenvalues],
            "components": self.components,
        }


def symmetric_eigenvalues(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending (LAPACK ``syevd``)."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if a.size and np.max(np.abs(a - a.T)) > tol:
        raise ValueError("matrix is not symmetric within tolerance")
    return np.linalg.eigvalsh((a + a.T) / 2)


def sync_metrics(g: Graph, tol: float = DEFAULT_TOL) -> SpectralSummary:
    """Spectral gap (smallest nonzero Laplacian eigenvalue) and eigen-ratio ``gap / max``.

    Eigenvalues within ``tol * n * max(1, lambda_max)`` of zero count as zero;
    their multiplicity is reported as ``components``.
    """
    if g.n == 0:
        raise ValueError("empty graph has no spectrum")
    eig = symmetric_eigenvalues(laplacian(g), tol)
    lam_max = float(eig[-1])
    zero_tol = max(tol, 1e-9) * g.n * max(1.0, lam_max)
    nonzero = eig[eig > zero_tol]
    components = int(len(eig) - len(nonzero))
    if len(nonzero) == 0:
        gap, ratio = 0.0, 0.0
    else:
        gap = float(nonzero[0])
        ratio = gap / lam_max
    return SpectralSummary([float(x) for x in eig], gap, ratio, components)
