"""Shared numerical linear algebra: tolerant ranks, subspace bases, residuals.

All rank decisions in the package go through :func:`rank_info` so that every
classification can report how far the singular spectrum sits from the cut
threshold (the ``margin``).  A margin of ``m`` means the closest kept singular
value is ``m`` times above the threshold and the closest dropped one is ``m``
times below it; borderline decisions therefore show up as small margins.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RankInfo:
    """Numeric rank of a matrix together with the singular-value gap data."""

    rank: int
    sigma_max: float
    threshold: float
    kept_min: float   # smallest singular value counted into the rank (inf if rank 0)
    dropped_max: float  # largest singular value below the threshold (0.0 if none)

    @property
    def margin(self) -> float:
        """How decisively the spectrum separates at the threshold (>= 1 ratio)."""
        up = self.kept_min / self.threshold if np.isfinite(self.kept_min) else np.inf
        down = self.threshold / self.dropped_max if self.dropped_max > 0 else np.inf
        return float(min(up, down))


def singular_values(matrix: np.ndarray) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.size == 0:
        return np.zeros(0)
    return np.linalg.svd(matrix, compute_uv=False)


def rank_info(matrix: np.ndarray, tol: float = 1e-9) -> RankInfo:
    """Count singular values above ``tol * sigma_max`` (0 for a zero matrix)."""
    s = singular_values(matrix)
    if s.size == 0 or s[0] == 0.0:
        return RankInfo(rank=0, sigma_max=0.0, threshold=0.0, kept_min=np.inf, dropped_max=0.0)
    threshold = tol * s[0]
    rank = int(np.count_nonzero(s > threshold))
    kept_min = float(s[rank - 1]) if rank > 0 else np.inf
    dropped_max = float(s[rank]) if rank < s.size else 0.0
    return RankInfo(rank=rank, sigma_max=float(s[0]), threshold=float(threshold),
                    kept_min=kept_min, dropped_max=dropped_max)


def numeric_rank(matrix: np.ndarray, tol: float = 1e-9) -> int:
    return rank_info(matrix, tol).rank


def orthonormal_rowspace(rows: np.ndarray, tol: float = 1e-9) -> tuple[np.ndarray, RankInfo]:
    """Orthonormal basis (as rows) of the row space of ``rows``."""
    rows = np.asarray(rows, dtype=float)
    if rows.size == 0:
        return np.zeros((0, rows.shape[1] if rows.ndim == 2 else 0)), rank_info(rows, tol)
    _, s, vt = np.linalg.svd(rows, full_matrices=False)
    info = _info_from_spectrum(s, tol)
    return vt[: info.rank].copy(), info


def nullspace(matrix: np.ndarray, tol: float = 1e-9) -> tuple[np.ndarray, RankInfo]:
    """Orthonormal basis (as rows) of the right kernel of ``matrix``."""
    matrix = np.asarray(matrix, dtype=float)
    ncols = matrix.shape[1]
    if matrix.shape[0] == 0 or not np.any(matrix):
        return np.eye(ncols), rank_info(matrix, tol)
    _, s, vt = np.linalg.svd(matrix, full_matrices=True)
    info = _info_from_spectrum(s, tol)
    return vt[info.rank:].copy(), info


def _info_from_spectrum(s: np.ndarray, tol: float) -> RankInfo:
    if s.size == 0 or s[0] == 0.0:
        return RankInfo(rank=0, sigma_max=0.0, threshold=0.0, kept_min=np.inf, dropped_max=0.0)
    threshold = tol * s[0]
    rank = int(np.count_nonzero(s > threshold))
    kept_min = float(s[rank - 1]) if rank > 0 else np.inf
    dropped_max = float(s[rank]) if rank < s.size else 0.0
    return RankInfo(rank=rank, sigma_max=float(s[0]), threshold=float(threshold),
                    kept_min=kept_min, dropped_max=dropped_max)


def residual_outside(basis: np.ndarray, vectors: np.ndarray) -> float:
    """Largest Euclidean distance of the (unit-scaled) vectors from span(basis rows).

    ``basis`` must have orthonormal rows; an empty basis means the span is {0}.
    """
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    worst = 0.0
    for v in vectors:
        nv = np.linalg.norm(v)
        if nv == 0.0:
            continue
        u = v / nv
        if basis.shape[0]:
            u = u - basis.T @ (basis @ u)
        worst = max(worst, float(np.linalg.norm(u)))
    return worst


def expm_series(a: np.ndarray, terms: int = 16) -> np.ndarray:
    """Matrix exponential by scaled squaring of a truncated Taylor series.

    The argument is scaled by ``2**-s`` until its Frobenius norm is at most
    0.5, the series is summed to ``terms`` terms, and the result is squared
    ``s`` times.  With norm <= 0.5 the truncation error of the 16-term series
    is below 0.5**17/17!, i.e. far under double rounding; squaring amplifies
    it by at most a modest factor for the matrix sizes used here (d <= 8).
    """
    a = np.asarray(a, dtype=float)
    norm = np.linalg.norm(a)
    squarings = 0
    if norm > 0.5:
        squarings = int(np.ceil(np.log2(norm / 0.5)))
        a = a / (2.0 ** squarings)
    result = np.eye(a.shape[0])
    term = np.eye(a.shape[0])
    for k in range(1, terms + 1):
        term = term @ a / k
        result = result + term
    for _ in range(squarings):
        result = result @ result
    return result
