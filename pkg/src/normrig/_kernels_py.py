"""Pure-numpy edge kernels (fallback backend).

Same contract as the compiled backend in ``_kernels_cy.pyx``:

``edge_lengths``
    lengths of the edge difference vectors in the given norm.
``edge_support_rows``
    support functional of each normalized edge difference plus a per-edge
    status flag: 0 ok, 1 degenerate (length <= degen_tol), 2 non-smooth
    (support functional not unique at relative gap smooth_tol).

``kind`` selects the norm: 0 Euclidean with gram matrix ``aux``; 1 lp with
finite exponent ``q`` >= 1; 2 sup norm; 3 polyhedral with functional rows
``aux``.  Rows for flagged edges are zeroed; callers decide how to report.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

KIND_EUCLIDEAN = 0
KIND_LP = 1
KIND_LINF = 2
KIND_POLYHEDRAL = 3

STATUS_OK = 0
STATUS_DEGENERATE = 1
STATUS_NONSMOOTH = 2


def _diffs(coords: np.ndarray, edges: np.ndarray) -> np.ndarray:
    if edges.shape[0] == 0:
        return np.zeros((0, coords.shape[1]))
    return coords[edges[:, 0]] - coords[edges[:, 1]]


def _lp_norms(diffs: np.ndarray, q: float) -> np.ndarray:
    absd = np.abs(diffs)
    if q == 1.0:
        return absd.sum(axis=1)
    # rescale by the row max to keep pow() away from overflow/underflow
    peak = absd.max(axis=1)
    safe = np.where(peak > 0.0, peak, 1.0)
    scaled = absd / safe[:, None]
    return peak * np.power(scaled, q).sum(axis=1) ** (1.0 / q)


def edge_lengths(coords, edges, kind, q, aux):
    coords = np.ascontiguousarray(coords, dtype=float)
    edges = np.ascontiguousarray(edges, dtype=np.int64)
    diffs = _diffs(coords, edges)
    if kind == KIND_EUCLIDEAN:
        return np.sqrt(np.einsum("ij,jk,ik->i", diffs, aux, diffs))
    if kind == KIND_LP:
        return _lp_norms(diffs, q)
    if kind == KIND_LINF:
        return np.abs(diffs).max(axis=1) if diffs.shape[0] else np.zeros(0)
    if kind == KIND_POLYHEDRAL:
        return (diffs @ aux.T).max(axis=1) if diffs.shape[0] else np.zeros(0)
    raise ValueError(f"unknown norm kind {kind}")


def edge_support_rows(coords, edges, kind, q, aux, smooth_tol, degen_tol):
    coords = np.ascontiguousarray(coords, dtype=float)
    edges = np.ascontiguousarray(edges, dtype=np.int64)
    nedges = edges.shape[0]
    d = coords.shape[1]
    rows = np.zeros((nedges, d))
    status = np.zeros(nedges, dtype=np.uint8)
    if nedges == 0:
        return rows, status

    diffs = _diffs(coords, edges)
    lengths = edge_lengths(coords, edges, kind, q, aux)
    degenerate = lengths <= degen_tol
    status[degenerate] = STATUS_DEGENERATE
    ok = ~degenerate
    if not np.any(ok):
        return rows, status

    unit = np.zeros_like(diffs)
    unit[ok] = diffs[ok] / lengths[ok, None]

    if kind == KIND_EUCLIDEAN:
        rows[ok] = unit[ok] @ aux
    elif kind == KIND_LP and q == 1.0:
        nonsmooth = ok & (np.abs(unit).min(axis=1) <= smooth_tol)
        status[nonsmooth] = STATUS_NONSMOOTH
        good = ok & ~nonsmooth
        rows[good] = np.sign(unit[good])
    elif kind == KIND_LP:
        rows[ok] = np.sign(unit[ok]) * np.abs(unit[ok]) ** (q - 1.0)
    elif kind == KIND_LINF:
        absu = np.abs(unit)
        order = np.argsort(absu, axis=1)
        top = order[:, -1]
        gap = absu[np.arange(nedges), top]
        if d > 1:
            gap = gap - absu[np.arange(nedges), order[:, -2]]
        nonsmooth = ok & (gap <= smooth_tol)
        status[nonsmooth] = STATUS_NONSMOOTH
        good = ok & ~nonsmooth
        idx = np.nonzero(good)[0]
        rows[idx, top[idx]] = np.sign(unit[idx, top[idx]])
    elif kind == KIND_POLYHEDRAL:
        vals = unit @ aux.T
        order = np.argsort(vals, axis=1)
        top = order[:, -1]
        gap = vals[np.arange(nedges), top]
        if aux.shape[0] > 1:
            gap = gap - vals[np.arange(nedges), order[:, -2]]
        nonsmooth = ok & (gap <= smooth_tol)
        status[nonsmooth] = STATUS_NONSMOOTH
        good = ok & ~nonsmooth
        idx = np.nonzero(good)[0]
        rows[idx] = aux[top[idx]]
    else:
        raise ValueError(f"unknown norm kind {kind}")

    rows[status != STATUS_OK] = 0.0
    return rows, status
