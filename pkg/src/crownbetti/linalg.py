"""Exact matrix ranks: dense Gaussian elimination mod p and fraction-free
elimination over the integers (for characteristic 0)."""

from __future__ import annotations

import numpy as np


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over the prime field F_p.

    Row operations are vectorized with numpy; p^2 must fit in int64,
    which holds comfortably for the default prime 32003.
    """
    a = np.asarray(matrix, dtype=np.int64) % p
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = a[rank] * inv % p
        below = rank + 1 + np.nonzero(a[rank + 1 :, col])[0]
        if below.size:
            a[below] = (a[below] - np.outer(a[below, col], a[rank])) % p
        rank += 1
    return rank


def rank_char0(matrix: np.ndarray) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination.

    Works on Python integers, so there is no overflow; intended for the
    small audit-scale matrices in this package.
    """
    rows = [[int(x) for x in row] for row in np.asarray(matrix)]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, nrows):
            factor = rows[r][col]
            rows[r] = [
                (lead * rows[r][c] - factor * rows[rank][c]) // prev
                for c in range(ncols)
            ]
        prev = lead
        rank += 1
        if rank == nrows:
            break
    return rank
