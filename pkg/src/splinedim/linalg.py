"""Exact rank of rational matrices.

Matrices are given as lists of rows; entries may be ``int`` or ``Fraction``.
Rows are scaled to integers first, then reduced either by a pure-Python
fraction-free (Bareiss) elimination or by FLINT's ``fmpz_mat.rank``.  Both
are exact; the backend only changes speed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to coprime integers (zero rows stay zero)."""
    den = 1
    for v in row:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    ints = [int(v * den) for v in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def rank_fraction_free(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    """Rank by fraction-free Gaussian elimination over the integers.

    Pivot row choice prefers the entry of smallest bit length in the pivot
    column; it affects speed only.
    """
    work = [integer_row(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0]) if ncols is None else ncols
    rank = 0
    for c in range(ncols):
        cands = [i for i in range(rank, len(work)) if work[i][c]]
        if not cands:
            continue
        p = min(cands, key=lambda i: abs(work[i][c]).bit_length())
        work[rank], work[p] = work[p], work[rank]
        prow = work[rank]
        pv = prow[c]
        for i in range(rank + 1, len(work)):
            f = work[i][c]
            if f:
                g = gcd(pv, f)
                a, b = pv // g, f // g
                row = [a * x - b * y for x, y in zip(work[i], prow)]
                h = 0
                for v in row:
                    h = gcd(h, v)
                work[i] = [v // h for v in row] if h > 1 else row
        rank += 1
        if rank == len(work):
            break
    return rank


def rank_flint(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if flint is None:
        raise RuntimeError("python-flint is not installed")
    work = [integer_row(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0]) if ncols is None else ncols
    return int(flint.fmpz_mat(len(work), ncols, [v for r in work for v in r]).rank())


def exact_rank(rows: Sequence[Sequence], ncols: int | None = None, method: str = "auto") -> int:
    """Exact rank; ``method`` is ``"auto"``, ``"flint"`` or ``"fraction-free"``."""
    if method == "auto":
        method = "flint" if flint is not None else "fraction-free"
    if method == "flint":
        return rank_flint(rows, ncols)
    if method == "fraction-free":
        return rank_fraction_free(rows, ncols)
    raise ValueError(f"unknown rank method {method!r}")
