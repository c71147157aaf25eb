"""Exact spline dimension from smoothness constraints.

The space of piecewise polynomials of degree <= k is parameterized by one
coefficient block per triangle.  Across an interior edge with affine form
``l``, C^r smoothness means ``l^(r+1)`` divides the difference of the two
neighbouring polynomials.  Writing the difference in the affine frame
``(u, v) = (l, m)`` with ``m`` the edge direction, this is the vanishing of
every coefficient of ``u^i v^j`` with ``i <= r``.  The dimension is the
nullity of the stacked conditions, computed exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .bounds import binom2, lower_bound_hom, omega_a_b
from .linalg import exact_rank
from .mesh import Edge, MeshError, SlopeKey, Triangulation, orient


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[tuple[int, int], ...]:
    """Exponents ``(alpha, beta)`` with ``alpha + beta <= k``, graded lexicographic."""
    return tuple((d - b, b) for d in range(k + 1) for b in range(d + 1))


@dataclass
class ConstraintSystem:
    """Sparse smoothness conditions; column block ``s`` belongs to triangle ``s``."""

    ncols: int
    block: int
    rows: list[dict[int, Fraction]] = field(default_factory=list)
    provenance: list[tuple[Edge, int, int]] = field(default_factory=list)

    def dense(self) -> list[list[Fraction]]:
        out = []
        for row in self.rows:
            d = [Fraction(0)] * self.ncols
            for c, v in row.items():
                d[c] = v
            out.append(d)
        return out


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {key: c for key, c in out.items() if c}


@lru_cache(maxsize=4096)
def _frame_matrix(A: int, B: int, C: int, k: int) -> tuple[tuple[tuple[int, int], dict[int, Fraction]], ...]:
    """Rows of the change of basis from ``x^a y^b`` to ``u^i v^j``.

    ``u = A x + B y + C`` and ``v = -B x + A y``.  Returns, for each ``(i, j)``,
    the map monomial-index -> coefficient.
    """
    D = Fraction(A * A + B * B)
    x = {(1, 0): A / D, (0, 0): -A * C / D, (0, 1): -B / D}
    y = {(1, 0): B / D, (0, 0): -B * C / D, (0, 1): A / D}
    xp = [{(0, 0): Fraction(1)}]
    yp = [{(0, 0): Fraction(1)}]
    for _ in range(k):
        xp.append(_mul(xp[-1], x))
        yp.append(_mul(yp[-1], y))
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for col, (a, b) in enumerate(monomials(k)):
        for key, c in _mul(xp[a], yp[b]).items():
            rows.setdefault(key, {})[col] = c
    return tuple(sorted(rows.items()))


def edge_smoothness_rows(T: Triangulation, edge: Edge, r: int, k: int) -> list[tuple[tuple[int, int], dict[int, Fraction], dict[int, Fraction]]]:
    """Conditions for C^r smoothness across one interior edge.

    Returns ``(i, j), first_block_row, second_block_row`` triples; block rows
    are indexed by monomial position in :func:`monomials`.  There are
    ``sum_{i=0..r} (k + 1 - i)`` of them.
    """
    u, v = min(edge), max(edge)
    tris = T.edge_triangles.get((u, v))
    if tris is None or len(tris) != 2:
        raise MeshError(f"edge {edge} is not an interior edge")
    form = T.edge_form((u, v))
    out = []
    for (i, j), row in _frame_matrix(form.A, form.B, form.C, k):
        if i <= r:
            out.append(((i, j), row, {c: -val for c, val in row.items()}))
    expected = sum(k + 1 - i for i in range(min(r, k) + 1))
    if len(out) != expected:
        raise AssertionError(f"edge {edge}: {len(out)} rows, expected {expected}")
    return out


def constraint_system(T: Triangulation, r: int, k: int, *, shuffle_seed: int | None = None) -> ConstraintSystem:
    """Assemble all smoothness rows.  ``shuffle_seed`` permutes rows and columns."""
    block = binom2(k + 2)
    ncols = T.f2 * block
    perm = list(range(ncols))
    edges = list(T.interior_edges)
    if shuffle_seed is not None:
        rng = random.Random(shuffle_seed)
        rng.shuffle(perm)
        rng.shuffle(edges)
    sys = ConstraintSystem(ncols, block)
    for e in edges:
        s1, s2 = T.edge_triangles[e]
        for (i, j), r1, r2 in edge_smoothness_rows(T, e, r, k):
            row = {perm[s1 * block + c]: val for c, val in r1.items()}
            row.update({perm[s2 * block + c]: val for c, val in r2.items()})
            sys.rows.append(row)
            sys.provenance.append((e, i, j))
    return sys


def conformality_rows(T: Triangulation, r: int, k: int) -> tuple[list[list[int]], int]:
    """Jump formulation of the same space.

    Across interior edge ``e`` with triangles ``(s0, s1)`` write
    ``p_s1 - p_s0 = l_e^(r+1) c_e`` with a cofactor ``c_e`` of degree
    ``k - r - 1``.  On a disk, cofactors come from a spline exactly when the
    signed jumps around every interior vertex sum to zero.  Returns the
    integer matrix of those conditions (one block of ``binom2(k+2)`` rows per
    interior vertex) and its column count.
    """
    e = r + 1
    mons = {m: i for i, m in enumerate(monomials(k))}
    cof = monomials(k - e) if k >= e else ()
    nb, nc = len(mons), len(cof)
    verts = {g: i for i, g in enumerate(T.interior_vertices)}
    ncols = len(T.interior_edges) * nc
    rows = [[0] * ncols for _ in range(len(verts) * nb)]
    pts = T.vertices
    for ei, edge in enumerate(T.interior_edges):
        form = T.edge_form(edge)
        power = {}
        for i in range(e + 1):
            for j in range(e + 1 - i):
                power[(i, j)] = comb(e, i) * comb(e - i, j) * form.A**i * form.B**j * form.C ** (e - i - j)
        s1 = T.edge_triangles[edge][1]
        apex = next(x for x in T.triangles[s1] if x not in edge)
        for g in edge:
            if g not in verts:
                continue
            w = edge[0] if edge[1] == g else edge[1]
            # Counter-clockwise around g this edge is crossed from s0 into s1
            # exactly when s1 lies to the left of the ray g -> w.
            sign = 1 if orient(pts[g], pts[w], pts[apex]) > 0 else -1
            base = verts[g] * nb
            for ci, (a, b) in enumerate(cof):
                col = ei * nc + ci
                for (i, j), v in power.items():
                    rows[base + mons[(a + i, b + j)]][col] += sign * v
    return rows, ncols


def spline_dimension(
    T: Triangulation,
    r: int,
    k: int,
    *,
    formulation: str = "assembled",
    method: str = "auto",
    shuffle_seed: int | None = None,
) -> int:
    """``dim C^r_k`` of the triangulation, exactly.

    ``formulation="assembled"`` takes the nullity of the per-triangle
    smoothness system; ``"conformality"`` uses the smaller jump system of
    :func:`conformality_rows` (same value, several times faster).
    """
    if r < 0 or k < r:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    if formulation == "conformality":
        rows, ncols = conformality_rows(T, r, k)
        free = binom2(k + 2) + ncols
        return free - exact_rank(rows, ncols, method=method) if rows and ncols else free
    if formulation != "assembled":
        raise ValueError(f"unknown formulation {formulation!r}")
    sys = constraint_system(T, r, k, shuffle_seed=shuffle_seed)
    if not sys.rows:
        return sys.ncols
    return sys.ncols - exact_rank(sys.dense(), sys.ncols, method=method)


def homology_defect(T: Triangulation, r: int, k: int, *, formulation: str = "assembled") -> int:
    """Gap between the true dimension and the homological lower bound."""
    d = spline_dimension(T, r, k, formulation=formulation) - lower_bound_hom(T, r, k)
    if d < 0:
        from .ordering import InternalInconsistencyError

        raise InternalInconsistencyError(f"dimension below the lower bound at r={r}, k={k}")
    return d


@lru_cache(maxsize=None)
def monomials3(d: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


def fatpoint_quotient_dim(slopes: Sequence[SlopeKey], r: int, k: int, *, method: str = "auto") -> int:
    """``dim (R / <l_1^(r+1), ..., l_t^(r+1)>)_k`` with ``R = Q[x, y, z]``.

    ``slopes`` are pairwise non-proportional pairs ``(A, B)``; the forms are
    ``l = A x + B y``.  Computed as ``dim R_k`` minus the exact rank of the
    degree-k multiples of the generators.
    """
    keys = []
    for A, B in slopes:
        A, B = Fraction(A), Fraction(B)
        if A == 0 and B == 0:
            raise ValueError("zero linear form")
        keys.append((A, B))
    for i in range(len(keys)):
        for j in range(i):
            if keys[i][0] * keys[j][1] == keys[i][1] * keys[j][0]:
                raise ValueError(f"slopes {slopes[j]} and {slopes[i]} are not distinct")
    total = binom2(k + 2)
    e = r + 1
    if k < e or not keys:
        return total
    cols = {m: i for i, m in enumerate(monomials3(k))}
    rows = []
    for A, B in keys:
        power = {(e - s, s): comb(e, s) * A ** (e - s) * B**s for s in range(e + 1)}
        for a, b, c in monomials3(k - e):
            row = [Fraction(0)] * len(cols)
            for (px, py), coef in power.items():
                row[cols[(a + px, b + py, c)]] = coef
            rows.append(row)
    return total - exact_rank(rows, len(cols), method=method)


def fatpoint_closed_form(t: int, r: int, k: int) -> int:
    """Hilbert function read off the free resolution of the vertex ideal."""
    v = omega_a_b(t, r)
    return binom2(k + 2) - t * binom2(k + 1 - r) + v.b * binom2(k + 2 - v.omega) + v.a * binom2(k + 1 - v.omega)
