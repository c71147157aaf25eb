"""Small named triangulations and a random disk generator."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
from scipy.spatial import Delaunay

from .mesh import MeshError, Point2, Triangulation, orient, validate_disk


def single_triangle(a=(0, 0), b=(1, 0), c=(0, 1)) -> Triangulation:
    return Triangulation([a, b, c], [(0, 1, 2)])


def two_triangles() -> Triangulation:
    """Two triangles sharing the edge (0,0)-(1,0)."""
    return Triangulation([(0, 0), (1, 0), (0, 1), (0, -1)], [(0, 1, 2), (0, 1, 3)])


def unit_square() -> Triangulation:
    """Unit square cut along its diagonal."""
    return Triangulation([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1, 2), (0, 2, 3)])


def fan(n: int = 4, center=(0, 0), radius: int = 2) -> Triangulation:
    """One interior vertex joined to ``n`` boundary vertices.

    Boundary vertices sit on a lattice polygon around ``center``; for
    ``n == 4`` it is a square, so opposite spokes are collinear.
    """
    ring = {
        3: [(2, -1), (0, 2), (-2, -1)],
        4: [(1, 0), (0, 1), (-1, 0), (0, -1)],
        5: [(2, 0), (1, 2), (-1, 2), (-2, 0), (0, -2)],
        6: [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)],
    }
    if n not in ring:
        raise ValueError("fan supports 3 to 6 spokes")
    cx, cy = center
    pts = [(cx, cy)] + [(cx + radius * x, cy + radius * y) for x, y in ring[n]]
    return Triangulation(pts, [(0, i, i % n + 1) for i in range(1, n + 1)])


def generic_fan(n: int = 5) -> Triangulation:
    """Fan whose ``n`` spokes have pairwise distinct slopes."""
    rings = {
        3: [(3, 0), (-1, 2), (-1, -3)],
        4: [(3, 0), (1, 2), (-2, 1), (-1, -3)],
        5: [(3, 0), (2, 2), (-1, 3), (-3, -1), (2, -3)],
        6: [(3, 0), (2, 2), (0, 3), (-2, 1), (-3, -2), (1, -3)],
    }
    if n not in rings:
        raise ValueError("generic_fan supports 3 to 6 spokes")
    return Triangulation([(0, 0)] + rings[n], [(0, i, i % n + 1) for i in range(1, n + 1)])


def grid(m: int = 2, n: int = 2) -> Triangulation:
    """``m x n`` unit squares, each cut along the same diagonal."""
    pts = [(i, j) for j in range(n + 1) for i in range(m + 1)]
    idx = {p: i for i, p in enumerate(pts)}
    tris = []
    for j in range(n):
        for i in range(m):
            a, b, c, d = idx[(i, j)], idx[(i + 1, j)], idx[(i + 1, j + 1)], idx[(i, j + 1)]
            tris += [(a, b, c), (a, c, d)]
    return Triangulation(pts, tris)


def morgan_scott(perturbation=None) -> Triangulation:
    """Triangle-in-triangle configuration.

    The outer triangle is an affine image of an equilateral one and the
    inner triangle is its medial triangle shrunk by 1/2 about the common
    centroid (so rotated by 180 degrees relative to the outer one).  Each
    inner vertex faces one outer edge.  Spline dimensions are affine
    invariant, so this is the symmetric configuration; ``perturbation`` is
    added to the first inner vertex.
    """
    outer = [(0, 0), (12, 0), (0, 12)]
    inner = [(5, 2), (5, 5), (2, 5)]  # facing edges 0-1, 1-2, 2-0
    if perturbation is not None:
        dx, dy = (Fraction(v) for v in perturbation)
        inner[0] = (inner[0][0] + dx, inner[0][1] + dy)
    tris = [(3, 4, 5), (0, 1, 3), (1, 2, 4), (2, 0, 5), (0, 3, 5), (1, 4, 3), (2, 5, 4)]
    return Triangulation(outer + inner, tris)


def random_disk(
    rng: random.Random | int | None = None,
    n_interior: tuple[int, int] = (1, 10),
    n_boundary: tuple[int, int] = (3, 8),
    lattice: int = 12,
    max_triangles: int | None = None,
    attempts: int = 200,
) -> Triangulation:
    """Random Delaunay triangulation of lattice points in a convex polygon.

    Points are drawn from a small integer lattice so that collinear edges
    (and hence reduced slope counts) occur regularly.  The combinatorics
    come from Qhull; the result is then validated exactly and resampled on
    any failure.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    for _ in range(attempts):
        nb = rng.randint(*n_boundary)
        ni = rng.randint(*n_interior)
        raw = {(rng.randint(0, lattice), rng.randint(0, lattice)) for _ in range(nb + ni)}
        if len(raw) < 3:
            continue
        pts = sorted(raw)
        try:
            tri = Delaunay(np.array(pts, dtype=float))
        except Exception:
            continue
        used = sorted({int(v) for s in tri.simplices for v in s})
        remap = {v: i for i, v in enumerate(used)}
        verts = [pts[v] for v in used]
        simplices = [tuple(remap[int(v)] for v in s) for s in tri.simplices]
        fverts = [Point2(Fraction(x), Fraction(y)) for x, y in verts]
        simplices = [s for s in simplices if orient(*(fverts[i] for i in s)) != 0]
        if not simplices:
            continue
        try:
            T = Triangulation(verts, simplices, validate=False)
        except MeshError:
            continue
        if not validate_disk(T).ok:
            continue
        if not n_interior[0] <= T.f0_interior <= n_interior[1]:
            continue
        if max_triangles is not None and T.f2 > max_triangles:
            continue
        return T
    raise RuntimeError("could not sample a valid random disk")

