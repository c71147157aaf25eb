"""Powell-Sabin 6-split and 12-split refinements with exact coordinates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import binom2
from .mesh import Edge, MeshError, Point2, Triangulation, orient


class CrossingConditionError(MeshError):
    """The segment between two split points misses the interior of their shared edge."""


@dataclass(frozen=True)
class RefinementRecord:
    """A refined triangulation together with its provenance.

    Parent vertex ``i`` keeps index ``i`` in the child.  ``split_points``
    maps a parent triangle to its interior split point (PS-6) or centroid
    (PS-12); ``edge_points`` maps a parent edge to the child vertex placed on
    it; ``medial_points`` (PS-12 only) lists the midpoints of the medial
    triangle edges per parent triangle.
    """

    scheme: str
    parent: Triangulation
    child: Triangulation
    parent_of_triangle: tuple[int, ...]
    split_points: dict[int, int]
    edge_points: dict[Edge, int]
    medial_points: dict[int, tuple[int, int, int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = self.child.to_dict()
        out["parent_of_triangle"] = list(self.parent_of_triangle)
        return out


def _mid(p: Point2, q: Point2) -> Point2:
    return Point2((p.x + q.x) / 2, (p.y + q.y) / 2)


class _Builder:
    def __init__(self, parent: Triangulation):
        self.points: list[Point2] = list(parent.vertices)
        self.tris: list[tuple[int, int, int]] = []
        self.parent_of: list[int] = []

    def add(self, p: Point2) -> int:
        self.points.append(p)
        return len(self.points) - 1

    def tri(self, parent: int, a: int, b: int, c: int) -> None:
        self.tris.append((a, b, c))
        self.parent_of.append(parent)


def ps12_split(T: Triangulation) -> RefinementRecord:
    """Split every triangle into twelve by its medians and medial triangle."""
    bld = _Builder(T)
    pts = T.vertices
    mids = {e: bld.add(_mid(pts[e[0]], pts[e[1]])) for e in T.edges}
    centroids, medial = {}, {}
    for ti, (a, b, c) in enumerate(T.triangles):
        pa, pb, pc = pts[a], pts[b], pts[c]
        g = bld.add(Point2((pa.x + pb.x + pc.x) / 3, (pa.y + pb.y + pc.y) / 3))
        mab, mbc, mca = (mids[tuple(sorted(e))] for e in ((a, b), (b, c), (c, a)))
        # The median from a corner crosses the opposite medial edge at its midpoint.
        q = bld.points
        ga = bld.add(_mid(q[mab], q[mca]))
        gb = bld.add(_mid(q[mab], q[mbc]))
        gc = bld.add(_mid(q[mbc], q[mca]))
        centroids[ti] = g
        medial[ti] = (ga, gb, gc)
        for corner, m1, gam, m2 in ((a, mab, ga, mca), (b, mbc, gb, mab), (c, mca, gc, mbc)):
            bld.tri(ti, corner, m1, gam)
            bld.tri(ti, corner, gam, m2)
        for m, g1, g2 in ((mab, ga, gb), (mbc, gb, gc), (mca, gc, ga)):
            bld.tri(ti, m, g1, g)
            bld.tri(ti, m, g, g2)
    child = Triangulation(bld.points, bld.tris)
    return RefinementRecord("ps12", T, child, tuple(bld.parent_of), centroids, mids, medial)


def _strictly_inside(p: Point2, a: Point2, b: Point2, c: Point2) -> bool:
    s = orient(a, b, c)
    return all(orient(*pair, p) * s > 0 for pair in ((a, b), (b, c), (c, a)))


def _sqrt_approx(x: Fraction) -> Fraction:
    return Fraction(math.sqrt(float(x))).limit_denominator(10**6)


def incenter_point(a: Point2, b: Point2, c: Point2) -> Point2:
    """Rational approximation of the incenter, checked to be strictly interior."""

    def d2(p, q):
        return (p.x - q.x) ** 2 + (p.y - q.y) ** 2

    la, lb, lc = _sqrt_approx(d2(b, c)), _sqrt_approx(d2(c, a)), _sqrt_approx(d2(a, b))
    s = la + lb + lc
    p = Point2((la * a.x + lb * b.x + lc * c.x) / s, (la * a.y + lb * b.y + lc * c.y) / s)
    if not _strictly_inside(p, a, b, c):
        raise MeshError("rational incenter approximation left its triangle")
    return p


def _crossing(vi: Point2, vj: Point2, p: Point2, q: Point2) -> Point2 | None:
    op, oq = orient(vi, vj, p), orient(vi, vj, q)
    if op * oq >= 0:
        return None
    s = op / (op - oq)
    return Point2(p.x + s * (q.x - p.x), p.y + s * (q.y - p.y))


def _interior_points(T: Triangulation, strategy) -> list[Point2]:
    pts = T.vertices
    if strategy == "centroid":
        out = []
        for a, b, c in T.triangles:
            out.append(Point2((pts[a].x + pts[b].x + pts[c].x) / 3, (pts[a].y + pts[b].y + pts[c].y) / 3))
        return out
    if strategy == "incenter":
        return [incenter_point(pts[a], pts[b], pts[c]) for a, b, c in T.triangles]
    explicit = [Point2(Fraction(x), Fraction(y)) for x, y in strategy]
    if len(explicit) != T.f2:
        raise MeshError(f"need {T.f2} interior points, got {len(explicit)}")
    for ti, (p, (a, b, c)) in enumerate(zip(explicit, T.triangles)):
        if not _strictly_inside(p, pts[a], pts[b], pts[c]):
            raise MeshError(f"point {p} is not strictly inside triangle {ti}")
    return explicit


def _ps6_with(T: Triangulation, nus: list[Point2], boundary_strategy) -> RefinementRecord:
    pts = T.vertices
    bld = _Builder(T)
    nu_idx = {ti: bld.add(p) for ti, p in enumerate(nus)}
    epts: dict[Edge, int] = {}
    bedges = sorted(T.boundary_edges)
    if boundary_strategy == "midpoint":
        bpoints = {e: _mid(pts[e[0]], pts[e[1]]) for e in bedges}
    else:
        given = {tuple(sorted(e)): Point2(Fraction(x), Fraction(y)) for e, (x, y) in dict(boundary_strategy).items()}
        bpoints = {}
        for e in bedges:
            if e not in given:
                raise MeshError(f"no point given for boundary edge {e}")
            p, q, m = pts[e[0]], pts[e[1]], given[e]
            inside = orient(p, q, m) == 0 and min(p.x, q.x) <= m.x <= max(p.x, q.x) and min(p.y, q.y) <= m.y <= max(p.y, q.y)
            if not inside or m in (p, q):
                raise MeshError(f"point {m} is not interior to boundary edge {e}")
            bpoints[e] = m
    for e, ts in T.edge_triangles.items():
        if len(ts) == 2:
            i, j = ts
            mu = _crossing(nus[i], nus[j], pts[e[0]], pts[e[1]])
            if mu is None:
                raise CrossingConditionError(
                    f"segment between split points {tuple(nus[i])} (triangle {i}) and {tuple(nus[j])} "
                    f"(triangle {j}) does not cross the interior of edge {e}"
                )
            epts[e] = bld.add(mu)
        else:
            epts[e] = bld.add(bpoints[e])
    for ti, (a, b, c) in enumerate(T.triangles):
        nu = nu_idx[ti]
        for u, v in ((a, b), (b, c), (c, a)):
            m = epts[tuple(sorted((u, v)))]
            bld.tri(ti, u, m, nu)
            bld.tri(ti, m, v, nu)
    child = Triangulation(bld.points, bld.tris)
    return RefinementRecord("ps6", T, child, tuple(bld.parent_of), nu_idx, epts)


def ps6_split(T: Triangulation, interior_point_strategy="auto", boundary_point_strategy="midpoint") -> RefinementRecord:
    """Split every triangle into six around an interior point.

    ``interior_point_strategy`` is ``"centroid"``, ``"incenter"``, an explicit
    list of points (one per triangle) or ``"auto"`` (centroid, then incenter).
    ``boundary_point_strategy`` is ``"midpoint"`` or a mapping from boundary
    edge to point.  The crossing condition on every interior edge is checked
    exactly; :class:`CrossingConditionError` names the offending edge.
    """
    if interior_point_strategy == "auto":
        try:
            return _ps6_with(T, _interior_points(T, "centroid"), boundary_point_strategy)
        except CrossingConditionError as first:
            try:
                return _ps6_with(T, _interior_points(T, "incenter"), boundary_point_strategy)
            except CrossingConditionError:
                raise CrossingConditionError(f"{first}; incenters fail too, supply explicit points") from None
    return _ps6_with(T, _interior_points(T, interior_point_strategy), boundary_point_strategy)


def ps6_numbering(record: RefinementRecord) -> tuple[int, ...]:
    """Peel the parent triangles from the boundary inwards, numbering the split
    point, then the new points on its interior edges, then its interior
    corners, for each triangle in turn."""
    if record.scheme != "ps6":
        raise ValueError("ps6_numbering needs a PS-6 refinement")
    T = record.parent
    child = record.child
    open_edges = set(T.boundary_edges)
    done: set[int] = set()
    numbered: list[int] = []
    seen: set[int] = set()

    def push(v: int) -> None:
        if child.is_interior_vertex(v) and v not in seen:
            seen.add(v)
            numbered.append(v)

    while len(done) < T.f2:
        ti = next(
            t
            for t in range(T.f2)
            if t not in done and any(tuple(sorted(e)) in open_edges for e in _tri_edges(T.triangles[t]))
        )
        done.add(ti)
        a, b, c = T.triangles[ti]
        push(record.split_points[ti])
        for e in sorted(tuple(sorted(e)) for e in _tri_edges((a, b, c))):
            push(record.edge_points[e])
        for v in sorted((a, b, c)):
            push(v)
        open_edges.update(tuple(sorted(e)) for e in _tri_edges((a, b, c)))
    if sorted(numbered) != sorted(child.interior_vertices):
        raise AssertionError("PS-6 numbering does not cover the interior vertices")
    return tuple(numbered)


def _tri_edges(t):
    a, b, c = t
    return ((a, b), (b, c), (c, a))


def ps6_dimension_formula(f0: int, f0_interior: int, f1_interior: int, k: int) -> int:
    """Closed form for ``dim C^1_k`` of a PS-6 refinement, from parent counts."""
    if k < 2:
        raise ValueError("the PS-6 formula needs k >= 2")
    if k == 2:
        return 3 * f0
    return binom2(k + 2) + f1_interior * binom2(k - 2) + 2 * f0_interior * binom2(k - 1) + binom2(2 * k - 1) * (f0 - 2)


@dataclass(frozen=True)
class FormulaAudit:
    k: int
    formula: int
    oracle: int
    lower_bound: int

    @property
    def match(self) -> bool:
        return self.formula == self.oracle

    @property
    def status(self) -> str:
        return "ok" if self.match else "paper formula mismatch"


def audit_ps6_formula(parent: Triangulation, ks: Sequence[int], record: RefinementRecord | None = None) -> list[FormulaAudit]:
    """Compare the closed form with the exact dimension of the refined mesh (r = 1)."""
    from .bounds import lower_bound_hom
    from .oracle import spline_dimension

    record = record or ps6_split(parent)
    out = []
    for k in ks:
        out.append(
            FormulaAudit(
                k,
                ps6_dimension_formula(parent.f0, parent.f0_interior, parent.f1_interior, k),
                spline_dimension(record.child, 1, k),
                lower_bound_hom(record.child, 1, k),
            )
        )
    return out
