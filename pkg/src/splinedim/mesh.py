"""Planar triangulations with exact rational coordinates.

A :class:`Triangulation` is an immutable simplicial complex supported on a
topological disk.  Vertex coordinates are :class:`fractions.Fraction`
instances, so every geometric predicate used downstream (collinearity, slope
equality, orientation) is decided exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence


class MeshError(ValueError):
    """Raised for malformed or invalid mesh input."""


class Point2(NamedTuple):
    x: Fraction
    y: Fraction


Edge = tuple[int, int]
SlopeKey = tuple[int, int]


def as_fraction(value) -> Fraction:
    """Parse ``"p"``, ``"p/q"``, an int or a Fraction into a Fraction.

    Floats are refused: they would smuggle rounding into the geometry.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise MeshError(f"malformed rational literal {value!r}: floats are not accepted")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise MeshError(f"malformed rational literal {value!r}") from None
        if q == 0:
            raise MeshError(f"malformed rational literal {value!r}: zero denominator")
        return Fraction(p, q)
    raise MeshError(f"malformed rational literal {value!r}")


def format_fraction(value: Fraction) -> str:
    # Fraction always stores reduced form with a positive denominator.
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def orient(p: Point2, q: Point2, s: Point2) -> Fraction:
    """Twice the signed area of the triangle ``pqs`` (positive if counter-clockwise)."""
    return (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x)


def _primitive(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with first nonzero entry positive."""
    den = lcm(*(v.denominator for v in values))
    ints = [int(v * den) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise MeshError("zero vector has no canonical form")
    ints = [v // g for v in ints]
    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class EdgeForm:
    """Homogeneous linear form ``A x + B y + C z`` vanishing on the cone over an edge.

    Coefficients are coprime integers with the first nonzero one positive.
    """

    A: int
    B: int
    C: int

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)

    @property
    def slope_key(self) -> SlopeKey:
        return direction_key(Fraction(self.A), Fraction(self.B))

    def __call__(self, x, y, z=1) -> Fraction:
        return self.A * Fraction(x) + self.B * Fraction(y) + self.C * Fraction(z)


def direction_key(a: Fraction, b: Fraction) -> SlopeKey:
    """Canonical representative of the projective class ``(a : b)``."""
    if a == 0 and b == 0:
        raise MeshError("(A, B) = (0, 0) has no slope")
    return _primitive((Fraction(a), Fraction(b)))  # type: ignore[return-value]


def line_through(p: Point2, q: Point2) -> EdgeForm:
    # Cross product of the lifted points (x, y, 1).
    a = p.y - q.y
    b = q.x - p.x
    c = p.x * q.y - p.y * q.x
    return EdgeForm(*_primitive((a, b, c)))


@dataclass
class ValidationReport:
    """Outcome of :func:`validate_disk`.

    ``failures`` maps invariant names to human-readable details.  Pairwise
    overlap of non-adjacent triangles is not tested (see ``checks``).
    """

    failures: dict[str, str] = field(default_factory=dict)
    checks: tuple[str, ...] = (
        "nondegenerate_triangles",
        "edge_manifold",
        "connected",
        "single_boundary_cycle",
        "euler_characteristic",
        "consistent_orientation",
        "interior_vertex_edges_interior",
    )
    note: str = "global triangle-overlap testing is not performed"

    @property
    def ok(self) -> bool:
        return not self.failures

    def raise_if_invalid(self) -> None:
        if self.failures:
            detail = "; ".join(f"{k}: {v}" for k, v in self.failures.items())
            raise MeshError(f"invalid triangulation ({detail})")


class Triangulation:
    """Immutable planar triangulation.

    Parameters
    ----------
    vertices : sequence of pairs
        Vertex coordinates; each entry is converted with :func:`as_fraction`.
    triangles : sequence of index triples
        Zero-based.  Stored counter-clockwise (clockwise input is reoriented).
    validate : bool
        Run :func:`validate_disk` and raise :class:`MeshError` on failure.
    """

    def __init__(self, vertices: Iterable, triangles: Iterable, *, validate: bool = True):
        pts = []
        for v in vertices:
            if len(v) != 2:
                raise MeshError(f"vertex {v!r} does not have two coordinates")
            pts.append(Point2(as_fraction(v[0]), as_fraction(v[1])))
        seen: dict[Point2, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise MeshError(f"duplicate vertex coordinates: vertices {seen[p]} and {i}")
            seen[p] = i
        n = len(pts)
        tris = []
        for t in triangles:
            t = tuple(int(i) for i in t)
            if len(t) != 3:
                raise MeshError(f"triangle {t!r} is not a triple")
            for i in t:
                if not 0 <= i < n:
                    raise MeshError(f"triangle {t!r}: vertex index {i} out of range (0..{n - 1})")
            if len(set(t)) != 3:
                raise MeshError(f"triangle {t!r} repeats a vertex")
            a, b, c = t
            if orient(pts[a], pts[b], pts[c]) < 0:
                t = (a, c, b)
            tris.append(t)
        self._vertices: tuple[Point2, ...] = tuple(pts)
        self._triangles: tuple[tuple[int, int, int], ...] = tuple(tris)
        if validate:
            validate_disk(self).raise_if_invalid()

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple[Point2, ...]:
        return self._vertices

    @property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        return self._triangles

    def __repr__(self) -> str:
        return f"Triangulation(f0={self.f0}, f1={self.f1}, f2={self.f2}, interior_vertices={self.f0_interior})"

    # -- combinatorics ----------------------------------------------------
    @cached_property
    def edge_triangles(self) -> dict[Edge, tuple[int, ...]]:
        """Canonical edge (sorted index pair) to incident triangle indices."""
        acc: dict[Edge, list[int]] = {}
        for ti, (a, b, c) in enumerate(self._triangles):
            for u, v in ((a, b), (b, c), (c, a)):
                acc.setdefault((min(u, v), max(u, v)), []).append(ti)
        return {e: tuple(ts) for e, ts in sorted(acc.items())}

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self.edge_triangles)

    @cached_property
    def boundary_edges(self) -> frozenset[Edge]:
        return frozenset(e for e, ts in self.edge_triangles.items() if len(ts) == 1)

    @cached_property
    def interior_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, ts in self.edge_triangles.items() if len(ts) == 2)

    @cached_property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.boundary_edges for v in e)

    @cached_property
    def interior_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(len(self._vertices)) if v not in self.boundary_vertices)

    def is_interior_vertex(self, v: int) -> bool:
        return v not in self.boundary_vertices

    def is_boundary_edge(self, edge: Edge) -> bool:
        return _key(*edge) in self.boundary_edges

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[set[int]] = [set() for _ in self._vertices]
        for u, v in self.edge_triangles:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(tuple(sorted(s)) for s in nb)

    @cached_property
    def vertex_triangles(self) -> tuple[tuple[int, ...], ...]:
        acc: list[list[int]] = [[] for _ in self._vertices]
        for ti, tri in enumerate(self._triangles):
            for v in tri:
                acc[v].append(ti)
        return tuple(tuple(a) for a in acc)

    def share_triangle(self, u: int, v: int) -> bool:
        return _key(u, v) in self.edge_triangles

    # -- f-vector ---------------------------------------------------------
    @property
    def f0(self) -> int:
        return len(self._vertices)

    @property
    def f1(self) -> int:
        return len(self.edge_triangles)

    @property
    def f2(self) -> int:
        return len(self._triangles)

    @property
    def f0_boundary(self) -> int:
        return len(self.boundary_vertices)

    @property
    def f1_boundary(self) -> int:
        return len(self.boundary_edges)

    @property
    def f0_interior(self) -> int:
        return self.f0 - self.f0_boundary

    @property
    def f1_interior(self) -> int:
        return self.f1 - self.f1_boundary

    def f_vector(self) -> dict[str, int]:
        return {
            "f0": self.f0,
            "f1": self.f1,
            "f2": self.f2,
            "f0_interior": self.f0_interior,
            "f1_interior": self.f1_interior,
            "f0_boundary": self.f0_boundary,
            "f1_boundary": self.f1_boundary,
        }

    # -- geometry ---------------------------------------------------------
    def edge_form(self, edge: Edge) -> EdgeForm:
        u, v = edge
        if _key(u, v) not in self.edge_triangles:
            raise MeshError(f"({u}, {v}) is not an edge")
        return line_through(self._vertices[u], self._vertices[v])

    def slope_key(self, u: int, v: int) -> SlopeKey:
        p, q = self._vertices[u], self._vertices[v]
        return direction_key(p.y - q.y, q.x - p.x)

    @cached_property
    def slope_counts(self) -> dict[int, int]:
        return {g: len({self.slope_key(g, w) for w in self.neighbors[g]}) for g in self.interior_vertices}

    # -- transforms -------------------------------------------------------
    def transformed(self, matrix, offset=(0, 0)) -> "Triangulation":
        """Image under ``p -> matrix @ p + offset`` (must be invertible)."""
        (m00, m01), (m10, m11) = [[Fraction(c) for c in row] for row in matrix]
        if m00 * m11 - m01 * m10 == 0:
            raise MeshError("affine map is singular")
        ox, oy = Fraction(offset[0]), Fraction(offset[1])
        pts = [(m00 * p.x + m01 * p.y + ox, m10 * p.x + m11 * p.y + oy) for p in self._vertices]
        return Triangulation(pts, self._triangles)

    def relabeled(self, permutation: Sequence[int]) -> "Triangulation":
        """Vertex ``i`` of ``self`` becomes vertex ``permutation[i]`` of the result."""
        n = self.f0
        if sorted(permutation) != list(range(n)):
            raise MeshError("relabeling is not a permutation")
        pts: list = [None] * n
        for i, p in enumerate(self._vertices):
            pts[permutation[i]] = p
        tris = [tuple(permutation[v] for v in t) for t in self._triangles]
        return Triangulation(pts, tris)

    # -- serialization ----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "vertices": [[format_fraction(p.x), format_fraction(p.y)] for p in self._vertices],
            "triangles": [list(t) for t in self._triangles],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def parse_triangulation(document: str | bytes | dict, *, validate: bool = True) -> Triangulation:
    """Build a triangulation from the JSON mesh format.

    ``{"vertices": [["0", "0"], ["1/2", "3/4"], ...], "triangles": [[0, 1, 2], ...]}``
    """
    data = json.loads(document) if isinstance(document, (str, bytes)) else document
    if not isinstance(data, dict) or "vertices" not in data or "triangles" not in data:
        raise MeshError('mesh document needs "vertices" and "triangles"')
    return Triangulation(data["vertices"], data["triangles"], validate=validate)


def load_triangulation(path, *, validate: bool = True) -> Triangulation:
    with open(path, encoding="utf-8") as fh:
        return parse_triangulation(fh.read(), validate=validate)


def validate_disk(T: Triangulation) -> ValidationReport:
    """Check every disk invariant and report failures by name."""
    report = ValidationReport()
    fail = report.failures
    pts = T.vertices

    bad = [i for i, (a, b, c) in enumerate(T.triangles) if orient(pts[a], pts[b], pts[c]) == 0]
    if bad:
        fail["nondegenerate_triangles"] = f"degenerate triangle(s) {bad}"

    over = [e for e, ts in T.edge_triangles.items() if len(ts) > 2]
    if over:
        fail["edge_manifold"] = f"edges on more than two triangles: {over}"

    if not T.triangles:
        fail["connected"] = "no triangles"
        return report

    # Triangles connected through shared edges; every vertex used.
    parent = list(range(T.f2))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for ts in T.edge_triangles.values():
        for t in ts[1:]:
            parent[find(t)] = find(ts[0])
    n_components = len({find(i) for i in range(T.f2)})
    unused = [v for v in range(T.f0) if not T.vertex_triangles[v]]
    if n_components != 1 or unused:
        detail = []
        if n_components != 1:
            detail.append(f"{n_components} edge-connected components")
        if unused:
            detail.append(f"unused vertices {unused}")
        fail["connected"] = ", ".join(detail)

    # Boundary edges must form exactly one simple cycle.
    bdeg: dict[int, int] = {}
    for u, v in T.boundary_edges:
        bdeg[u] = bdeg.get(u, 0) + 1
        bdeg[v] = bdeg.get(v, 0) + 1
    pinched = sorted(v for v, d in bdeg.items() if d != 2)
    cycle_ok = bool(bdeg) and not pinched
    if cycle_ok:
        adj: dict[int, list[int]] = {v: [] for v in bdeg}
        for u, v in T.boundary_edges:
            adj[u].append(v)
            adj[v].append(u)
        start = min(adj)
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        cycle_ok = len(seen) == len(adj)
    if not cycle_ok:
        if not bdeg:
            fail["single_boundary_cycle"] = "boundary is empty"
        elif pinched:
            fail["single_boundary_cycle"] = f"boundary is not a single cycle (pinched at vertices {pinched})"
        else:
            fail["single_boundary_cycle"] = "boundary is not a single cycle (several components)"

    chi = T.f0 - T.f1 + T.f2
    if chi != 1:
        fail["euler_characteristic"] = f"V - E + F = {chi}, expected 1 (not a disk)"

    # Apexes across every interior edge lie on opposite sides.
    folded = []
    for e, ts in T.edge_triangles.items():
        if len(ts) != 2:
            continue
        u, v = e
        apexes = [next(w for w in T.triangles[t] if w not in e) for t in ts]
        s0 = orient(pts[u], pts[v], pts[apexes[0]])
        s1 = orient(pts[u], pts[v], pts[apexes[1]])
        if s0 * s1 >= 0:
            folded.append(e)
    if folded:
        fail["consistent_orientation"] = f"triangles fold over interior edges {folded}"

    # Self-check; holds by construction once the boundary cycle is valid.
    leaking: list[Edge] = []
    for g in T.interior_vertices:
        leaking.extend(_key(g, w) for w in T.neighbors[g] if _key(g, w) in T.boundary_edges)
    if leaking:
        fail["interior_vertex_edges_interior"] = f"boundary edges touching interior vertices: {sorted(set(leaking))}"
    return report


def slope_count(T: Triangulation, vertex: int) -> int:
    """Number of distinct slopes among the edges incident to an interior vertex."""
    if not 0 <= vertex < T.f0 or not T.is_interior_vertex(vertex):
        raise MeshError(f"vertex {vertex} is not an interior vertex")
    return T.slope_counts[vertex]


def edge_form(T: Triangulation, edge: Edge) -> EdgeForm:
    """Canonical linear form of ``edge`` (see :class:`EdgeForm`)."""
    return T.edge_form(edge)
