"""Interior-vertex orderings: counts, validity, search and certificates."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import count
from typing import Sequence

from .bounds import binom2, lower_bound_hom, upper_bound_from_counts, vertex_term_hom
from .mesh import Edge, Triangulation


class OrderingError(ValueError):
    pass


class InternalInconsistencyError(RuntimeError):
    """A property guaranteed by theory failed at runtime; indicates a bug."""


@dataclass(frozen=True)
class OrderedStats:
    """Reduced slope counts for one ordering.

    ``tilde_edges[i]`` holds the edges from ``ordering[i]`` to a boundary
    vertex or to an earlier interior vertex, ``tilde_t[i]`` the number of
    distinct slopes among them and ``t[i]`` the full slope count.
    """

    ordering: tuple[int, ...]
    tilde_edges: tuple[frozenset[Edge], ...]
    tilde_t: tuple[int, ...]
    t: tuple[int, ...]

    @property
    def zero_vertices(self) -> tuple[int, ...]:
        """Vertices with no edge into the boundary-or-earlier set."""
        return tuple(g for g, tt in zip(self.ordering, self.tilde_t) if tt == 0)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.ordering, self.tilde_t))


def _check_permutation(T: Triangulation, ordering: Sequence[int]) -> tuple[int, ...]:
    ordering = tuple(int(v) for v in ordering)
    if sorted(ordering) != sorted(T.interior_vertices):
        raise OrderingError(
            f"ordering {list(ordering)} is not a permutation of the interior vertices {list(T.interior_vertices)}"
        )
    return ordering


def _tilde_t(T: Triangulation, g: int, known: set[int] | frozenset[int]) -> int:
    return len({T.slope_key(g, w) for w in T.neighbors[g] if w in known or not T.is_interior_vertex(w)})


def tilde_slope_counts(T: Triangulation, ordering: Sequence[int]) -> OrderedStats:
    ordering = _check_permutation(T, ordering)
    earlier: set[int] = set()
    edges, tt, full = [], [], []
    for g in ordering:
        nb = [w for w in T.neighbors[g] if w in earlier or not T.is_interior_vertex(w)]
        edges.append(frozenset((min(g, w), max(g, w)) for w in nb))
        tt.append(len({T.slope_key(g, w) for w in nb}))
        full.append(T.slope_counts[g])
        earlier.add(g)
    return OrderedStats(ordering, tuple(edges), tuple(tt), tuple(full))


def is_schumaker_ordering(T: Triangulation, ordering: Sequence[int]) -> bool:
    """Consecutive vertices of the list are corners of a common triangle."""
    return all(T.share_triangle(u, v) for u, v in zip(ordering, ordering[1:]))


@dataclass(frozen=True)
class SchumakerSearch:
    """``status`` is ``"found"``, ``"none"`` (search was exhaustive) or ``"unknown"``."""

    ordering: tuple[int, ...] | None
    status: str
    nodes: int


def find_schumaker_ordering(T: Triangulation, budget: int = 1_000_000) -> SchumakerSearch:
    """Depth-first search for a Hamiltonian path in the share-a-triangle graph.

    Exact while fewer than ``budget`` nodes are expanded; otherwise a missing
    path is reported as ``"unknown"``.
    """
    verts = T.interior_vertices
    if len(verts) <= 1:
        return SchumakerSearch(tuple(verts), "found", 0)
    vs = set(verts)
    adj = {g: [w for w in T.neighbors[g] if w in vs] for g in verts}

    # A disconnected interior graph admits no path at all.
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(verts):
        return SchumakerSearch(None, "none", 0)

    n = len(verts)
    nodes = count()
    path: list[int] = []
    used: set[int] = set()

    class _Budget(Exception):
        pass

    def dead_end() -> bool:
        # More than two unvisited vertices with no unvisited neighbour
        # reachable other than through the path end: prune.
        ones = 0
        for w in verts:
            if w in used:
                continue
            free = sum(1 for x in adj[w] if x not in used or x == path[-1])
            if free == 0:
                return True
            if free == 1:
                ones += 1
        return ones > 2

    def extend() -> bool:
        if next(nodes) >= budget:
            raise _Budget
        if len(path) == n:
            return True
        if dead_end():
            return False
        for w in adj[path[-1]]:
            if w not in used:
                path.append(w)
                used.add(w)
                if extend():
                    return True
                path.pop()
                used.discard(w)
        return False

    try:
        for s in verts:
            path[:] = [s]
            used.clear()
            used.add(s)
            if extend():
                found = tuple(path)
                assert is_schumaker_ordering(T, found)
                return SchumakerSearch(found, "found", next(nodes))
    except _Budget:
        return SchumakerSearch(None, "unknown", budget)
    return SchumakerSearch(None, "none", next(nodes))


def lemma_order(T: Triangulation) -> tuple[int, ...]:
    """Ordering in which every interior vertex already sees two distinct slopes.

    Greedy peeling: repeatedly append the lowest-index interior vertex with
    at least two distinct-slope edges into the boundary-or-ordered set.
    Adding vertices only enlarges that set, so greedy peeling succeeds
    whenever any such ordering exists and no backtracking is needed.
    """
    remaining = list(T.interior_vertices)
    known: set[int] = set()
    order: list[int] = []
    while remaining:
        pick = next((g for g in remaining if _tilde_t(T, g, known) >= 2), None)
        if pick is None:
            raise InternalInconsistencyError(
                f"no interior vertex among {remaining} sees two distinct slopes; "
                "the triangulation contradicts the ordering lemma"
            )
        remaining.remove(pick)
        known.add(pick)
        order.append(pick)
    stats = tilde_slope_counts(T, order)
    if min(stats.tilde_t, default=2) < 2:
        raise InternalInconsistencyError(f"lemma ordering {order} has a vertex with fewer than two slopes")
    return tuple(order)


@dataclass(frozen=True)
class OrderingResult:
    ordering: tuple[int, ...]
    value: int
    strategy: str
    evaluations: int


def _gains(T: Triangulation, r: int, k: int):
    cache: dict[tuple[int, frozenset[int]], int] = {}

    def gain(g: int, known: frozenset[int]) -> int:
        key = (g, known & frozenset(T.neighbors[g]))
        if key not in cache:
            cache[key] = vertex_term_hom(_tilde_t(T, g, key[1]), r, k)
        return cache[key]

    return gain


def _exhaustive(T: Triangulation, r: int, k: int) -> OrderingResult:
    # The reduced count of a vertex depends only on the *set* of vertices
    # before it, so a dynamic program over subsets covers all permutations.
    verts = T.interior_vertices
    n = len(verts)
    gain = _gains(T, r, k)
    full = (1 << n) - 1
    best = [0] * (1 << n)
    for mask in range(full - 1, -1, -1):
        known = frozenset(verts[i] for i in range(n) if mask >> i & 1)
        best[mask] = max(
            gain(verts[i], known) + best[mask | 1 << i] for i in range(n) if not mask >> i & 1
        )
    order, mask = [], 0
    while mask != full:
        known = frozenset(verts[i] for i in range(n) if mask >> i & 1)
        for i in range(n):  # lowest vertex index wins ties
            if not mask >> i & 1 and gain(verts[i], known) + best[mask | 1 << i] == best[mask]:
                order.append(verts[i])
                mask |= 1 << i
                break
    value = binom2(k + 2) + T.f1_interior * binom2(k + 1 - r) - best[0]
    return OrderingResult(tuple(order), value, "exhaustive", 1 << n)


def _value(T: Triangulation, order: Sequence[int], r: int, k: int) -> int:
    return upper_bound_from_counts(T, tilde_slope_counts(T, order).tilde_t, r, k)


def _greedy(T: Triangulation, r: int, k: int, budget: int, seed: int | None) -> OrderingResult:
    gain = _gains(T, r, k)
    remaining = list(T.interior_vertices)
    known: set[int] = set()
    order: list[int] = []
    while remaining:
        fk = frozenset(known)
        pick = max(remaining, key=lambda g: (gain(g, fk), -g))
        remaining.remove(pick)
        known.add(pick)
        order.append(pick)
    evals = 0

    def climb(start: list[int]) -> tuple[list[int], int]:
        nonlocal evals
        cur = list(start)
        cur_val = _value(T, cur, r, k)
        evals += 1
        improved = True
        while improved and evals < budget:
            improved = False
            for i in range(len(cur)):
                for j in range(i + 1, len(cur)):
                    if evals >= budget:
                        return cur, cur_val
                    cand = cur[:]
                    cand[i], cand[j] = cand[j], cand[i]
                    val = _value(T, cand, r, k)
                    evals += 1
                    if val < cur_val:
                        cur, cur_val, improved = cand, val, True
        return cur, cur_val

    best, best_val = climb(order)
    if seed is not None:
        rng = random.Random(seed)
        while evals < budget:
            start = list(T.interior_vertices)
            rng.shuffle(start)
            cand, val = climb(start)
            if val < best_val or (val == best_val and cand < best):
                best, best_val = cand, val
    return OrderingResult(tuple(best), best_val, "greedy", evals)


def minimize_upper_bound(
    T: Triangulation,
    r: int,
    k: int,
    budget: int = 20_000,
    *,
    strategy: str = "auto",
    exhaustive_limit: int = 12,
    seed: int | None = None,
) -> OrderingResult:
    """Ordering minimizing the homological upper bound.

    ``strategy="exhaustive"`` is exact; ``"greedy"`` appends the vertex with
    the largest marginal vertex term and then hill-climbs over pairwise
    swaps until ``budget`` evaluations are spent (with seeded random restarts
    when ``seed`` is given).  ``"auto"`` is exhaustive up to
    ``exhaustive_limit`` interior vertices.
    """
    if r < 0 or k < r:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    if strategy == "auto":
        strategy = "exhaustive" if T.f0_interior <= exhaustive_limit else "greedy"
    if strategy == "exhaustive":
        res = _exhaustive(T, r, k)
    elif strategy == "greedy":
        res = _greedy(T, r, k, budget, seed)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if res.value != _value(T, res.ordering, r, k):
        raise InternalInconsistencyError("search value disagrees with upper_bound_hom of its ordering")
    return res


def exactness_certificate(T: Triangulation, ordering: Sequence[int] | OrderedStats, r: int) -> bool:
    """True iff every vertex has ``tilde_t == t`` or ``tilde_t >= r + 2``.

    The vertex term stops depending on the slope count once ``t >= r + 2``
    (then ``Omega = a = r + 1``), so under this condition the upper and lower
    bounds agree in every degree.  ``tilde_t == r + 1 < t`` is not enough:
    the Morgan-Scott mesh with ``r = 1`` is a counterexample.  Agreement is
    re-checked for ``r <= k <= 4r + 3`` and a failure raises
    :class:`InternalInconsistencyError`.
    """
    stats = ordering if isinstance(ordering, OrderedStats) else tilde_slope_counts(T, ordering)
    ok = all(tt == t or tt >= r + 2 for tt, t in zip(stats.tilde_t, stats.t))
    if ok:
        for k in range(r, 4 * r + 4):
            if upper_bound_from_counts(T, stats.tilde_t, r, k) != lower_bound_hom(T, r, k):
                raise InternalInconsistencyError(f"certificate holds but UBH != LBH at r={r}, k={k}")
    return ok


def find_certified_ordering(T: Triangulation, r: int) -> tuple[int, ...] | None:
    """An ordering passing :func:`exactness_certificate`, or None if none exists.

    The per-vertex test ``tilde_t >= min(t, r + 2)`` only gets easier as
    more vertices precede a vertex, so greedy peeling (lowest index first)
    finds such an ordering whenever one exists.
    """
    remaining = list(T.interior_vertices)
    known: set[int] = set()
    order: list[int] = []
    while remaining:
        pick = next(
            (g for g in remaining if _tilde_t(T, g, known) >= min(T.slope_counts[g], r + 2)),
            None,
        )
        if pick is None:
            return None
        remaining.remove(pick)
        known.add(pick)
        order.append(pick)
    return tuple(order)
