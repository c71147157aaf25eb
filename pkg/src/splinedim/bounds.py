"""Closed-form lower and upper bounds on ``dim C^r_k``.

Two families are implemented side by side and kept independent:

* the homological bounds, built from the per-vertex invariants
  ``(t, Omega, a, b)`` of the ideal generated by the ``(r+1)``-st powers of
  ``t`` distinct linear forms through a point;
* Schumaker's bounds, built from truncated sums ``(r + j + 1 - j t)_+``.

Binomial convention: ``binom2(n) = n (n - 1) / 2`` for ``n >= 2`` and 0
otherwise, used everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .mesh import Triangulation

if TYPE_CHECKING:
    from .ordering import OrderedStats


def binom2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


@dataclass(frozen=True)
class VertexTerm:
    """Invariants of one interior vertex seen through ``t`` distinct slopes."""

    t: int
    omega: int
    a: int
    b: int


def omega_a_b(t: int, r: int) -> VertexTerm:
    """Socle degree plus one and the Betti multiplicities for ``t`` slopes.

    ``Omega = floor(t r / (t - 1)) + 1``, ``a = t (r + 1) + (1 - t) Omega`` and
    ``b = t - 1 - a``; all three vanish when ``t <= 1``.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if t <= 1:
        return VertexTerm(max(t, 0), 0, 0, 0)
    omega = (t * r) // (t - 1) + 1
    a = t * (r + 1) + (1 - t) * omega
    return VertexTerm(t, omega, a, t - 1 - a)


def vertex_term_hom(t: int, r: int, k: int) -> int:
    """Contribution of a vertex with ``t`` slopes, homological form.

    ``t binom2(k+1-r) - b binom2(k+2-Omega) - a binom2(k+1-Omega)``.  A vertex
    with no admissible edge at all (``t == 0``) contributes nothing.
    """
    if t <= 0:
        return 0
    v = omega_a_b(t, r)
    return t * binom2(k + 1 - r) - v.b * binom2(k + 2 - v.omega) - v.a * binom2(k + 1 - v.omega)


def vertex_term_sch(t: int, r: int, k: int) -> int:
    """Same contribution written as ``binom2(k+2) - binom2(r+2) - sum_j (r+j+1-jt)_+``."""
    return binom2(k + 2) - binom2(r + 2) - sum(max(r + j + 1 - j * t, 0) for j in range(1, k - r + 1))


def _check_rk(r: int, k: int) -> None:
    if r < 0 or k < r:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")


def _base(T: Triangulation, r: int, k: int) -> int:
    return binom2(k + 2) + T.f1_interior * binom2(k + 1 - r)


def lower_bound_hom(T: Triangulation, r: int, k: int) -> int:
    """Homological lower bound (LBH) from the full slope counts."""
    _check_rk(r, k)
    return _base(T, r, k) - sum(vertex_term_hom(t, r, k) for t in T.slope_counts.values())


def upper_bound_from_counts(T: Triangulation, tilde_t: Sequence[int], r: int, k: int) -> int:
    _check_rk(r, k)
    return _base(T, r, k) - sum(vertex_term_hom(t, r, k) for t in tilde_t)


def upper_bound_hom(T: Triangulation, ordering: "OrderedStats | Sequence[int]", r: int, k: int) -> int:
    """Homological upper bound (UBH) for an arbitrary interior-vertex ordering."""
    from .ordering import OrderedStats, tilde_slope_counts

    stats = ordering if isinstance(ordering, OrderedStats) else tilde_slope_counts(T, ordering)
    return upper_bound_from_counts(T, stats.tilde_t, r, k)


def _schumaker(T: Triangulation, counts: Sequence[int], r: int, k: int) -> int:
    # Written in the original expanded form, not via vertex_term_sch, to keep
    # the two families of formulas independent.
    total = binom2(k + 2) + T.f1_interior * binom2(k - r + 1)
    total -= len(counts) * (binom2(k + 2) - binom2(r + 2))
    for t in counts:
        total += sum(max(r + j + 1 - j * t, 0) for j in range(1, k - r + 1))
    return total


def schumaker_lower(T: Triangulation, r: int, k: int) -> int:
    """Schumaker's lower bound (LBS): his upper formula evaluated at the full counts."""
    _check_rk(r, k)
    return _schumaker(T, list(T.slope_counts.values()), r, k)


class SchumakerOrderingError(ValueError):
    """The ordering violates the consecutive-vertices-share-a-triangle hypothesis."""


def schumaker_upper(T: Triangulation, ordering: "OrderedStats | Sequence[int]", r: int, k: int) -> int:
    """Schumaker's upper bound (UBS); only defined for Schumaker-valid orderings."""
    from .ordering import OrderedStats, find_schumaker_ordering, is_schumaker_ordering, tilde_slope_counts

    _check_rk(r, k)
    stats = ordering if isinstance(ordering, OrderedStats) else tilde_slope_counts(T, ordering)
    if not is_schumaker_ordering(T, stats.ordering):
        search = find_schumaker_ordering(T)
        if search.status == "none":
            raise SchumakerOrderingError("no Schumaker-valid ordering exists for this triangulation")
        pair = next(
            (u, v) for u, v in zip(stats.ordering, stats.ordering[1:]) if not T.share_triangle(u, v)
        )
        raise SchumakerOrderingError(
            f"ordering is not Schumaker-valid: consecutive vertices {pair} share no triangle"
        )
    return _schumaker(T, stats.tilde_t, r, k)
