"""Per-degree bound reports with built-in consistency checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .bounds import binom2, lower_bound_hom, schumaker_lower, schumaker_upper, upper_bound_hom
from .mesh import Triangulation
from .oracle import spline_dimension
from .ordering import (
    InternalInconsistencyError,
    SchumakerSearch,
    exactness_certificate,
    find_schumaker_ordering,
    is_schumaker_ordering,
    minimize_upper_bound,
    tilde_slope_counts,
)


@dataclass(frozen=True)
class BoundReport:
    """Everything known about ``dim C^r_k`` for one mesh and degree.

    ``ordering`` is the ordering behind ``ubh_for_ordering`` (supplied by the
    caller, or the best one found); ``ubs_for_ordering`` is set only when that
    ordering is Schumaker-valid.  ``polynomial_floor`` is the trivial bound
    ``binom2(k + 2)``, kept apart from the raw bound values.
    """

    r: int
    k: int
    lbh: int
    lbs: int
    ordering: tuple[int, ...]
    ubh_for_ordering: int | None
    ubs_for_ordering: int | None
    best_ubh: int | None
    best_ordering: tuple[int, ...] | None
    schumaker_ordering: tuple[int, ...] | None
    schumaker_status: str
    ubs_schumaker: int | None
    oracle_dim: int | None
    homology_defect: int | None
    exactness_certified: bool
    zero_tilde_vertices: tuple[int, ...]
    polynomial_floor: int

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("ordering", "best_ordering", "schumaker_ordering", "zero_tilde_vertices"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d


def bound_report(
    T: Triangulation,
    r: int,
    k: int,
    *,
    ordering: Sequence[int] | None = None,
    strategy: str = "auto",
    oracle: bool = False,
    formulation: str = "assembled",
    budget: int = 20_000,
    seed: int | None = None,
    schumaker: SchumakerSearch | None = None,
) -> BoundReport:
    """Evaluate every bound at ``(r, k)`` and check the relations between them.

    Raises :class:`InternalInconsistencyError` if LBH != LBS, if UBH != UBS on
    a Schumaker-valid ordering, if the best UBH exceeds UBS, or (with
    ``oracle``) if the exact dimension leaves ``[LBH, UBH]``.
    """
    lbh = lower_bound_hom(T, r, k)
    lbs = schumaker_lower(T, r, k)
    if lbh != lbs:
        raise InternalInconsistencyError(f"LBH={lbh} != LBS={lbs} at r={r}, k={k}")

    best = minimize_upper_bound(T, r, k, budget, strategy=strategy, seed=seed) if strategy != "none" else None
    order = tuple(ordering) if ordering is not None else (best.ordering if best else tuple(T.interior_vertices))
    stats = tilde_slope_counts(T, order)
    ubh = upper_bound_hom(T, stats, r, k)
    ubs = schumaker_upper(T, stats, r, k) if is_schumaker_ordering(T, order) else None
    if ubs is not None and ubs != ubh:
        raise InternalInconsistencyError(f"UBH={ubh} != UBS={ubs} on a Schumaker-valid ordering")

    best_value = best.value if best else None
    best_order = best.ordering if best else None
    search = schumaker if schumaker is not None else find_schumaker_ordering(T)
    ubs_s = None
    if search.ordering is not None:
        ubs_s = schumaker_upper(T, search.ordering, r, k)
        if ubs_s != upper_bound_hom(T, search.ordering, r, k):
            raise InternalInconsistencyError("UBH != UBS on the Schumaker ordering")
        if best_value is not None and best_value > ubs_s:
            if best.strategy == "exhaustive":
                raise InternalInconsistencyError("minimal UBH exceeds UBS")
            best_value, best_order = ubs_s, search.ordering

    for value in (ubh, best_value):
        if value is not None and value < lbh:
            raise InternalInconsistencyError(f"upper bound {value} below lower bound {lbh}")

    dim = defect = None
    if oracle:
        dim = spline_dimension(T, r, k, formulation=formulation)
        defect = dim - lbh
        if defect < 0 or dim > ubh or (best_value is not None and dim > best_value):
            raise InternalInconsistencyError(f"dimension {dim} outside [{lbh}, {ubh}] at r={r}, k={k}")

    return BoundReport(
        r=r,
        k=k,
        lbh=lbh,
        lbs=lbs,
        ordering=order,
        ubh_for_ordering=ubh,
        ubs_for_ordering=ubs,
        best_ubh=best_value,
        best_ordering=best_order,
        schumaker_ordering=search.ordering,
        schumaker_status=search.status,
        ubs_schumaker=ubs_s,
        oracle_dim=dim,
        homology_defect=defect,
        exactness_certified=exactness_certificate(T, stats, r),
        zero_tilde_vertices=stats.zero_vertices,
        polynomial_floor=binom2(k + 2),
    )
