from fractions import Fraction

import pytest

from splinedim.mesh import Triangulation, validate_disk
from splinedim.meshes import fan, grid, single_triangle, two_triangles
from splinedim.oracle import spline_dimension
from splinedim.ordering import exactness_certificate, find_schumaker_ordering
from splinedim.refine import (
    CrossingConditionError,
    audit_ps6_formula,
    ps6_dimension_formula,
    ps6_numbering,
    ps6_split,
    ps12_split,
)

TRI = single_triangle((0, 0), (6, 0), (3, 6))


def test_ps12_counts():
    rec = ps12_split(TRI)
    C = rec.child
    assert validate_disk(C).ok
    assert C.f_vector()["f2"] == 12 and C.f0 == 10 and C.f0_interior == 4
    assert sorted(C.slope_counts.values()) == [2, 2, 2, 3]
    assert rec.parent_of_triangle == (0,) * 12
    # Parent vertices keep their indices.
    assert C.vertices[:3] == TRI.vertices


def test_ps12_quadratic_dimension_is_twelve():
    # Nodal values and gradients at the corners plus three edge normal derivatives.
    assert spline_dimension(ps12_split(TRI).child, 1, 2) == 12


def test_ps12_shares_edge_midpoints():
    rec = ps12_split(two_triangles())
    assert rec.child.f2 == 24
    assert len(rec.edge_points) == two_triangles().f1
    assert validate_disk(rec.child).ok


@pytest.mark.parametrize("parent", [TRI, two_triangles(), fan(4)])
def test_ps6_quadratic_dimension_is_three_per_vertex(parent):
    rec = ps6_split(parent)
    assert validate_disk(rec.child).ok
    assert rec.child.f2 == 6 * parent.f2
    assert spline_dimension(rec.child, 1, 2) == 3 * parent.f0 == ps6_dimension_formula(
        parent.f0, parent.f0_interior, parent.f1_interior, 2
    )


def test_ps6_split_points_lie_on_parent_edges():
    parent = fan(4)
    rec = ps6_split(parent)
    for (u, v), m in rec.edge_points.items():
        p, q, x = parent.vertices[u], parent.vertices[v], rec.child.vertices[m]
        assert (q.x - p.x) * (x.y - p.y) == (q.y - p.y) * (x.x - p.x)


def test_ps6_numbering_certifies_r1():
    for parent in (TRI, two_triangles(), fan(4), grid(2, 2)):
        rec = ps6_split(parent)
        order = ps6_numbering(rec)
        assert sorted(order) == sorted(rec.child.interior_vertices)
        assert exactness_certificate(rec.child, order, 1)


def test_crossing_condition_failure_is_named():
    # Obtuse pair sharing the edge (0,0)-(4,0).  Split points far to the left
    # above and low near the left corner below cross the line y = 0 at
    # x = -49/25, outside the shared edge.
    T = Triangulation([(0, 0), (4, 0), (-4, 1), (1, -4)], [(0, 1, 2), (0, 1, 3)])
    ps6_split(T, "centroid")
    bad = [(-3, Fraction(13, 16)), (Fraction(3, 5), -2)]
    with pytest.raises(CrossingConditionError, match=r"edge \(0, 1\)"):
        ps6_split(T, bad)


def test_explicit_points_must_be_interior():
    with pytest.raises(Exception, match="not strictly inside"):
        ps6_split(TRI, [(0, 0)])


def test_formula_rejects_low_degree():
    with pytest.raises(ValueError):
        ps6_dimension_formula(3, 0, 0, 1)


def test_audit_reports_high_degree_mismatch():
    audits = audit_ps6_formula(TRI, (2, 3))
    assert audits[0].status == "ok"
    assert audits[1].oracle == 21
    assert audits[1].formula == 20
    assert audits[1].status == "paper formula mismatch"


def test_ps12_has_no_schumaker_ordering():
    assert find_schumaker_ordering(ps12_split(TRI).child).status == "none"
