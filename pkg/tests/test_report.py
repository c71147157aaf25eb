import json

from splinedim.meshes import grid, morgan_scott, random_disk
from splinedim.refine import ps12_split
from splinedim.meshes import single_triangle
from splinedim.report import bound_report


def test_report_fields_on_morgan_scott():
    rep = bound_report(morgan_scott(), 1, 2, oracle=True)
    assert rep.lbh == rep.lbs == 6
    assert rep.oracle_dim == 7 and rep.homology_defect == 1
    assert rep.best_ubh == 7
    assert rep.schumaker_status == "found" and rep.ubs_schumaker == 7
    assert not rep.exactness_certified
    json.dumps(rep.to_dict())


def test_report_without_schumaker_ordering():
    child = ps12_split(single_triangle((0, 0), (6, 0), (3, 6))).child
    rep = bound_report(child, 1, 2, oracle=True)
    assert rep.schumaker_status == "none" and rep.ubs_schumaker is None
    assert rep.lbh == rep.best_ubh == rep.oracle_dim == 12
    assert rep.exactness_certified


def test_report_is_deterministic():
    T = random_disk(17, n_interior=(4, 8))
    a = bound_report(T, 2, 6, seed=3).to_dict()
    b = bound_report(T, 2, 6, seed=3).to_dict()
    assert a == b


def test_supplied_ordering_is_used():
    T = grid(3, 3)
    rep = bound_report(T, 1, 3, ordering=(10, 9, 5, 6))
    assert rep.ordering == (10, 9, 5, 6)
    assert rep.ubs_for_ordering == rep.ubh_for_ordering
    # (1, 2) and (2, 1) lie across the anti-diagonal: not Schumaker-valid.
    rep = bound_report(T, 1, 3, ordering=(10, 9, 6, 5))
    assert rep.ubs_for_ordering is None and rep.ubh_for_ordering is not None
