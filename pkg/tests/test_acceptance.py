"""Acceptance criteria, one test each.

Every test records a one-line verdict in ``VERDICTS``; the lines are printed
at the end of the pytest run (see ``conftest.py``) and when this file is run
directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from itertools import permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import corpus  # noqa: E402

from splinedim.bounds import lower_bound_hom, schumaker_lower, schumaker_upper, upper_bound_hom  # noqa: E402
from splinedim.meshes import fan, morgan_scott, single_triangle, two_triangles  # noqa: E402
from splinedim.oracle import (  # noqa: E402
    fatpoint_closed_form,
    fatpoint_quotient_dim,
    homology_defect,
    spline_dimension,
)
from splinedim.bounds import omega_a_b  # noqa: E402
from splinedim.ordering import (  # noqa: E402
    exactness_certificate,
    find_certified_ordering,
    find_schumaker_ordering,
    lemma_order,
    minimize_upper_bound,
    tilde_slope_counts,
)
from splinedim.refine import audit_ps6_formula, ps6_numbering, ps6_split, ps12_split  # noqa: E402

VERDICTS: dict[int, str] = {}
CORPUS_SEED = 2024


def record(n, ok, detail):
    VERDICTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    assert ok, VERDICTS[n]


@pytest.fixture(scope="module")
def random_corpus():
    return corpus(100, seed=CORPUS_SEED, n_interior=(1, 10))


def sampled_orderings(T, rng, extra=3):
    """Lemma order, the Schumaker ordering if any, and a few random ones."""
    out = [lemma_order(T)]
    found = find_schumaker_ordering(T)
    if found.ordering is not None:
        out.append(found.ordering)
    verts = list(T.interior_vertices)
    for _ in range(extra):
        rng.shuffle(verts)
        out.append(tuple(verts))
    return out


PS12_PARENT = single_triangle((0, 0), (6, 0), (3, 6))


def test_criterion_1_ps12_exactness():
    start = time.perf_counter()
    child = ps12_split(PS12_PARENT).child
    bad = []
    r1k2 = None
    for r in (1, 2):
        for k in range(r, 7):
            lbh = lower_bound_hom(child, r, k)
            ubh = minimize_upper_bound(child, r, k, strategy="exhaustive").value
            dim = spline_dimension(child, r, k)
            if not lbh == ubh == dim:
                bad.append((r, k, lbh, ubh, dim))
            if (r, k) == (1, 2):
                r1k2 = dim
    elapsed = time.perf_counter() - start
    ok = not bad and r1k2 == 12 and elapsed < 10
    record(1, ok, f"PS-12 LBH = min UBH = oracle for r in {{1,2}}, k <= 6; r=1,k=2 -> {r1k2}; {elapsed:.2f}s; mismatches {bad}")


def test_criterion_2_ps12_no_schumaker_ordering():
    child = ps12_split(PS12_PARENT).child
    start = time.perf_counter()
    res = find_schumaker_ordering(child)
    elapsed = time.perf_counter() - start
    ok = res.status == "none" and child.f0_interior == 4 and elapsed < 1
    record(2, ok, f"search status {res.status!r} over {child.f0_interior} interior vertices, {res.nodes} nodes, {elapsed:.3f}s")


def test_criterion_3_ps6_formula():
    start = time.perf_counter()
    parents = {"triangle": PS12_PARENT, "quad": two_triangles(), "fan": fan(4)}
    k2_ok = True
    notes = []
    for name, parent in parents.items():
        audits = audit_ps6_formula(parent, (2, 3, 4))
        a2 = audits[0]
        k2_ok &= a2.formula == 3 * parent.f0 == a2.oracle
        notes.append(
            f"{name}: k=2 {a2.formula}/{a2.oracle}; "
            + ", ".join(f"k={a.k} formula {a.formula} vs oracle {a.oracle} ({a.status})" for a in audits[1:])
        )
    elapsed = time.perf_counter() - start
    print("\n".join(notes))
    ok = k2_ok and elapsed < 60
    record(3, ok, f"k=2 equality {'holds' if k2_ok else 'fails'}; high-degree audit: {' | '.join(notes)}; {elapsed:.1f}s")


def test_criterion_4_bound_equivalences(random_corpus):
    failures = []
    checked_ubs = 0
    for idx, T in enumerate(random_corpus):
        search = find_schumaker_ordering(T)
        for r in range(4):
            for k in range(r, 11):
                if lower_bound_hom(T, r, k) != schumaker_lower(T, r, k):
                    failures.append(("LBH != LBS", idx, r, k))
                best = minimize_upper_bound(T, r, k).value
                if search.ordering is not None:
                    ubh = upper_bound_hom(T, search.ordering, r, k)
                    ubs = schumaker_upper(T, search.ordering, r, k)
                    checked_ubs += 1
                    if ubh != ubs:
                        failures.append(("UBH != UBS", idx, r, k))
                    if best > ubs:
                        failures.append(("min UBH > UBS", idx, r, k))
    ok = len(random_corpus) >= 100 and not failures and checked_ubs > 0
    record(4, ok, f"{len(random_corpus)} meshes, r <= 3, k <= 10; {checked_ubs} Schumaker comparisons; failures {failures[:5]}")


def test_criterion_5_sandwich(random_corpus):
    rng = random.Random(5)
    start = time.perf_counter()
    capped = [T for T in random_corpus if T.f2 <= 40]
    failures = []
    n = 0
    for idx, T in enumerate(capped):
        orders = sampled_orderings(T, rng)
        for r in range(3):
            for k in range(r, 9):
                dim = spline_dimension(T, r, k, formulation="conformality")
                lbh = lower_bound_hom(T, r, k)
                ubh = max(upper_bound_hom(T, o, r, k) for o in orders)
                low = min(upper_bound_hom(T, o, r, k) for o in orders)
                n += 1
                if not lbh <= dim <= low <= ubh:
                    failures.append((idx, r, k, lbh, dim, low))
    elapsed = time.perf_counter() - start
    ok = not failures and len(capped) >= 25
    record(5, ok, f"{len(capped)} meshes with f2 <= 40, {n} (mesh, r, k) cases, LBH <= oracle <= UBH; {elapsed:.0f}s; failures {failures[:5]}")


def test_criterion_6_high_degree_exactness(random_corpus):
    meshes = [T for T in random_corpus if T.f2 <= 40][:25]
    failures = []
    for idx, T in enumerate(meshes):
        for r, k in ((1, 5), (1, 6), (2, 9)):
            d = homology_defect(T, r, k, formulation="conformality")
            if d != 0:
                failures.append((idx, r, k, d))
    ok = len(meshes) >= 25 and not failures
    record(6, ok, f"defect 0 at (1,5), (1,6), (2,9) on {len(meshes)} meshes; failures {failures}")


def test_criterion_7_morgan_scott():
    sym = morgan_scott()
    gen = morgan_scott(perturbation=(Fraction(1, 97), Fraction(1, 89)))
    ds, dg = spline_dimension(sym, 1, 2), spline_dimension(gen, 1, 2)
    ls, lg = lower_bound_hom(sym, 1, 2), lower_bound_hom(gen, 1, 2)
    ok = (ds, dg, ls, lg) == (7, 6, 6, 6) and (ds - ls, dg - lg) == (1, 0)
    record(7, ok, f"symmetric oracle {ds}, perturbed {dg}, LBH {ls}/{lg}, defect {ds - ls}/{dg - lg}")


def test_criterion_8_fatpoint_closed_form():
    rng = random.Random(8)
    start = time.perf_counter()
    bad = []
    n = 0
    for t in range(1, 9):
        slopes = set()
        while len(slopes) < t:
            slopes.add(Fraction(rng.randint(-40, 40), rng.randint(1, 12)))
        forms = [(s, 1) for s in sorted(slopes)]
        if rng.random() < 0.5:
            forms[0] = (1, 0)  # include the vertical direction sometimes
        for r in range(5):
            omega = omega_a_b(t, r).omega
            for k in range(r, 2 * omega + 4):
                n += 1
                if fatpoint_quotient_dim(forms, r, k) != fatpoint_closed_form(t, r, k):
                    bad.append((t, r, k))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(8, ok, f"{n} (t, r, k) cases, rank oracle = closed form; {elapsed:.1f}s; mismatches {bad[:5]}")


def test_criterion_9_certificate(random_corpus):
    rng = random.Random(9)
    certified = 0
    failures = []
    for idx, T in enumerate(random_corpus):
        for r in range(4):
            orders = sampled_orderings(T, rng, extra=2)
            found = find_certified_ordering(T, r)
            if found is not None:
                orders.append(found)
            for o in orders:
                if exactness_certificate(T, o, r):
                    certified += 1
                    for k in range(r, 11):
                        if upper_bound_hom(T, o, r, k) != lower_bound_hom(T, r, k):
                            failures.append((idx, r, k, o))
    ps6_ok = []
    for parent in (PS12_PARENT, two_triangles(), fan(4), morgan_scott()):
        rec = ps6_split(parent)
        ps6_ok.append(exactness_certificate(rec.child, ps6_numbering(rec), 1))
    ok = not failures and certified > 0 and all(ps6_ok)
    record(9, ok, f"{certified} certified (mesh, ordering, r) triples all exact for k <= 10; PS-6 numbering certified for r=1 on {sum(ps6_ok)}/{len(ps6_ok)} parents; failures {failures[:3]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
