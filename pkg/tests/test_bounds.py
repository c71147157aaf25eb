from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from splinedim.bounds import (
    SchumakerOrderingError,
    binom2,
    lower_bound_hom,
    omega_a_b,
    schumaker_lower,
    schumaker_upper,
    upper_bound_hom,
    vertex_term_hom,
    vertex_term_sch,
)
from splinedim.meshes import fan, generic_fan, grid, morgan_scott, random_disk, single_triangle, two_triangles
from splinedim.oracle import fatpoint_closed_form, fatpoint_quotient_dim
from splinedim.ordering import is_schumaker_ordering


def test_binom2_convention():
    assert [binom2(n) for n in range(-2, 6)] == [0, 0, 0, 0, 1, 3, 6, 10]


@pytest.mark.parametrize(
    "t, r, expected",
    [
        (0, 1, (0, 0, 0)),
        (1, 3, (0, 0, 0)),
        (2, 1, (3, 1, 0)),  # omega = 2*1/1 + 1
        (3, 1, (2, 2, 0)),
        (4, 1, (2, 2, 1)),
        (3, 2, (4, 1, 1)),
        (5, 2, (3, 3, 1)),
    ],
)
def test_omega_a_b_frozen(t, r, expected):
    v = omega_a_b(t, r)
    assert (v.omega, v.a, v.b) == expected


def test_vertex_term_frozen_values():
    # t = 2, r = 1: the ideal (x^2, y^2) has dimension 2, 6, 11 in degrees 2, 3, 4
    # as a subspace of the trivariate forms (x^2 y^2 is counted once).
    assert [vertex_term_hom(2, 1, k) for k in (1, 2, 3, 4)] == [0, 2, 6, 11]
    assert [vertex_term_hom(3, 1, k) for k in (1, 2, 3, 4)] == [0, 3, 7, 12]


@pytest.mark.parametrize("r", range(6))
def test_vertex_terms_agree_on_grid(r):
    for t in range(1, 13):
        for k in range(r, 21):
            assert vertex_term_hom(t, r, k) == vertex_term_sch(t, r, k), (t, r, k)


def test_vertex_term_is_ideal_dimension():
    # Independent route: dim R_k minus the rank-computed quotient.
    slopes = [(1, 0), (0, 1), (1, 1), (1, -2), (3, 1)]
    for t in range(1, 6):
        for r in range(3):
            for k in range(r, r + 5):
                assert vertex_term_hom(t, r, k) == binom2(k + 2) - fatpoint_quotient_dim(slopes[:t], r, k)


def test_closed_form_matches_rank_small():
    assert fatpoint_closed_form(2, 1, 2) == fatpoint_quotient_dim([(1, 0), (0, 1)], 1, 2) == 4
    assert fatpoint_closed_form(3, 1, 2) == fatpoint_quotient_dim([(1, 0), (0, 1), (1, 1)], 1, 2) == 3


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 11), st.integers(0, 5), st.integers(0, 15))
def test_vertex_term_monotone_in_t(t, r, dk):
    k = r + dk
    assert vertex_term_hom(t + 1, r, k) >= vertex_term_hom(t, r, k)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 5), st.integers(0, 10), st.integers(0, 10))
def test_vertex_term_saturates_after_r_plus_two(r, dk, extra):
    k = r + dk
    assert vertex_term_hom(r + 2 + extra, r, k) == vertex_term_hom(r + 2, r, k)


def test_frozen_mesh_values():
    # No interior edges: polynomials only.
    assert lower_bound_hom(single_triangle(), 1, 3) == 10
    # One interior edge, r = 1, k = 2: 6 + binom2(2), no interior vertex.
    assert lower_bound_hom(two_triangles(), 1, 2) == 7
    assert lower_bound_hom(morgan_scott(), 1, 2) == 6
    # Grid, r = 1, k = 2: one vertex with three slopes.
    assert lower_bound_hom(grid(2, 2), 1, 2) == 6 + 8 * 1 - 3


def test_lbh_equals_lbs_on_named_meshes():
    for T in (fan(4), fan(5), generic_fan(6), grid(3, 2), morgan_scott()):
        for r in range(4):
            for k in range(r, 11):
                assert lower_bound_hom(T, r, k) == schumaker_lower(T, r, k)


def test_upper_equals_lower_for_cells():
    # A single interior vertex has tilde_t = t under the only ordering.
    T = generic_fan(5)
    for r in range(3):
        for k in range(r, 9):
            assert upper_bound_hom(T, (0,), r, k) == lower_bound_hom(T, r, k)


def test_schumaker_upper_rejects_invalid_order():
    T = grid(3, 3)
    bad = next(p for p in permutations(T.interior_vertices) if not is_schumaker_ordering(T, p))
    with pytest.raises(SchumakerOrderingError, match="share no triangle|no Schumaker"):
        schumaker_upper(T, bad, 1, 3)


def test_ubh_equals_ubs_on_valid_orders():
    T = grid(3, 3)
    for p in permutations(T.interior_vertices):
        if is_schumaker_ordering(T, p):
            for r in range(3):
                for k in range(r, 8):
                    assert upper_bound_hom(T, p, r, k) == schumaker_upper(T, p, r, k)


def test_bad_r_k_rejected():
    with pytest.raises(ValueError):
        lower_bound_hom(fan(4), 3, 2)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 3), st.integers(0, 6))
def test_every_ordering_bounds_from_above(seed, r, dk):
    T = random_disk(seed, n_interior=(1, 5))
    k = r + dk
    lbh = lower_bound_hom(T, r, k)
    for p in list(permutations(T.interior_vertices))[:30]:
        assert upper_bound_hom(T, p, r, k) >= lbh
