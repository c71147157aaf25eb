"""
Choosing an ordering of interior vertices
=========================================

The upper bound depends on the order in which interior vertices are
visited: each vertex only counts slopes towards the boundary and towards
earlier vertices.  On a random lattice mesh we compare the exact minimum,
the greedy search and a few random orders, and look for an ordering that
certifies the lower bound is the dimension.
"""

import random

from splinedim.bounds import lower_bound_hom, upper_bound_hom
from splinedim.meshes import random_disk
from splinedim.ordering import find_certified_ordering, minimize_upper_bound

rng = random.Random(3)
T = random_disk(rng, n_interior=(7, 9))
r, k = 1, 3
print("f-vector:", T.f_vector())
print("LBH:", lower_bound_hom(T, r, k))

exact = minimize_upper_bound(T, r, k, strategy="exhaustive")
greedy = minimize_upper_bound(T, r, k, 2000, strategy="greedy", seed=0)
print("exhaustive:", exact.value, exact.ordering)
print("greedy:    ", greedy.value, greedy.ordering)

verts = list(T.interior_vertices)
for _ in range(3):
    rng.shuffle(verts)
    print("random:    ", upper_bound_hom(T, verts, r, k), tuple(verts))

for rr in range(3):
    order = find_certified_ordering(T, rr)
    print(f"r={rr}: certified ordering", order if order is not None else "none")
