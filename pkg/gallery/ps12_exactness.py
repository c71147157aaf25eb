"""
PS-12 split of a single triangle
================================

The twelve-split of a triangle has four interior vertices: the centroid,
which sees three slopes, and the three medial points, which see two.  The
lower and upper bounds coincide in every degree, so the bounds alone give
the exact dimension.  No ordering of the interior vertices has consecutive
vertices sharing a triangle, so the older upper bound is not available here.
"""

from splinedim.bounds import lower_bound_hom
from splinedim.meshes import single_triangle
from splinedim.oracle import spline_dimension
from splinedim.ordering import find_schumaker_ordering, minimize_upper_bound
from splinedim.refine import ps12_split

parent = single_triangle((0, 0), (6, 0), (3, 6))
child = ps12_split(parent).child
print("f-vector:", child.f_vector())
print("slope counts:", child.slope_counts)

print(f"{'r':>2} {'k':>2} {'LBH':>5} {'UBH':>5} {'dim':>5}")
for r in (1, 2):
    for k in range(r, 7):
        best = minimize_upper_bound(child, r, k)
        print(f"{r:>2} {k:>2} {lower_bound_hom(child, r, k):>5} {best.value:>5} {spline_dimension(child, r, k):>5}")

search = find_schumaker_ordering(child)
print("ordering with consecutive vertices in a common triangle:", search.status)
