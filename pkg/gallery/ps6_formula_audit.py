"""
Auditing the PS-6 closed form
=============================

For the six-split, C^1 quadratics have dimension 3 f0 (three nodal values per
parent vertex).  The closed form for higher degree is compared here with the
exact dimension of the refined mesh.  The two agree at k = 2 and the higher
branch undercounts, which is why reports flag it instead of trusting it.
"""

from splinedim.meshes import fan, single_triangle, two_triangles
from splinedim.ordering import exactness_certificate
from splinedim.refine import audit_ps6_formula, ps6_numbering, ps6_split

parents = {
    "triangle": single_triangle((0, 0), (6, 0), (3, 6)),
    "quad": two_triangles(),
    "4-fan": fan(4),
}

for name, parent in parents.items():
    rec = ps6_split(parent)
    cert = exactness_certificate(rec.child, ps6_numbering(rec), 1)
    print(f"{name}: f0={parent.f0}, refined f2={rec.child.f2}, certificate (r=1): {cert}")
    for audit in audit_ps6_formula(parent, (2, 3, 4, 5), rec):
        print(f"  k={audit.k}: formula {audit.formula:>4}  exact {audit.oracle:>4}  lower bound {audit.lower_bound:>4}  {audit.status}")
