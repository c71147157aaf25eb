"""
Geometry changes the dimension
==============================

The Morgan-Scott triangulation has the same combinatorics and slope counts
whether or not it is symmetric, so every bound built from those counts is
the same.  The true dimension of C^1 quadratics is 7 in the symmetric
position and drops to 6 after a small perturbation.
"""

from fractions import Fraction

from splinedim.meshes import morgan_scott
from splinedim.report import bound_report

for label, mesh in (
    ("symmetric", morgan_scott()),
    ("perturbed", morgan_scott(perturbation=(Fraction(1, 97), Fraction(1, 89)))),
):
    rep = bound_report(mesh, 1, 2, oracle=True)
    print(f"{label:>9}: LBH={rep.lbh} best UBH={rep.best_ubh} dim={rep.oracle_dim} defect={rep.homology_defect}")
