"""
Following the witness construction
==================================

For an alpha-scattered set A with nonempty consolidation U = int(cl A),
pick an isolated point x of A inside U and intersect U with the minimal
neighbourhood V of x.  W = U & V is a nonempty open set meeting A only at x.
"""

from alexspace import PointSet, enumerate_topologies, khalimsky_window, theorem1_witness
from alexspace.harness import witness_report

K = khalimsky_window(0, 4)
A = PointSet.of(K.n, [K.index_of("1"), K.index_of("2"), K.index_of("3")])
w = theorem1_witness(K, A)
lab = lambda S: "{" + ",".join(K.label(x) for x in S) + "}"  # noqa: E731
print("A =", lab(w.A), " U =", lab(w.U), " x =", K.label(w.x), " V =", lab(w.V), " W =", lab(w.W))
print("violations:", w.violations(K))

# Run it over every labelled space on four points.
total = 0
for S in enumerate_topologies(4):
    rep = witness_report(S)
    assert rep.ok
    total += rep.substantive_passes
print("witnesses built on 4 points:", total)
