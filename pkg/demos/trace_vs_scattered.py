"""
Alpha-scattered but not scattered
=================================

Three points, two of which cannot be told apart.  The whole space is
alpha-scattered (its isolated points are dense) yet it is not scattered:
the indistinguishable pair has no isolated point.
"""

from alexspace import PointSet, Space, is_alpha_scattered, is_scattered, parse_pred_expr, search
from alexspace.enumeration import is_homeomorphic

trap = Space.from_masks([0b111, 0b111, 0b100])
X = PointSet.full(3)
print("alpha-scattered:", is_alpha_scattered(trap, X))
print("scattered (ok, rank):", is_scattered(trap, X))
print("{0,1} scattered:", is_scattered(trap, PointSet.of(3, [0, 1])))

# Exhaustive search confirms this is the smallest kind of counterexample.
res = search(3, parse_pred_expr("alpha_scattered"), parse_pred_expr("scattered"), canonical=True)
for S, A in res.witnesses:
    print(S, "subset", A, "homeomorphic to trap:", is_homeomorphic(S, trap))

# The other direction has no counterexample on up to four points.
res = search(4, parse_pred_expr("scattered"), parse_pred_expr("alpha_scattered"))
print("scattered => alpha-scattered, counterexamples up to n=4:", len(res.witnesses),
      f"({res.substantive} substantive instances)")

# In a space that is not T0 the scattered sets are not closed under unions.
from alexspace.harness import check_scattered_ideal  # noqa: E402

pair = Space.from_masks([0b11, 0b11])
print(check_scattered_ideal(pair).notes[0])
