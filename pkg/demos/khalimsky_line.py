"""
The digital line
================

A window of the Khalimsky line: odd integers are open points, even
integers are closed points, and each even point sits between its two odd
neighbours.
"""

from alexspace import PointSet, khalimsky_window, serialize_space, space_predicate
from alexspace.operators import closure, consolidation, interior, open_screen
from alexspace.predicates import fenestration, set_predicate

K = khalimsky_window(-3, 3)
print(serialize_space(K))


def show(A):
    return "{" + ", ".join(K.label(x) for x in A) + "}"


def pts(*labels):
    return PointSet.of(K.n, [K.index_of(str(v)) for v in labels])


# Odd points are open, even points closed.
print("screen (open points):", show(open_screen(K)))
print("cl {1}  =", show(closure(K, pts(1))))
print("int {0,1,2} =", show(interior(K, pts(0, 1, 2))))

# An even point has empty interior of closure, so it is nowhere dense.
for v in (-2, 0, 2):
    print(f"{{{v}}} nowhere dense:", set_predicate(K, pts(v), "nowhere_dense"))

# Consolidation int(cl A) of a single closed point is empty; of an open point
# it is the point itself.
print("consolidation {0} =", show(consolidation(K, pts(0))))
print("consolidation {1} =", show(consolidation(K, pts(1))))

# The open points are dense, so the window is a trace space and the odd
# singletons form a fenestration.
print("trace space:", space_predicate(K, "trace_space"))
print("fenestration:", [show(f) for f in fenestration(K, PointSet.full(K.n))])
print("T_D:", space_predicate(K, "t_d"), " T1:", space_predicate(K, "t1"))
