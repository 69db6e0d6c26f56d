"""
Counting finite topologies
==========================

Every topology on a finite set is determined by the minimal open
neighbourhood of each point.  Streaming them row by row gives the labelled
counts; canonical forms quotient by relabelling.
"""

import time

from alexspace import EnumerationStream, count_topologies, serialize_space
from alexspace.enumeration import first_rows

for n in range(6):
    t = time.perf_counter()
    labelled, classes = count_topologies(n)
    print(f"n={n}: {labelled:5d} labelled, {classes:3d} up to homeomorphism "
          f"({time.perf_counter() - t:.2f}s)")

# The stream can be split by first row and resumed after any table.
print("first rows on 3 points:", [bin(r) for r in first_rows(3)])
stream = EnumerationStream(3)
it = iter(stream)
for _ in range(5):
    S = next(it)
print("after", stream.emitted, "spaces the cursor is", stream.cursor)
print(serialize_space(next(iter(EnumerationStream(3, after=stream.cursor)))))
