"""Brute-force reference implementations, independent of the package internals.

Everything here works from explicit families of open sets or explicit
boolean matrices and never calls the neighbourhood-table operators.
"""

from itertools import combinations, permutations, product as iproduct

import numpy as np


def subsets(n):
    return range(1 << n)


def generated_opens(n, family):
    """Close a subbasis under finite intersections, then under unions."""
    full = (1 << n) - 1
    basis = {full}
    for r in range(1, len(family) + 1):
        for combo in combinations(family, r):
            m = full
            for g in combo:
                m &= g
            basis.add(m)
    opens = {0}
    for b in basis:
        opens |= {o | b for o in opens}
    return opens


def upsets(nbhd):
    """Opens of a table by scanning all 2^n subsets for up-closure."""
    n = len(nbhd)
    return {g for g in subsets(n) if all(nbhd[x] & ~g == 0 for x in range(n) if g >> x & 1)}


def closure_oracle(opens, n, a):
    """Smallest closed superset, from the list of opens."""
    full = (1 << n) - 1
    best = full
    for o in opens:
        c = full & ~o
        if a & ~c == 0:
            best &= c
    return best


def interior_oracle(opens, a):
    best = 0
    for o in opens:
        if o & ~a == 0:
            best |= o
    return best


def min_nbhd_from_opens(opens, n):
    full = (1 << n) - 1
    out = []
    for x in range(n):
        m = full
        for o in opens:
            if o >> x & 1:
                m &= o
        out.append(m)
    return tuple(out)


def topologies_by_families(n):
    """Every family of subsets containing {} and X that is closed under
    pairwise union and intersection.  Feasible for n <= 4 (2^14 families)."""
    full = (1 << n) - 1
    middle = [s for s in subsets(n) if s not in (0, full)]
    found = set()
    for pick in range(1 << len(middle)):
        fam = {0, full} | {middle[i] for i in range(len(middle)) if pick >> i & 1}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            found.add(min_nbhd_from_opens(fam, n))
    return found


def preorders_by_matrices(n):
    """All reflexive transitive boolean n x n matrices, filtered from all
    2^(n^2 - n) off-diagonal patterns with numpy.  Returns neighbourhood tables."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    k = len(off)
    codes = np.arange(1 << k, dtype=np.int64)
    M = np.zeros((1 << k, n, n), dtype=np.int32)
    for i in range(n):
        M[:, i, i] = 1
    for bit, (i, j) in enumerate(off):
        M[:, i, j] = (codes >> bit) & 1
    sq = np.matmul(M, M) > 0
    ok = np.all(sq <= (M > 0), axis=(1, 2))
    tables = set()
    for m in M[ok]:
        tables.add(tuple(int(sum(int(m[i, j]) << j for j in range(n))) for i in range(n)))
    return tables


def relabel(nbhd, perm):
    n = len(nbhd)
    out = [0] * n
    for x in range(n):
        m = 0
        for y in range(n):
            if nbhd[x] >> y & 1:
                m |= 1 << perm[y]
        out[perm[x]] = m
    return tuple(out)


def homeomorphic_brute(a, b):
    if len(a) != len(b):
        return False
    return any(relabel(a, p) == tuple(b) for p in permutations(range(len(a))))


def has_isolated_point(nbhd, a):
    return any(a >> x & 1 and nbhd[x] & a == 1 << x for x in range(len(nbhd)))


def scattered_direct(nbhd, a):
    """Every nonempty subset of ``a`` has a point isolated in it."""
    b = a
    while True:
        if b and not has_isolated_point(nbhd, b):
            return False
        if b == 0:
            return True
        b = (b - 1) & a


def regular_closed_sets(opens, n):
    out = set()
    for r in subsets(n):
        if closure_oracle(opens, n, interior_oracle(opens, r)) == r:
            out.add(r)
    return out
